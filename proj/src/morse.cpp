#include "graphstat/morse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

namespace graphstat::morse {
namespace {

using cfg::Cell;
using cfg::ConfigComplex;
using core::Edge;
using core::SpanningTree;

Cell cell0(int u, int v) {
  Cell c;
  c.stationary = {u, v};
  std::sort(c.stationary.begin(), c.stationary.end());
  return c;
}

Cell cell1(int v, const Edge& e) {
  Cell c;
  c.stationary = {v};
  c.movers = {e};
  return c;
}

bool edges_share(const Edge& a, const Edge& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

// Per-dimension values aligned with the complex's cell indexing.
struct IndexedValues {
  std::vector<long long> v0, v1, v2;
};

IndexedValues index_values(const ConfigComplex& c, const CellValues& f) {
  check_input(f.size() == static_cast<std::size_t>(c.total_cells()),
              "cell-value table does not cover the complex exactly");
  IndexedValues iv;
  for (int dim = 0; dim <= 2; ++dim) {
    auto& out = dim == 0 ? iv.v0 : dim == 1 ? iv.v1 : iv.v2;
    for (const Cell& cell : c.cells(dim)) {
      auto it = f.find(cell);
      check_input(it != f.end(),
                  "cell " + cell.to_string() + " has no assigned value");
      out.push_back(it->second);
    }
  }
  return iv;
}

// Face lists with incidence signs, read off the boundary matrices.
struct Incidence {
  std::vector<std::vector<std::pair<int, int>>> faces1, cofaces0;
  std::vector<std::vector<std::pair<int, int>>> faces2, cofaces1;
};

Incidence build_incidence(const ConfigComplex& c) {
  Incidence inc;
  inc.cofaces0.resize(c.cells0.size());
  inc.faces1.resize(c.cells1.size());
  inc.cofaces1.resize(c.cells1.size());
  inc.faces2.resize(c.cells2.size());
  for (const auto& t : c.d1.entries) {
    inc.faces1[t.col].push_back({t.row, static_cast<int>(t.val)});
    inc.cofaces0[t.row].push_back({t.col, static_cast<int>(t.val)});
  }
  for (const auto& t : c.d2.entries) {
    inc.faces2[t.col].push_back({t.row, static_cast<int>(t.val)});
    inc.cofaces1[t.row].push_back({t.col, static_cast<int>(t.val)});
  }
  return inc;
}

// Matched-partner tables extracted from a gradient field.
struct MatchTables {
  std::vector<int> up0, up1;      // 0-cell -> 1-cell, 1-cell -> 2-cell, -1 none
  std::vector<int> down1, down2;  // partner in the dimension below, -1 none
};

MatchTables match_tables(const ConfigComplex& c, const GradientField& field) {
  MatchTables mt;
  mt.up0.assign(c.cells0.size(), -1);
  mt.down1.assign(c.cells1.size(), -1);
  mt.up1.assign(c.cells1.size(), -1);
  mt.down2.assign(c.cells2.size(), -1);
  for (const auto& [low, high] : field.matching) {
    if (low.dim() == 0) {
      int i = c.index_of(low), j = c.index_of(high);
      check_internal(mt.up0[i] == -1 && mt.down1[j] == -1,
                     "cell matched twice in the gradient field");
      mt.up0[i] = j;
      mt.down1[j] = i;
    } else {
      int j = c.index_of(low), k = c.index_of(high);
      check_internal(mt.up1[j] == -1 && mt.down2[k] == -1,
                     "cell matched twice in the gradient field");
      mt.up1[j] = k;
      mt.down2[k] = j;
    }
  }
  return mt;
}

// Depth-first cycle check on a digraph given as adjacency lists.
bool digraph_acyclic(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

}  // namespace

long long MorseF1::value_of_vertex(int v) const {
  auto it = vertex_value.find(v);
  check_input(it != vertex_value.end(), "vertex has no Morse value");
  return it->second;
}

long long MorseF1::value_of_edge(const Edge& e) const {
  auto it = edge_value.find(e);
  check_input(it != edge_value.end(), "edge has no Morse value");
  return it->second;
}

std::vector<int> MorseF1::critical_vertices() const { return {tree.root}; }

std::vector<Edge> MorseF1::critical_edges() const {
  return tree.deleted_edges;
}

MorseF1 perfect_morse_f1(const core::Graph& g, const SpanningTree& t) {
  check_input(core::is_connected(g), "graph must be connected");
  check_input(static_cast<int>(t.label.size()) == g.num_vertices(),
              "spanning tree does not label this graph");
  MorseF1 f;
  f.tree = t;
  for (int v : g.vertices()) {
    f.vertex_value[v] = 2LL * (t.label.at(v) - 1);
  }
  for (const Edge& e : g.edges()) {
    long long m = std::max(f.vertex_value[e.first], f.vertex_value[e.second]);
    f.edge_value[e] = t.is_tree_edge(e) ? m : m + 2;
  }
  return f;
}

CellValues trial_f2(const ConfigComplex& c, const MorseF1& f1) {
  check_input(c.particles == 2,
              "the trial function lives on a two-particle complex");
  for (int v : c.graph.vertices()) {
    check_input(f1.vertex_value.count(v) != 0,
                "one-particle function does not cover the complex's graph");
  }
  CellValues f;
  for (const Cell& cell : c.cells0) {
    f[cell] = f1.value_of_vertex(cell.stationary[0]) +
              f1.value_of_vertex(cell.stationary[1]);
  }
  for (const Cell& cell : c.cells1) {
    f[cell] = f1.value_of_vertex(cell.stationary[0]) +
              f1.value_of_edge(cell.movers[0]);
  }
  for (const Cell& cell : c.cells2) {
    f[cell] =
        f1.value_of_edge(cell.movers[0]) + f1.value_of_edge(cell.movers[1]);
  }
  return f;
}

FixReport fix_to_morse(const ConfigComplex& c, const CellValues& trial,
                       const MorseF1& f1, FixPolicy policy,
                       std::optional<unsigned long long> seed) {
  index_values(c, trial);  // completeness check
  const SpanningTree& t = f1.tree;
  Rng rng(seed.value_or(0));
  // Given the two candidate flanks, returns the one selected by the policy;
  // "lower" means the smaller stationary tree label.
  auto choose = [&](const Cell& a, const Cell& b) -> const Cell& {
    int la = t.label.at(a.stationary[0]);
    int lb = t.label.at(b.stationary[0]);
    const Cell& lower = la < lb ? a : b;
    const Cell& upper = la < lb ? b : a;
    switch (policy) {
      case FixPolicy::Lower:
        return lower;
      case FixPolicy::Upper:
        return upper;
      default:
        return rng() % 2 == 0 ? lower : upper;
    }
  };

  FixReport rep;
  rep.f2 = trial;
  std::set<Cell> raised;
  // Step 1: every two-cell with both edges in the tree rises by one together
  // with one of the two flank one-cells spanned by the child endpoints.
  for (const Cell& two : c.cells2) {
    const Edge& a = two.movers[0];
    const Edge& b = two.movers[1];
    if (!t.is_tree_edge(a) || !t.is_tree_edge(b)) continue;
    Cell fa = cell1(t.child_of(a), b);
    Cell fb = cell1(t.child_of(b), a);
    const Cell& pick = choose(fa, fb);
    rep.f2[two] += 1;
    rep.f2[pick] += 1;
    check_internal(raised.insert(pick).second,
                   "flank one-cell raised twice during the repair");
    rep.two_cell_fixes.push_back({two, pick});
  }
  // Step 2: every vertex-pair zero-cell whose members hang from the same
  // parent raises one of the two cells that park one member on the other's
  // parent edge; the raised cell becomes critical.
  for (const Cell& zero : c.cells0) {
    int u = zero.stationary[0], v = zero.stationary[1];
    auto pu = t.parent.find(u), pv = t.parent.find(v);
    if (pu == t.parent.end() || pv == t.parent.end()) continue;
    if (pu->second != pv->second) continue;
    Cell fu = cell1(u, t.parent_edge(v));
    Cell fv = cell1(v, t.parent_edge(u));
    const Cell& pick = choose(fu, fv);
    rep.f2[pick] += 1;
    check_internal(raised.insert(pick).second,
                   "sibling one-cell raised twice during the repair");
    rep.zero_cell_fixes.push_back({zero, pick});
  }

  MorseVerdict verdict = is_discrete_morse(c, rep.f2);
  check_internal(verdict.valid,
                 "repaired function still violates the Morse conditions");
  return rep;
}

MorseVerdict is_discrete_morse(const ConfigComplex& c, const CellValues& f) {
  IndexedValues iv = index_values(c, f);
  Incidence inc = build_incidence(c);
  MorseVerdict out;
  auto flag = [&](const Cell& cell, const std::string& reason) {
    out.violations.push_back({cell, reason});
  };
  for (std::size_t i = 0; i < c.cells0.size(); ++i) {
    int up = 0;
    for (const auto& [j, s] : inc.cofaces0[i]) {
      if (iv.v1[j] <= iv.v0[i]) ++up;
    }
    if (up > 1) {
      flag(c.cells0[i],
           std::to_string(up) + " cofaces with value not above the cell");
    }
  }
  for (std::size_t j = 0; j < c.cells1.size(); ++j) {
    int down = 0, up = 0;
    for (const auto& [i, s] : inc.faces1[j]) {
      if (iv.v0[i] >= iv.v1[j]) ++down;
    }
    for (const auto& [k, s] : inc.cofaces1[j]) {
      if (iv.v2[k] <= iv.v1[j]) ++up;
    }
    if (up > 1) {
      flag(c.cells1[j],
           std::to_string(up) + " cofaces with value not above the cell");
    }
    if (down > 1) {
      flag(c.cells1[j],
           std::to_string(down) + " faces with value not below the cell");
    }
    if (up == 1 && down == 1) {
      flag(c.cells1[j],
           "both a non-raising coface and a non-lowering face");
    }
  }
  for (std::size_t k = 0; k < c.cells2.size(); ++k) {
    int down = 0;
    for (const auto& [j, s] : inc.faces2[k]) {
      if (iv.v1[j] >= iv.v2[k]) ++down;
    }
    if (down > 1) {
      flag(c.cells2[k],
           std::to_string(down) + " faces with value not below the cell");
    }
  }
  out.valid = out.violations.empty();
  return out;
}

GradientField gradient_field(const ConfigComplex& c, const CellValues& f) {
  MorseVerdict verdict = is_discrete_morse(c, f);
  check_input(verdict.valid, "not a discrete Morse function");
  IndexedValues iv = index_values(c, f);
  Incidence inc = build_incidence(c);

  std::vector<int> up0(c.cells0.size(), -1), up1(c.cells1.size(), -1);
  std::vector<int> down1(c.cells1.size(), -1), down2(c.cells2.size(), -1);
  GradientField field;
  for (std::size_t i = 0; i < c.cells0.size(); ++i) {
    for (const auto& [j, s] : inc.cofaces0[i]) {
      if (iv.v1[j] <= iv.v0[i]) {
        up0[i] = j;
        down1[j] = static_cast<int>(i);
      }
    }
    if (up0[i] == -1) field.critical0.push_back(c.cells0[i]);
  }
  for (std::size_t j = 0; j < c.cells1.size(); ++j) {
    for (const auto& [k, s] : inc.cofaces1[j]) {
      if (iv.v2[k] <= iv.v1[j]) {
        check_internal(down1[j] == -1, "cell matched in both directions");
        up1[j] = k;
        down2[k] = static_cast<int>(j);
      }
    }
    if (up1[j] == -1 && down1[j] == -1) field.critical1.push_back(c.cells1[j]);
  }
  for (std::size_t k = 0; k < c.cells2.size(); ++k) {
    int exceptions = 0;
    for (const auto& [j, s] : inc.faces2[k]) {
      if (iv.v1[j] >= iv.v2[k]) ++exceptions;
    }
    check_internal(exceptions == (down2[k] == -1 ? 0 : 1),
                   "asymmetric matching at a two-cell");
    if (down2[k] == -1) field.critical2.push_back(c.cells2[k]);
  }
  for (std::size_t i = 0; i < c.cells0.size(); ++i) {
    if (up0[i] != -1) {
      field.matching.push_back({c.cells0[i], c.cells1[up0[i]]});
    }
  }
  for (std::size_t j = 0; j < c.cells1.size(); ++j) {
    if (up1[j] != -1) {
      field.matching.push_back({c.cells1[j], c.cells2[up1[j]]});
    }
  }

  // No closed V-paths: sliding along matched cells must never return.
  std::vector<std::vector<int>> adj0(c.cells0.size()), adj1(c.cells1.size());
  for (std::size_t i = 0; i < c.cells0.size(); ++i) {
    if (up0[i] == -1) continue;
    for (const auto& [i2, s] : inc.faces1[up0[i]]) {
      if (i2 != static_cast<int>(i)) adj0[i].push_back(i2);
    }
  }
  for (std::size_t j = 0; j < c.cells1.size(); ++j) {
    if (up1[j] == -1) continue;
    for (const auto& [j2, s] : inc.faces2[up1[j]]) {
      if (j2 != static_cast<int>(j)) adj1[j].push_back(j2);
    }
  }
  check_internal(digraph_acyclic(adj0) && digraph_acyclic(adj1),
                 "closed V-path in the gradient field");
  return field;
}

CriticalReport classify_critical(const ConfigComplex& c,
                                 const GradientField& field,
                                 const SpanningTree& t) {
  check_input(c.particles == 2,
              "the critical-cell description applies to two particles");
  check_input(t.order.size() >= 2 && t.label.at(t.root) == 1,
              "spanning tree does not label this graph");
  std::set<Cell> crit0(field.critical0.begin(), field.critical0.end());
  std::set<Cell> crit1(field.critical1.begin(), field.critical1.end());
  std::set<Cell> crit2(field.critical2.begin(), field.critical2.end());

  std::set<Cell> exp0, exp1, exp2;
  exp0.insert(cell0(t.root, t.order[1]));
  for (const Edge& e : t.deleted_edges) {
    for (int v : c.graph.vertices()) {
      if (v == e.first || v == e.second) continue;
      bool crit = v == t.root || edges_share(t.parent_edge(v), e);
      if (crit) exp1.insert(cell1(v, e));
    }
  }
  // Exactly one of the two candidate cells of each shared-parent vertex pair
  // is critical; expect whichever one the field actually holds (falling back
  // to the first candidate, which then shows up as missing).
  for (const Cell& zero : c.cells0) {
    int u = zero.stationary[0], v = zero.stationary[1];
    auto pu = t.parent.find(u), pv = t.parent.find(v);
    if (pu == t.parent.end() || pv == t.parent.end()) continue;
    if (pu->second != pv->second) continue;
    Cell fu = cell1(u, t.parent_edge(v));
    Cell fv = cell1(v, t.parent_edge(u));
    bool cu = crit1.count(fu) != 0, cv = crit1.count(fv) != 0;
    if (cu && cv) {
      exp1.insert(fu);  // the other one gets reported as unexpected
    } else if (cu || cv) {
      exp1.insert(cu ? fu : fv);
    } else {
      exp1.insert(fu);
    }
  }
  for (const Cell& two : c.cells2) {
    if (!t.is_tree_edge(two.movers[0]) && !t.is_tree_edge(two.movers[1])) {
      exp2.insert(two);
    }
  }

  CriticalReport rep;
  auto diff = [&](const std::set<Cell>& actual, const std::set<Cell>& expect) {
    std::set_difference(actual.begin(), actual.end(), expect.begin(),
                        expect.end(), std::back_inserter(rep.unexpected));
    std::set_difference(expect.begin(), expect.end(), actual.begin(),
                        actual.end(), std::back_inserter(rep.missing));
  };
  diff(crit0, exp0);
  diff(crit1, exp1);
  diff(crit2, exp2);
  rep.matches = rep.unexpected.empty() && rep.missing.empty();
  return rep;
}

namespace {

// Gradient flow of zero-cells: every zero-cell drains to a single critical
// zero-cell with a sign.
struct Flow0 {
  const Incidence& inc;
  const MatchTables& mt;
  const std::vector<int>& critpos;
  std::vector<int> state;
  std::vector<std::pair<int, long long>> memo;

  Flow0(const Incidence& inc_, const MatchTables& mt_,
        const std::vector<int>& critpos_)
      : inc(inc_), mt(mt_), critpos(critpos_),
        state(critpos_.size(), 0), memo(critpos_.size()) {}

  std::pair<int, long long> run(int i) {
    if (state[i] == 2) return memo[i];
    check_internal(state[i] == 0, "closed V-path among zero-cells");
    state[i] = 1;
    std::pair<int, long long> r;
    if (critpos[i] >= 0) {
      r = {critpos[i], 1};
    } else {
      int m = mt.up0[i];
      check_internal(m >= 0, "non-critical zero-cell without a partner");
      int self_sign = 0, other = -1, other_sign = 0;
      for (const auto& [i2, s] : inc.faces1[m]) {
        if (i2 == i) {
          self_sign = s;
        } else {
          other = i2;
          other_sign = s;
        }
      }
      check_internal(other >= 0, "matched one-cell is degenerate");
      auto down = run(other);
      r = {down.first, -static_cast<long long>(self_sign) * other_sign *
                           down.second};
    }
    state[i] = 2;
    memo[i] = r;
    return r;
  }
};

// Gradient flow of one-cells onto the critical one-cells.
struct Flow1 {
  const Incidence& inc;
  const MatchTables& mt;
  const std::vector<int>& critpos;
  std::vector<int> state;
  std::vector<std::map<int, long long>> memo;

  Flow1(const Incidence& inc_, const MatchTables& mt_,
        const std::vector<int>& critpos_)
      : inc(inc_), mt(mt_), critpos(critpos_),
        state(critpos_.size(), 0), memo(critpos_.size()) {}

  const std::map<int, long long>& run(int j) {
    if (state[j] == 2) return memo[j];
    check_internal(state[j] == 0, "closed V-path among one-cells");
    state[j] = 1;
    std::map<int, long long> r;
    if (critpos[j] >= 0) {
      r[critpos[j]] = 1;
    } else if (mt.up1[j] >= 0) {
      int k = mt.up1[j];
      int self_sign = 0;
      for (const auto& [j2, s] : inc.faces2[k]) {
        if (j2 == j) self_sign = s;
      }
      for (const auto& [j2, s] : inc.faces2[k]) {
        if (j2 == j) continue;
        long long factor = -static_cast<long long>(self_sign) * s;
        for (const auto& [pos, coef] : run(j2)) {
          r[pos] += factor * coef;
        }
      }
      std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    }
    // Down-matched one-cells absorb no flow at all.
    state[j] = 2;
    memo[j] = std::move(r);
    return memo[j];
  }
};

}  // namespace

MorseComplexData morse_complex(const ConfigComplex& c,
                               const GradientField& field, ExecPolicy policy) {
  Incidence inc = build_incidence(c);
  MatchTables mt = match_tables(c, field);
  MorseComplexData m;
  m.critical0 = field.critical0;
  m.critical1 = field.critical1;
  m.critical2 = field.critical2;

  std::vector<int> pos0(c.cells0.size(), -1), pos1(c.cells1.size(), -1);
  for (std::size_t p = 0; p < m.critical0.size(); ++p) {
    pos0[c.index_of(m.critical0[p])] = static_cast<int>(p);
  }
  for (std::size_t p = 0; p < m.critical1.size(); ++p) {
    pos1[c.index_of(m.critical1[p])] = static_cast<int>(p);
  }

  Flow0 flow0{inc, mt, pos0};
  Flow1 flow1{inc, mt, pos1};
  for (std::size_t j = 0; j < c.cells1.size(); ++j) flow1.run(static_cast<int>(j));

  hom::BoundaryData& b = m.boundary;
  b.c0 = static_cast<int>(m.critical0.size());
  b.c1 = static_cast<int>(m.critical1.size());
  b.c2 = static_cast<int>(m.critical2.size());
  b.d1 = {b.c0, b.c1, {}};
  b.d2 = {b.c1, b.c2, {}};

  for (int p = 0; p < b.c1; ++p) {
    int j = c.index_of(m.critical1[p]);
    std::map<int, long long> col;
    for (const auto& [i, s] : inc.faces1[j]) {
      auto [q, sign] = flow0.run(i);
      col[q] += static_cast<long long>(s) * sign;
    }
    for (const auto& [q, val] : col) {
      if (val != 0) b.d1.entries.push_back({q, p, val});
    }
  }

  // Column assembly per critical two-cell; the flow table is read-only here,
  // so the parallel kernel matches the serial one entry for entry.
  std::vector<std::vector<hom::Triplet>> cols(b.c2);
  auto assemble = [&](int q) {
    int k = c.index_of(m.critical2[q]);
    std::map<int, long long> col;
    for (const auto& [j, s] : inc.faces2[k]) {
      for (const auto& [p, coef] : flow1.memo[j]) {
        col[p] += static_cast<long long>(s) * coef;
      }
    }
    for (const auto& [p, val] : col) {
      if (val != 0) cols[q].push_back({p, q, val});
    }
  };
  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
    for (int q = 0; q < b.c2; ++q) assemble(q);
  } else {
    for (int q = 0; q < b.c2; ++q) assemble(q);
  }
  for (auto& colv : cols) {
    b.d2.entries.insert(b.d2.entries.end(), colv.begin(), colv.end());
  }

  check_internal(hom::composition_is_zero(b),
                 "Morse boundaries do not compose to zero");
  return m;
}

hom::FGAbelianGroup morse_h1(const MorseComplexData& m) {
  return hom::homology_h1(m.boundary).group;
}

MorsePipeline morse_pipeline(const core::Graph& g, FixPolicy policy,
                             std::optional<unsigned long long> seed,
                             ExecPolicy exec) {
  MorsePipeline p;
  SpanningTree t = core::spanning_tree(g);
  p.f1 = perfect_morse_f1(g, t);
  p.space = cfg::build_config_complex(g, 2, exec);
  p.trial = trial_f2(p.space, p.f1);
  p.fix = fix_to_morse(p.space, p.trial, p.f1, policy, seed);
  p.field = gradient_field(p.space, p.fix.f2);
  CriticalReport report = classify_critical(p.space, p.field, t);
  check_internal(report.matches,
                 "critical cells differ from their closed-form description");
  p.complex = morse_complex(p.space, p.field, exec);
  p.h1 = morse_h1(p.complex);
  return p;
}

}  // namespace graphstat::morse
