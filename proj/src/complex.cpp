#include "graphstat/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graphstat::cfg {

namespace {

using core::Edge;
using core::Graph;

// Visits all k-subsets of the sorted pool in lexicographic order.
template <typename F>
void for_each_combination(const std::vector<int>& pool, int k, F&& visit) {
  if (k < 0 || k > static_cast<int>(pool.size())) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> subset(k);
  while (true) {
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    visit(subset);
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<int> sorted_union(const std::vector<int>& s, int extra) {
  std::vector<int> out(s);
  out.insert(std::lower_bound(out.begin(), out.end(), extra), extra);
  return out;
}

// The four signed facets of a 2-cell, in a fixed order.
std::array<hom::Triplet, 4> two_cell_column(const ConfigComplex& cx, int col) {
  const Cell& c = cx.cells2[col];
  const Edge& e = c.movers[0];
  const Edge& f = c.movers[1];
  auto one = [&](int vertex, const Edge& mover) {
    return cx.index1.at(Cell{sorted_union(c.stationary, vertex), {mover}});
  };
  return {hom::Triplet{one(e.second, f), col, 1},
          hom::Triplet{one(e.first, f), col, -1},
          hom::Triplet{one(f.second, e), col, -1},
          hom::Triplet{one(f.first, e), col, 1}};
}

void fill_d2_serial(ConfigComplex& cx,
                    std::vector<std::array<hom::Triplet, 4>>& cols) {
  for (int j = 0; j < static_cast<int>(cx.cells2.size()); ++j)
    cols[j] = two_cell_column(cx, j);
}

void fill_d2_parallel(ConfigComplex& cx,
                      std::vector<std::array<hom::Triplet, 4>>& cols) {
  int m = static_cast<int>(cx.cells2.size());
#pragma omp parallel for schedule(static)
  for (int j = 0; j < m; ++j) cols[j] = two_cell_column(cx, j);
}

}  // namespace

bool Cell::operator<(const Cell& o) const {
  if (movers != o.movers) return movers < o.movers;
  return stationary < o.stationary;
}

std::string Cell::to_string() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < stationary.size(); ++i)
    os << (i ? " " : "") << stationary[i];
  os << " |";
  for (const Edge& e : movers) os << " (" << e.first << "," << e.second << ")";
  os << "}";
  return os.str();
}

const std::vector<Cell>& ConfigComplex::cells(int dim) const {
  check_input(dim >= 0 && dim <= 2, "cell dimension out of range");
  return dim == 0 ? cells0 : dim == 1 ? cells1 : cells2;
}

bool ConfigComplex::contains(const Cell& c) const {
  switch (c.dim()) {
    case 0:
      return index0.count(c) != 0;
    case 1:
      return index1.count(c) != 0;
    case 2:
      return index2.count(c) != 0;
    default:
      return false;
  }
}

int ConfigComplex::index_of(const Cell& c) const {
  const std::map<Cell, int>* m = c.dim() == 0   ? &index0
                                 : c.dim() == 1 ? &index1
                                 : c.dim() == 2 ? &index2
                                                : nullptr;
  check_input(m != nullptr, "cell dimension out of range");
  auto it = m->find(c);
  check_input(it != m->end(), "cell " + c.to_string() + " is not in the complex");
  return it->second;
}

hom::BoundaryData ConfigComplex::boundary_data() const {
  hom::BoundaryData b;
  b.c0 = static_cast<int>(cells0.size());
  b.c1 = static_cast<int>(cells1.size());
  b.c2 = static_cast<int>(cells2.size());
  b.d1 = d1;
  b.d2 = d2;
  return b;
}

ConfigComplex build_config_complex(const Graph& g, int n, ExecPolicy policy,
                                   bool require_sufficient) {
  check_input(n >= 1, "particle count must be positive");
  check_input(core::is_connected(g), "configuration space needs a connected graph");
  check_input(n <= g.num_vertices(), "more particles than vertices");
  if (require_sufficient)
    check_input(core::sufficiently_subdivided(g, n),
                "graph is not sufficiently subdivided for this particle count");

  ConfigComplex cx;
  cx.graph = g;
  cx.particles = n;
  const auto& vs = g.vertices();

  for_each_combination(vs, n,
                       [&](const std::vector<int>& s) { cx.cells0.push_back({s, {}}); });

  for (const Edge& e : g.edges()) {
    std::vector<int> pool;
    for (int v : vs)
      if (v != e.first && v != e.second) pool.push_back(v);
    for_each_combination(pool, n - 1, [&](const std::vector<int>& s) {
      cx.cells1.push_back({s, {e}});
    });
  }

  if (n >= 2) {
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
      for (size_t j = i + 1; j < es.size(); ++j) {
        const Edge& e = es[i];
        const Edge& f = es[j];
        if (e.first == f.first || e.first == f.second || e.second == f.first ||
            e.second == f.second)
          continue;
        std::vector<int> pool;
        for (int v : vs)
          if (v != e.first && v != e.second && v != f.first && v != f.second)
            pool.push_back(v);
        for_each_combination(pool, n - 2, [&](const std::vector<int>& s) {
          cx.cells2.push_back({s, {e, f}});
        });
      }
    }
  }

  for (int i = 0; i < static_cast<int>(cx.cells0.size()); ++i)
    cx.index0[cx.cells0[i]] = i;
  for (int i = 0; i < static_cast<int>(cx.cells1.size()); ++i)
    cx.index1[cx.cells1[i]] = i;
  for (int i = 0; i < static_cast<int>(cx.cells2.size()); ++i)
    cx.index2[cx.cells2[i]] = i;

  cx.d1.rows = static_cast<int>(cx.cells0.size());
  cx.d1.cols = static_cast<int>(cx.cells1.size());
  for (int j = 0; j < cx.d1.cols; ++j) {
    const Cell& c = cx.cells1[j];
    const Edge& e = c.movers[0];
    cx.d1.entries.push_back(
        {cx.index0.at(Cell{sorted_union(c.stationary, e.second), {}}), j, 1});
    cx.d1.entries.push_back(
        {cx.index0.at(Cell{sorted_union(c.stationary, e.first), {}}), j, -1});
  }

  cx.d2.rows = static_cast<int>(cx.cells1.size());
  cx.d2.cols = static_cast<int>(cx.cells2.size());
  std::vector<std::array<hom::Triplet, 4>> cols(cx.cells2.size());
  if (policy == ExecPolicy::Parallel)
    fill_d2_parallel(cx, cols);
  else
    fill_d2_serial(cx, cols);
  for (const auto& col : cols)
    for (const auto& t : col) cx.d2.entries.push_back(t);
  return cx;
}

Loop ab_loop(const std::vector<int>& cycle, const std::vector<int>& rest) {
  check_input(cycle.size() >= 3, "cycle loop needs at least three vertices");
  Loop loop;
  int m = static_cast<int>(cycle.size());
  for (int i = 0; i < m; ++i) {
    Step s;
    s.stationary = rest;
    std::sort(s.stationary.begin(), s.stationary.end());
    s.tail = cycle[i];
    s.head = cycle[(i + 1) % m];
    loop.push_back(s);
  }
  return loop;
}

Loop y_loop(int center, const std::array<int, 3>& arms,
            const std::vector<int>& rest) {
  auto with = [&](int extra) {
    std::vector<int> s(rest);
    s.push_back(extra);
    std::sort(s.begin(), s.end());
    return s;
  };
  int a1 = arms[0], a2 = arms[1], a3 = arms[2];
  return Loop{{with(a1), center, a2}, {with(a2), a1, center},
              {with(a2), center, a3}, {with(a3), a2, center},
              {with(a3), center, a1}, {with(a1), a3, center}};
}

Loop exchange_loop(const std::vector<int>& cycle, int k,
                   const std::vector<int>& rest) {
  int m = static_cast<int>(cycle.size());
  check_input(m >= 3, "cycle loop needs at least three vertices");
  check_input(k >= 1 && k < m, "particle pack must leave an empty arc");
  if (k == 1) return ab_loop(cycle, rest);
  Loop loop;
  auto at = [&](int pos) { return cycle[((pos % m) + m) % m]; };
  auto step = [&](std::vector<int> stay, int tail, int head) {
    stay.insert(stay.end(), rest.begin(), rest.end());
    std::sort(stay.begin(), stay.end());
    loop.push_back({std::move(stay), tail, head});
  };
  // Lead walks the empty arc from slot k-1 to slot m-1.
  for (int hop = 0; hop < m - k; ++hop) {
    std::vector<int> stay;
    for (int t = 0; t < k - 1; ++t) stay.push_back(at(t));
    step(std::move(stay), at(k - 1 + hop), at(k + hop));
  }
  // The rest of the pack closes up one slot, front to back.
  for (int t = k - 2; t >= 0; --t) {
    std::vector<int> stay{at(m - 1)};
    for (int s = 0; s < t; ++s) stay.push_back(at(s));
    for (int s = t + 2; s < k; ++s) stay.push_back(at(s));
    step(std::move(stay), at(t), at(t + 1));
  }
  // The lead's last hop restores the starting configuration.
  {
    std::vector<int> stay;
    for (int s = 1; s < k; ++s) stay.push_back(at(s));
    step(std::move(stay), at(m - 1), at(0));
  }
  return loop;
}

std::vector<Int> loop_to_chain(const ConfigComplex& cx, const Loop& loop) {
  check_input(!loop.empty(), "empty loop");
  std::vector<Int> chain(cx.cells1.size(), 0);
  std::vector<std::set<int>> configs;
  for (const Step& s : loop) {
    check_input(s.tail != s.head, "degenerate step");
    check_input(cx.graph.has_edge(s.tail, s.head),
                "step uses a non-edge of the graph");
    std::set<int> stat(s.stationary.begin(), s.stationary.end());
    check_input(static_cast<int>(stat.size()) == cx.particles - 1,
                "step has the wrong number of stationary particles");
    check_input(!stat.count(s.tail) && !stat.count(s.head),
                "moving edge touches a stationary particle");
    std::set<int> before(stat), after(stat);
    before.insert(s.tail);
    after.insert(s.head);
    if (!configs.empty())
      check_input(configs.back() == before, "steps do not chain up");
    else
      configs.push_back(before);
    configs.push_back(after);

    Cell cell{std::vector<int>(s.stationary.begin(), s.stationary.end()),
              {core::make_edge(s.tail, s.head)}};
    std::sort(cell.stationary.begin(), cell.stationary.end());
    int idx = cx.index_of(cell);
    chain[idx] += (s.tail < s.head) ? 1 : -1;
  }
  check_input(configs.back() == configs.front(), "loop does not close");
  return chain;
}

nlohmann::ordered_json complex_to_json(const ConfigComplex& cx) {
  nlohmann::ordered_json j;
  auto cell_json = [](const Cell& c) {
    nlohmann::ordered_json jc = nlohmann::ordered_json::array();
    jc.push_back(c.dim());
    jc.push_back(c.stationary);
    nlohmann::ordered_json movers = nlohmann::ordered_json::array();
    for (const Edge& e : c.movers)
      movers.push_back(std::vector<int>{e.first, e.second});
    jc.push_back(movers);
    return jc;
  };
  j["particles"] = cx.particles;
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto* cells : {&cx.cells0, &cx.cells1, &cx.cells2})
    for (const Cell& c : *cells) j["cells"].push_back(cell_json(c));
  auto mat_json = [](const hom::SparseMat& m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& t : m.entries)
      a.push_back(std::vector<long long>{t.row, t.col, t.val});
    return a;
  };
  j["d1"] = mat_json(cx.d1);
  j["d2"] = mat_json(cx.d2);
  return j;
}

}  // namespace graphstat::cfg
