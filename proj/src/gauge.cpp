#include "graphstat/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <omp.h>

#include "graphstat/smith.hpp"

namespace graphstat::gauge {

namespace {

cfg::Cell one_cell(std::vector<int> stationary, int a, int b) {
  cfg::Cell c;
  std::sort(stationary.begin(), stationary.end());
  c.stationary = std::move(stationary);
  c.movers = {core::make_edge(a, b)};
  return c;
}

// Per-column view of a sparse boundary matrix: for each column the list of
// (row, value) pairs.
std::vector<std::vector<std::pair<int, long long>>> columns_of(
    const hom::SparseMat& m) {
  std::vector<std::vector<std::pair<int, long long>>> cols(m.cols);
  for (const hom::Triplet& t : m.entries) cols[t.col].push_back({t.row, t.val});
  return cols;
}

}  // namespace

Phase phase_mod1(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  Int q = num / den;              // truncates toward zero
  if (num < 0 && q * den != num) --q;  // floor for negatives
  return x - Rat(q);
}

Phase GaugePotential::directed(const std::vector<int>& stationary, int tail,
                               int head) const {
  auto it = values.find(one_cell(stationary, tail, head));
  if (it == values.end()) return Rat(0);
  return tail < head ? it->second : phase_mod1(-it->second);
}

void GaugePotential::set_directed(const std::vector<int>& stationary, int tail,
                                  int head, const Rat& phase) {
  cfg::Cell c = one_cell(stationary, tail, head);
  Phase v = phase_mod1(tail < head ? phase : -phase);
  if (v == 0)
    values.erase(c);
  else
    values[c] = v;
}

Phase OneParticlePotential::directed(int tail, int head) const {
  auto it = values.find(core::make_edge(tail, head));
  if (it == values.end()) return Rat(0);
  return tail < head ? it->second : phase_mod1(-it->second);
}

void OneParticlePotential::set_directed(int tail, int head, const Rat& phase) {
  core::Edge e = core::make_edge(tail, head);
  Phase v = phase_mod1(tail < head ? phase : -phase);
  if (v == 0)
    values.erase(e);
  else
    values[e] = v;
}

void validate_potential(const cfg::ConfigComplex& c, const GaugePotential& omega) {
  check_input(omega.particles == c.particles,
              "potential particle count does not match the complex");
  for (const auto& [cell, phase] : omega.values) {
    check_input(cell.dim() == 1, "potential entry is not a 1-cell");
    check_input(c.contains(cell),
                "potential entry " + cell.to_string() + " is not a 1-cell of the complex");
    check_input(phase >= 0 && phase < 1, "potential phase out of [0,1)");
  }
}

TopologicalVerdict is_topological(const cfg::ConfigComplex& c,
                                  const GaugePotential& omega,
                                  ExecPolicy policy) {
  validate_potential(c, omega);
  auto cols = columns_of(c.d2);
  int n2 = static_cast<int>(c.cells2.size());
  std::vector<char> bad(n2, 0);

  auto scan_one = [&](int j) {
    Rat total(0);
    for (const auto& [row, val] : cols[j])
      total += Rat(val) * Rat(omega.directed(c.cells1[row].stationary,
                                             c.cells1[row].movers[0].first,
                                             c.cells1[row].movers[0].second));
    if (phase_mod1(total) != 0) bad[j] = 1;
  };

  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n2; ++j) scan_one(j);
  } else {
    for (int j = 0; j < n2; ++j) scan_one(j);
  }

  TopologicalVerdict verdict;
  for (int j = 0; j < n2; ++j)
    if (bad[j]) verdict.offending.push_back(c.cells2[j]);
  verdict.topological = verdict.offending.empty();
  return verdict;
}

Phase flux(const cfg::ConfigComplex& c, const GaugePotential& omega,
           const cfg::Loop& loop) {
  validate_potential(c, omega);
  std::vector<Int> chain = loop_to_chain(c, loop);
  Rat total(0);
  for (size_t j = 0; j < chain.size(); ++j) {
    if (chain[j] == 0) continue;
    const cfg::Cell& cell = c.cells1[j];
    total += Rat(chain[j]) * Rat(omega.directed(cell.stationary, cell.movers[0].first,
                                                cell.movers[0].second));
  }
  return phase_mod1(total);
}

bool is_pure_ab(const cfg::ConfigComplex& c, const GaugePotential& omega) {
  validate_potential(c, omega);
  std::map<core::Edge, std::set<Phase>> seen;
  for (const cfg::Cell& cell : c.cells1)
    seen[cell.movers[0]].insert(
        omega.directed(cell.stationary, cell.movers[0].first, cell.movers[0].second));
  for (const auto& [e, phases] : seen)
    if (phases.size() > 1) return false;
  return true;
}

bool is_pure_statistics(const cfg::ConfigComplex& c, const GaugePotential& omega) {
  validate_potential(c, omega);
  std::map<core::Edge, Rat> sums;
  for (const cfg::Cell& cell : c.cells1)
    sums[cell.movers[0]] +=
        omega.directed(cell.stationary, cell.movers[0].first, cell.movers[0].second);
  for (const auto& [e, total] : sums)
    if (phase_mod1(total) != 0) return false;
  return true;
}

std::pair<GaugePotential, GaugePotential> decompose_ab_s(
    const cfg::ConfigComplex& c, const GaugePotential& omega) {
  check_input(c.particles == 2, "the AB/statistics split is a two-particle notion");
  int nv = c.graph.num_vertices();
  check_input(nv >= 3, "the AB/statistics split needs at least three vertices");
  validate_potential(c, omega);

  // Average the canonical-direction phase of each edge over the spectator.
  std::map<core::Edge, Rat> sum;
  std::map<core::Edge, int> count;
  for (const cfg::Cell& cell : c.cells1) {
    sum[cell.movers[0]] += omega.directed(cell.stationary, cell.movers[0].first,
                                          cell.movers[0].second);
    count[cell.movers[0]] += 1;
  }

  GaugePotential ab, s;
  ab.particles = s.particles = 2;
  for (const cfg::Cell& cell : c.cells1) {
    const core::Edge& e = cell.movers[0];
    check_internal(count[e] == nv - 2, "spectator count mismatch in decompose");
    Rat avg = sum[e] / Rat(nv - 2);
    Rat value = omega.directed(cell.stationary, e.first, e.second);
    ab.set_directed(cell.stationary, e.first, e.second, avg);
    s.set_directed(cell.stationary, e.first, e.second, value - avg);
  }
  check_internal(is_pure_ab(c, ab), "AB part is spectator-dependent");
  check_internal(is_pure_statistics(c, s), "statistics part has nonzero average");
  return {std::move(ab), std::move(s)};
}

OneParticlePotential ab_to_one_particle(const cfg::ConfigComplex& c,
                                        const GaugePotential& omega) {
  check_input(is_pure_ab(c, omega), "potential is not pure Aharonov-Bohm");
  OneParticlePotential one;
  for (const cfg::Cell& cell : c.cells1)
    one.set_directed(cell.movers[0].first, cell.movers[0].second,
                     omega.directed(cell.stationary, cell.movers[0].first,
                                    cell.movers[0].second));
  return one;
}

namespace {

// Exact rational lift of a topological potential: representatives congruent
// to the stored phases mod 1 whose signed sum around every 2-cell is exactly
// zero.  Found by shifting the canonical representatives by an integer
// 1-cochain solving d^T m = k, where k collects the (integer) 2-cell sums of
// the representatives.  Solvable over the integers exactly when the flux
// vanishes on the torsion of H_1.
std::map<cfg::Cell, Rat> closed_lift(const cfg::ConfigComplex& c,
                                     const GaugePotential& omega) {
  int n1 = static_cast<int>(c.cells1.size());
  int n2 = static_cast<int>(c.cells2.size());
  std::vector<Rat> rep(n1, Rat(0));
  for (int j = 0; j < n1; ++j)
    rep[j] = omega.directed(c.cells1[j].stationary, c.cells1[j].movers[0].first,
                            c.cells1[j].movers[0].second);

  std::vector<Int> shift(n1, Int(0));
  if (n2 > 0) {
    auto cols = columns_of(c.d2);
    hom::Mat a = hom::mat_zero(n2, n1);
    std::vector<Int> k(n2, Int(0));
    for (int col = 0; col < n2; ++col) {
      Rat total(0);
      for (const auto& [row, val] : cols[col]) {
        a[col][row] = Int(val);
        total += Rat(val) * rep[row];
      }
      check_internal(boost::multiprecision::denominator(total) == 1,
                     "2-cell sum of a topological potential must be an integer");
      k[col] = boost::multiprecision::numerator(total);
    }

    hom::SmithResult snf = hom::smith_normal_form(a, true);
    // Solve a * shift = k through U a V = D: y = D^+ (U k), shift = V y.
    std::vector<Int> uk(n2, Int(0));
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n2; ++j) uk[i] += snf.u[i][j] * k[j];
    std::vector<Int> y(n1, Int(0));
    int diag_len = static_cast<int>(snf.diag.size());
    for (int i = 0; i < n2; ++i) {
      Int d = i < diag_len ? snf.diag[i] : Int(0);
      if (d == 0) {
        check_input(uk[i] == 0,
                    "flux obstruction: the potential cannot be transported exactly");
      } else {
        check_input(uk[i] % d == 0,
                    "torsion flux obstruction: the potential cannot be "
                    "transported through a subdivision");
        if (i < n1) y[i] = uk[i] / d;
      }
    }
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n1; ++j) shift[i] += snf.v[i][j] * y[j];
  }

  std::map<cfg::Cell, Rat> lift;
  for (int j = 0; j < n1; ++j) lift[c.cells1[j]] = rep[j] - Rat(shift[j]);
  return lift;
}

}  // namespace

SubdividedPotential subdivide_potential(const core::Graph& g, const core::Edge& e,
                                        const GaugePotential& omegabar) {
  check_input(g.has_edge(e.first, e.second), "edge to subdivide is not in the graph");
  cfg::ConfigComplex old_cx = cfg::build_config_complex(g, 2, ExecPolicy::Serial);
  check_input(is_topological(old_cx, omegabar, ExecPolicy::Serial).topological,
              "only topological potentials can be carried through a subdivision");

  std::map<cfg::Cell, Rat> lift = closed_lift(old_cx, omegabar);
  // Exact directed phase of an old 1-cell under the lift.
  auto lifted = [&](int spectator, int tail, int head) -> Rat {
    auto it = lift.find(one_cell({spectator}, tail, head));
    check_internal(it != lift.end(), "lift lookup outside the old complex");
    return tail < head ? it->second : -it->second;
  };

  int p = e.first, q = e.second;
  int a = g.max_vertex_id() + 1;
  std::vector<int> verts = g.vertices();
  verts.push_back(a);
  std::vector<core::Edge> edges;
  for (const core::Edge& f : g.edges())
    if (!(f == e)) edges.push_back(f);
  edges.push_back(core::make_edge(p, a));
  edges.push_back(core::make_edge(a, q));
  core::Graph sub(std::move(verts), std::move(edges));

  cfg::ConfigComplex new_cx = cfg::build_config_complex(sub, 2, ExecPolicy::Serial);
  core::Edge half_p = core::make_edge(p, a);
  core::Edge half_q = core::make_edge(a, q);
  Rat half(1, 2);

  GaugePotential out;
  out.particles = 2;
  for (const cfg::Cell& cell : new_cx.cells1) {
    int i = cell.stationary[0];
    const core::Edge& mv = cell.movers[0];
    Rat value(0);
    if (mv == half_p) {
      // Canonical direction p -> a (the midpoint id is the largest).
      value = (i == q) ? Rat(0) : half * lifted(i, p, q);
    } else if (mv == half_q) {
      // Canonical direction q -> a, the reverse of a -> q.
      value = (i == p) ? Rat(0) : -(half * lifted(i, p, q));
    } else if (i == a) {
      int u = mv.first, v = mv.second;
      if (u == p || u == q) {
        int sbar = (u == p) ? q : p;
        value = lifted(sbar, u, v) + half * lifted(v, sbar, u);
      } else if (v == p || v == q) {
        int sbar = (v == p) ? q : p;
        value = -(lifted(sbar, v, u) + half * lifted(u, sbar, v));
      } else {
        value = half * (lifted(p, u, v) + lifted(q, u, v));
      }
    } else {
      value = lifted(i, mv.first, mv.second);
    }
    out.set_directed(cell.stationary, mv.first, mv.second, value);
  }

  check_internal(is_topological(new_cx, out, ExecPolicy::Serial).topological,
                 "transported potential lost the zero-flux property");
  return {std::move(sub), a, std::move(out)};
}

TransportResult transport_to_subdivision(const core::Graph& g,
                                         const GaugePotential& omega, int n) {
  check_input(n >= 1, "particle count must be at least 1");
  int k = std::max(n - 2, 0);
  core::Graph cur = g;
  GaugePotential cur_omega = omega;
  for (const core::Edge& e : g.edges()) {
    int prev = e.first;
    for (int i = 0; i < k; ++i) {
      SubdividedPotential step =
          subdivide_potential(cur, core::make_edge(prev, e.second), cur_omega);
      prev = step.inserted_vertex;
      cur = std::move(step.graph);
      cur_omega = std::move(step.omega);
    }
  }
  auto [target, map] = core::subdivide(g, n);
  check_internal(cur == target, "chained subdivision disagrees with subdivide()");
  return {std::move(cur), std::move(map), std::move(cur_omega)};
}

GaugePotential lift_to_n(const core::Graph& g_sub,
                         const OneParticlePotential& omega1,
                         const GaugePotential& omega_s, int n,
                         ExecPolicy policy) {
  check_input(n >= 1, "particle count must be at least 1");
  for (const auto& [e, phase] : omega1.values)
    check_input(g_sub.has_edge(e.first, e.second),
                "one-particle potential names a missing edge");
  cfg::ConfigComplex two = cfg::build_config_complex(g_sub, 2, policy);
  check_input(is_pure_statistics(two, omega_s),
              "statistics part does not average to zero");
  check_input(is_topological(two, omega_s, policy).topological,
              "statistics part is not topological");

  cfg::ConfigComplex cx = cfg::build_config_complex(g_sub, n, policy);
  int n1 = static_cast<int>(cx.cells1.size());
  std::vector<Rat> vals(n1, Rat(0));

  auto fill_one = [&](int j) {
    const cfg::Cell& cell = cx.cells1[j];
    int t = cell.movers[0].first, h = cell.movers[0].second;
    Rat v = omega1.directed(t, h);
    for (int spectator : cell.stationary)
      v += omega_s.directed({spectator}, t, h);
    vals[j] = phase_mod1(v);
  };

  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n1; ++j) fill_one(j);
  } else {
    for (int j = 0; j < n1; ++j) fill_one(j);
  }

  GaugePotential out;
  out.particles = n;
  for (int j = 0; j < n1; ++j)
    if (vals[j] != 0) out.values[cx.cells1[j]] = vals[j];
  check_internal(is_topological(cx, out, policy).topological,
                 "lifted potential lost the zero-flux property");
  return out;
}

GaugePotential random_topological_potential(
    const cfg::ConfigComplex& c, const morse::GradientField& field,
    const std::map<cfg::Cell, Phase>& phases) {
  std::set<cfg::Cell> critical1(field.critical1.begin(), field.critical1.end());
  for (const auto& [cell, phase] : phases)
    check_input(critical1.count(cell) > 0,
                "phase prescribed on a cell that is not a critical 1-cell");
  auto phase_of = [&](const cfg::Cell& cell) -> Rat {
    auto it = phases.find(cell);
    return it == phases.end() ? Rat(0) : phase_mod1(it->second);
  };

  // The prescribed phases must kill every column of the discrete Morse
  // boundary mod 1, or no topological extension exists.
  morse::MorseComplexData mc = morse::morse_complex(c, field, ExecPolicy::Serial);
  auto mcols = columns_of(mc.boundary.d2);
  for (const auto& col : mcols) {
    Rat total(0);
    for (const auto& [row, val] : col) total += Rat(val) * phase_of(mc.critical1[row]);
    check_input(phase_mod1(total) == 0,
                "phases violate a boundary relation of the critical cells");
  }

  // Matching in index form: which 2-cell forces each up-matched 1-cell.
  int n1 = static_cast<int>(c.cells1.size());
  std::vector<int> up_pair(n1, -1);
  std::vector<char> down(n1, 0);
  for (const auto& [lo, hi] : field.matching) {
    if (lo.dim() == 1) up_pair[c.index_of(lo)] = c.index_of(hi);
    if (hi.dim() == 1) down[c.index_of(hi)] = 1;
  }
  std::vector<int> crit(n1, 0);
  for (const cfg::Cell& cell : field.critical1) crit[c.index_of(cell)] = 1;
  auto cols2 = columns_of(c.d2);

  // Phase of each 1-cell: prescribed on critical cells, zero on down-matched
  // cells, and forced through the pairing 2-cell's zero-flux condition on
  // up-matched cells.  The recursion bottoms out because the other faces of a
  // pairing 2-cell are matched strictly lower.
  std::vector<std::optional<Rat>> memo(n1);
  std::vector<char> active(n1, 0);
  auto value = [&](auto&& self, int j) -> Rat {
    if (memo[j]) return *memo[j];
    check_internal(!active[j], "circular propagation through pairing 2-cells");
    active[j] = 1;
    Rat v(0);
    if (crit[j]) {
      v = phase_of(c.cells1[j]);
    } else if (down[j]) {
      v = Rat(0);
    } else {
      int k = up_pair[j];
      check_internal(k >= 0, "1-cell neither critical nor matched");
      long long self_sign = 0;
      Rat rest(0);
      for (const auto& [row, val] : cols2[k]) {
        if (row == j)
          self_sign = val;
        else
          rest += Rat(val) * self(self, row);
      }
      check_internal(self_sign == 1 || self_sign == -1,
                     "up-matched cell missing from its pairing 2-cell");
      v = phase_mod1(-Rat(self_sign) * rest);
    }
    active[j] = 0;
    memo[j] = v;
    return v;
  };

  GaugePotential out;
  out.particles = c.particles;
  for (int j = 0; j < n1; ++j) {
    Rat v = phase_mod1(value(value, j));
    if (v != 0) out.values[c.cells1[j]] = v;
  }
  check_internal(is_topological(c, out, ExecPolicy::Serial).topological,
                 "propagated potential lost the zero-flux property");
  return out;
}

std::map<cfg::Cell, Phase> random_admissible_phases(
    const morse::MorseComplexData& m, Rng& rng) {
  int n1 = static_cast<int>(m.critical1.size());
  if (n1 == 0) return {};

  // p annihilates the Morse boundary mod 1 iff, writing U d2 V = D, the
  // coordinates z = U^{-T} p satisfy z_i d_i in Z on the diagonal.  Sample z
  // exactly and return p = U^T z.
  hom::SmithResult snf = hom::smith_normal_form(hom::to_dense(m.boundary.d2), true);
  std::vector<Rat> z(n1, Rat(0));
  int diag_len = static_cast<int>(snf.diag.size());
  for (int i = 0; i < n1; ++i) {
    Int d = i < diag_len ? snf.diag[i] : Int(0);
    if (d != 0) {
      long long dl = d.convert_to<long long>();
      z[i] = Rat(static_cast<long long>(rng() % static_cast<unsigned long long>(dl)), dl);
    } else {
      z[i] = Rat(static_cast<long long>(rng() % 8), 8);
    }
  }
  std::map<cfg::Cell, Phase> phases;
  for (int j = 0; j < n1; ++j) {
    Rat p(0);
    for (int i = 0; i < n1; ++i) p += Rat(snf.u[i][j]) * z[i];
    p = phase_mod1(p);
    if (p != 0) phases[m.critical1[j]] = p;
  }
  return phases;
}

TightBindingMatrix tight_binding(const cfg::ConfigComplex& c,
                                 const GaugePotential& omega) {
  validate_potential(c, omega);
  int n0 = static_cast<int>(c.cells0.size());
  TightBindingMatrix h(n0, std::vector<std::complex<double>>(n0, {0.0, 0.0}));
  auto cols = columns_of(c.d1);
  const double tau = 2.0 * std::acos(-1.0);
  for (int j = 0; j < static_cast<int>(c.cells1.size()); ++j) {
    int from = -1, to = -1;  // tail-side and head-side configurations
    for (const auto& [row, val] : cols[j]) {
      if (val > 0)
        to = row;
      else
        from = row;
    }
    check_internal(from >= 0 && to >= 0, "1-cell with a degenerate boundary");
    const cfg::Cell& cell = c.cells1[j];
    double turns = omega
                       .directed(cell.stationary, cell.movers[0].first,
                                 cell.movers[0].second)
                       .convert_to<double>();
    h[to][from] = std::polar(1.0, tau * turns);
    h[from][to] = std::conj(h[to][from]);
  }
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j)
      check_internal(h[i][j] == std::conj(h[j][i]),
                     "tight-binding matrix is not Hermitian");
  return h;
}

nlohmann::ordered_json potential_to_json(const GaugePotential& omega) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [cell, phase] : omega.values) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    entry.push_back(cell.stationary);
    entry.push_back({cell.movers[0].first, cell.movers[0].second});
    std::ostringstream text;
    text << boost::multiprecision::numerator(phase) << "/"
         << boost::multiprecision::denominator(phase);
    entry.push_back(text.str());
    entries.push_back(std::move(entry));
  }
  return entries;
}

namespace {

Rat parse_phase(const std::string& text) {
  check_input(!text.empty(), "empty phase string");
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    check_input(den > 0, "phase denominator must be positive");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed phase '" + text + "'");
  }
}

}  // namespace

GaugePotential potential_from_json(const nlohmann::ordered_json& j, int particles) {
  check_input(j.is_array(), "potential JSON must be a list of entries");
  GaugePotential omega;
  omega.particles = particles;
  std::set<cfg::Cell> seen;
  for (const auto& entry : j) {
    check_input(entry.is_array() && entry.size() == 3 && entry[0].is_array() &&
                    entry[1].is_array() && entry[1].size() == 2 &&
                    entry[2].is_string(),
                "potential entry must be [[stationary...], [tail, head], \"p/q\"]");
    std::vector<int> stationary = entry[0].get<std::vector<int>>();
    check_input(static_cast<int>(stationary.size()) == particles - 1,
                "potential entry has the wrong number of stationary vertices");
    int tail = entry[1][0].get<int>();
    int head = entry[1][1].get<int>();
    cfg::Cell cell = one_cell(stationary, tail, head);
    check_input(seen.insert(cell).second,
                "duplicate potential entry for " + cell.to_string());
    omega.set_directed(stationary, tail, head, parse_phase(entry[2].get<std::string>()));
  }
  return omega;
}

nlohmann::ordered_json one_particle_to_json(const OneParticlePotential& omega) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [e, phase] : omega.values) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    entry.push_back(nlohmann::ordered_json::array());
    entry.push_back({e.first, e.second});
    std::ostringstream text;
    text << boost::multiprecision::numerator(phase) << "/"
         << boost::multiprecision::denominator(phase);
    entry.push_back(text.str());
    entries.push_back(std::move(entry));
  }
  return entries;
}

OneParticlePotential one_particle_from_json(const nlohmann::ordered_json& j) {
  check_input(j.is_array(), "potential JSON must be a list of entries");
  OneParticlePotential omega;
  for (const auto& entry : j) {
    check_input(entry.is_array() && entry.size() == 3 && entry[0].is_array() &&
                    entry[0].empty() && entry[1].is_array() && entry[1].size() == 2 &&
                    entry[2].is_string(),
                "one-particle entry must be [[], [tail, head], \"p/q\"]");
    int tail = entry[1][0].get<int>();
    int head = entry[1][1].get<int>();
    core::Edge e = core::make_edge(tail, head);
    check_input(omega.values.find(e) == omega.values.end(),
                "duplicate potential entry for edge");
    omega.set_directed(tail, head, parse_phase(entry[2].get<std::string>()));
  }
  return omega;
}

}  // namespace graphstat::gauge
