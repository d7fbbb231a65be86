// Times the kernels that exist in both a parallel and a serial reference
// form, checking on the way that the two produce identical results:
//   1. boundary-matrix fill of the configuration complex,
//   2. discrete Morse boundary assembly,
//   3. lifting a potential to more particles,
//   4. the zero-flux scan over all 2-cells.
// One graph drives all four: the octahedron subdivided for three particles.

#include <chrono>
#include <cstdio>
#include <utility>

#include "graphstat/complex.hpp"
#include "graphstat/gauge.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/morse.hpp"
#include "graphstat/util.hpp"

using namespace graphstat;

namespace {

template <typename F>
long long best_of(int reps, F&& body) {
  long long best = -1;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (best < 0 || us < best) best = us;
  }
  return best;
}

bool same_entries(const std::vector<hom::Triplet>& a,
                  const std::vector<hom::Triplet>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].row != b[i].row || a[i].col != b[i].col || a[i].val != b[i].val)
      return false;
  return true;
}

void report(const char* name, long long serial_us, long long parallel_us,
            bool identical) {
  std::printf("%-28s serial %8lld us   parallel %8lld us   %s\n", name,
              serial_us, parallel_us,
              identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  const int reps = 3;
  core::Graph g_sub = core::subdivide(core::make_octahedron(), 3).first;
  std::printf("octahedron subdivided for 3 particles: %d vertices, %d edges\n",
              g_sub.num_vertices(), g_sub.num_edges());

  // 1. Configuration-complex boundary fill (three particles).
  cfg::ConfigComplex c3s, c3p;
  auto fill_serial = best_of(reps, [&] {
    c3s = cfg::build_config_complex(g_sub, 3, ExecPolicy::Serial);
  });
  auto fill_parallel = best_of(reps, [&] {
    c3p = cfg::build_config_complex(g_sub, 3, ExecPolicy::Parallel);
  });
  bool fill_same = same_entries(c3s.d2.entries, c3p.d2.entries) &&
                   same_entries(c3s.d1.entries, c3p.d1.entries);
  std::printf("three-particle complex: %zu + %zu + %zu cells\n",
              c3p.cells0.size(), c3p.cells1.size(), c3p.cells2.size());
  report("complex boundary fill", fill_serial, fill_parallel, fill_same);

  // 2. Morse boundary assembly (two particles).
  auto pipe = morse::morse_pipeline(g_sub);
  morse::MorseComplexData ms, mp;
  auto morse_serial = best_of(reps, [&] {
    ms = morse::morse_complex(pipe.space, pipe.field, ExecPolicy::Serial);
  });
  auto morse_parallel = best_of(reps, [&] {
    mp = morse::morse_complex(pipe.space, pipe.field, ExecPolicy::Parallel);
  });
  bool morse_same = same_entries(ms.boundary.d1.entries,
                                 mp.boundary.d1.entries) &&
                    same_entries(ms.boundary.d2.entries,
                                 mp.boundary.d2.entries);
  report("Morse boundary assembly", morse_serial, morse_parallel, morse_same);

  // A sampled topological potential, split into its parts for the lift.
  Rng rng(1);
  auto phases = gauge::random_admissible_phases(pipe.complex, rng);
  auto omega2 =
      gauge::random_topological_potential(pipe.space, pipe.field, phases);
  auto [ab, stats] = gauge::decompose_ab_s(pipe.space, omega2);
  auto one = gauge::ab_to_one_particle(pipe.space, ab);

  // 3. Lift fill to three particles.
  gauge::GaugePotential ls, lp;
  auto lift_serial = best_of(reps, [&] {
    ls = gauge::lift_to_n(g_sub, one, stats, 3, ExecPolicy::Serial);
  });
  auto lift_parallel = best_of(reps, [&] {
    lp = gauge::lift_to_n(g_sub, one, stats, 3, ExecPolicy::Parallel);
  });
  report("potential lift fill", lift_serial, lift_parallel, ls == lp);

  // 4. Zero-flux scan over the three-particle 2-cells.
  gauge::TopologicalVerdict vs, vp;
  auto scan_serial = best_of(reps, [&] {
    vs = gauge::is_topological(c3p, lp, ExecPolicy::Serial);
  });
  auto scan_parallel = best_of(reps, [&] {
    vp = gauge::is_topological(c3p, lp, ExecPolicy::Parallel);
  });
  bool scan_same = vs.topological == vp.topological &&
                   vs.offending == vp.offending && vs.topological;
  report("zero-flux scan", scan_serial, scan_parallel, scan_same);

  bool all = fill_same && morse_same && ls == lp && scan_same;
  std::printf("%s\n", all ? "all kernels agree" : "KERNEL MISMATCH");
  return all ? 0 : 1;
}
