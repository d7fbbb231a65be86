#pragma once

// Topological gauge potentials on discrete configuration complexes.
//
// A gauge potential assigns to every directed 1-cell of D^n(Gamma) a phase,
// measured in exact rational turns (1 turn = a full revolution), with the
// antisymmetry Omega(reverse) = -Omega.  A potential is "topological" when
// the total phase around the boundary of every 2-cell vanishes mod 1; on a
// 2-dimensional complex this makes the phase of a loop depend only on its
// homology class, so a topological potential is the same thing as a
// homomorphism H_1 -> Q/Z presented cell by cell.
//
// All gauge arithmetic is exact (boost rationals reduced mod 1); floating
// point appears only in the tight-binding matrix, whose entries are complex
// exponentials of the phases.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphstat/complex.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/morse.hpp"
#include "graphstat/util.hpp"

#include <nlohmann/json.hpp>

namespace graphstat::gauge {

// A phase in turns: a reduced rational in [0, 1).
using Phase = Rat;

// Reduce any rational to its representative in [0, 1).
Phase phase_mod1(const Rat& x);

// A gauge potential on the 1-cells of a configuration complex.  Values are
// stored for the canonical direction of each 1-cell (tail < head); the value
// of the reversed direction is the negation mod 1.  Cells absent from the
// map carry phase zero, so the map is a sparse encoding of a total function.
struct GaugePotential {
  int particles = 0;
  std::map<cfg::Cell, Phase> values;  // canonical-direction phases, zeros omitted

  // Phase of the move tail -> head with the given spectators.
  Phase directed(const std::vector<int>& stationary, int tail, int head) const;
  // Record the phase of the move tail -> head (the canonical entry is
  // updated, negating if (tail, head) is the reversed direction).
  void set_directed(const std::vector<int>& stationary, int tail, int head,
                    const Rat& phase);

  bool operator==(const GaugePotential& o) const {
    return particles == o.particles && values == o.values;
  }
};

// A one-particle potential: a phase per directed edge of the graph itself,
// stored for the canonical direction (smaller endpoint -> larger endpoint).
struct OneParticlePotential {
  std::map<core::Edge, Phase> values;  // canonical-direction phases, zeros omitted

  Phase directed(int tail, int head) const;
  void set_directed(int tail, int head, const Rat& phase);

  bool operator==(const OneParticlePotential& o) const { return values == o.values; }
};

// Check that every entry of the potential names an actual 1-cell of the
// complex and that the particle counts agree.  Throws InputError otherwise.
void validate_potential(const cfg::ConfigComplex& c, const GaugePotential& omega);

// Verdict of the topological test: the total phase around the boundary of
// every 2-cell must vanish mod 1.  Offending 2-cells are reported in
// canonical order.  Serial and parallel scans produce identical verdicts.
struct TopologicalVerdict {
  bool topological = false;
  std::vector<cfg::Cell> offending;
};

TopologicalVerdict is_topological(const cfg::ConfigComplex& c,
                                  const GaugePotential& omega,
                                  ExecPolicy policy = ExecPolicy::Parallel);

// Total phase accumulated along a loop: the signed sum of the phases of its
// steps, mod 1.  For a topological potential this depends only on the
// homology class of the loop.
Phase flux(const cfg::ConfigComplex& c, const GaugePotential& omega,
           const cfg::Loop& loop);

// True when the potential is independent of the spectators: for every edge
// the phase is the same for all stationary configurations (an
// Aharonov-Bohm, or lattice-field, potential).
bool is_pure_ab(const cfg::ConfigComplex& c, const GaugePotential& omega);

// True when the potential averages to zero over spectators: for every
// directed edge the sum of the phases over all stationary configurations
// vanishes mod 1 (a pure statistics, or exchange, potential).
bool is_pure_statistics(const cfg::ConfigComplex& c, const GaugePotential& omega);

// Split a two-particle potential into its Aharonov-Bohm and statistics
// parts: Omega_AB(i, j->k) is the average over spectators p of
// Omega(p, j->k), and Omega_S is the remainder.  The AB part is independent
// of the spectator, the statistics part averages to zero, and the two add
// back to the input exactly; both parts are topological whenever the input
// is.  Requires a two-particle complex on at least three vertices.  On a
// triangle the statistics part is identically zero.
std::pair<GaugePotential, GaugePotential> decompose_ab_s(
    const cfg::ConfigComplex& c, const GaugePotential& omega);

// Extract the one-particle potential underlying a pure-AB two-particle
// potential (the common per-edge phase).  Throws InputError if the input is
// not pure AB.
OneParticlePotential ab_to_one_particle(const cfg::ConfigComplex& c,
                                        const GaugePotential& omega);

// Result of carrying a potential through the subdivision of a single edge:
// the subdivided graph, the id of the inserted vertex, and the transported
// two-particle potential on the new complex.
struct SubdividedPotential {
  core::Graph graph;
  int inserted_vertex = 0;
  GaugePotential omega;
};

// Transport a topological two-particle potential through the subdivision of
// one edge (p, q) by a new midpoint a.  Per-cell rules, in terms of an
// exact lift of the old phases (see below):
//   - cells not involving a or the halves keep their old phase;
//   - a distant spectator sees each half of the old edge with half the old
//     phase: Omega(i, p->a) = Omega(i, a->q) = (1/2) Omega_old(i, p->q);
//   - a spectator resting at one endpoint watches the other half at phase
//     zero (a gauge choice the remaining rules are consistent with);
//   - a spectator resting at the midpoint behaves like the average of a
//     spectator at p and one at q: Omega(a, u->v) =
//     (1/2)(Omega_old(p, u->v) + Omega_old(q, u->v));
//   - a spectator at the midpoint watching a move out of an endpoint s with
//     far endpoint sbar: Omega(a, s->j) = Omega_old(sbar, s->j)
//     + (1/2) Omega_old(j, sbar->s).
// Halving is only well defined after the old phases are lifted to exact
// rationals whose sum around every 2-cell is exactly zero (not merely zero
// mod 1); the lift is found by solving an integer linear system via the
// Smith normal form.  The lift exists precisely when the input flux
// vanishes on the torsion of H_1; otherwise an InputError explains the
// obstruction.  The transported potential is topological and assigns every
// loop of the old complex the same flux as its subdivided image.
SubdividedPotential subdivide_potential(const core::Graph& g, const core::Edge& e,
                                        const GaugePotential& omegabar);

// Result of transporting a potential through the full subdivision that makes
// a graph sufficient for n particles: the subdivided graph (identical to the
// one produced by core::subdivide), its chain map, and the potential.
struct TransportResult {
  core::Graph graph;
  core::SubdivisionMap map;
  GaugePotential omega;
};

// Chain subdivide_potential over every edge until the graph matches
// core::subdivide(g, n), carrying the potential along.
TransportResult transport_to_subdivision(const core::Graph& g,
                                         const GaugePotential& omega, int n);

// Lift a one-particle potential plus a pure-statistics two-particle
// potential to n particles on a sufficiently subdivided graph:
//   Omega({v_1..v_{n-1}}, i->j) = omega1(i->j) + sum_r omega_s(v_r, i->j).
// The statistics part must be pure and topological on the two-particle
// complex of the same graph; the result is topological on the n-particle
// complex.  With n = 2 this reproduces omega1 + omega_s cell for cell.
GaugePotential lift_to_n(const core::Graph& g_sub,
                         const OneParticlePotential& omega1,
                         const GaugePotential& omega_s, int n,
                         ExecPolicy policy = ExecPolicy::Parallel);

// Build a topological potential from free phases on the critical 1-cells of
// a gradient field: down-matched 1-cells carry phase zero, critical 1-cells
// carry the prescribed phases, and each up-matched 1-cell is forced by the
// zero-flux condition of its pairing 2-cell (resolved recursively; the
// recursion terminates because the pairing values strictly decrease).  The
// prescribed phases must annihilate every column of the discrete Morse
// boundary mod 1 — otherwise no topological extension exists and an
// InputError is raised.  Phases for critical cells absent from the map
// default to zero.
GaugePotential random_topological_potential(
    const cfg::ConfigComplex& c, const morse::GradientField& field,
    const std::map<cfg::Cell, Phase>& phases);

// Sample a uniformly random admissible phase assignment for the critical
// 1-cells of a Morse complex: the annihilator of the Morse boundary mod 1 is
// parametrised through the Smith normal form, torsion directions are drawn
// from their exact cyclic groups, and free directions from eighths of a turn.
std::map<cfg::Cell, Phase> random_admissible_phases(
    const morse::MorseComplexData& m, Rng& rng);

// Tight-binding Hamiltonian of a potential: a Hermitian matrix indexed by
// the 0-cells, with entry (a, b) = exp(2 pi i Omega(b -> a)) when a 1-cell
// joins the two configurations and 0 otherwise.
using TightBindingMatrix = std::vector<std::vector<std::complex<double>>>;

TightBindingMatrix tight_binding(const cfg::ConfigComplex& c,
                                 const GaugePotential& omega);

// JSON encoding: a list of entries [[stationary...], [tail, head], "p/q"],
// one per 1-cell with nonzero phase, in canonical cell order with
// tail < head.  The reader accepts entries in either direction and phases
// written as "p/q" or as a bare integer.
nlohmann::ordered_json potential_to_json(const GaugePotential& omega);
GaugePotential potential_from_json(const nlohmann::ordered_json& j, int particles);

nlohmann::ordered_json one_particle_to_json(const OneParticlePotential& omega);
OneParticlePotential one_particle_from_json(const nlohmann::ordered_json& j);

}  // namespace graphstat::gauge
