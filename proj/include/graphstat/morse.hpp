#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphstat/complex.hpp"
#include "graphstat/graph.hpp"
#include "graphstat/homology.hpp"
#include "graphstat/util.hpp"

namespace graphstat::morse {

// Perfect discrete Morse function on the graph itself (the one-particle
// complex).  With vertices written v_1..v_V in spanning-tree preorder,
// f1(v_k) = 2k - 2, every tree edge takes the value of its child endpoint,
// and every deleted edge the value max(endpoints) + 2.  Critical cells are
// then exactly the root vertex and the deleted edges.
struct MorseF1 {
  core::SpanningTree tree;
  std::map<int, long long> vertex_value;
  std::map<core::Edge, long long> edge_value;

  long long value_of_vertex(int v) const;
  long long value_of_edge(const core::Edge& e) const;
  std::vector<int> critical_vertices() const;      // just the root
  std::vector<core::Edge> critical_edges() const;  // the deleted edges
};

MorseF1 perfect_morse_f1(const core::Graph& g, const core::SpanningTree& t);

// Integer values on every cell of a configuration complex.
using CellValues = std::map<cfg::Cell, long long>;

// The two-particle trial function: each cell gets the sum of f1 over its two
// factors (two vertices, vertex + edge, or two edges).  The result usually
// fails the Morse conditions at a known family of cells; see fix_to_morse.
CellValues trial_f2(const cfg::ConfigComplex& c, const MorseF1& f1);

// Where the repair has a binary choice between the two one-cells u x e(v)
// and v x e(u), Lower raises the one whose stationary vertex carries the
// smaller tree label, Upper the other, Random a seeded coin per choice.
enum class FixPolicy { Lower, Upper, Random };

struct FixReport {
  CellValues f2;
  // Two-cells with both edges in the tree, raised together with the chosen
  // flank one-cell (pairs: two-cell, raised one-cell).
  std::vector<std::pair<cfg::Cell, cfg::Cell>> two_cell_fixes;
  // Vertex-pair zero-cells whose members hang from a shared parent, with the
  // raised one-cell, which ends up critical (pairs: zero-cell, raised cell).
  std::vector<std::pair<cfg::Cell, cfg::Cell>> zero_cell_fixes;
};

// Repairs the trial function to a genuine discrete Morse function by the
// two-step increment scheme and asserts the result is valid.
FixReport fix_to_morse(const cfg::ConfigComplex& c, const CellValues& trial,
                       const MorseF1& f1, FixPolicy policy = FixPolicy::Lower,
                       std::optional<unsigned long long> seed = std::nullopt);

struct Violation {
  cfg::Cell cell;
  std::string reason;
};

struct MorseVerdict {
  bool valid = false;
  std::vector<Violation> violations;  // canonical cell order, dimension-major
};

// Exhaustive check of the two discrete-Morse conditions on every cell: at
// most one coface with no larger value, at most one face with no smaller
// value, and never one of each at the same cell.
MorseVerdict is_discrete_morse(const cfg::ConfigComplex& c,
                               const CellValues& f);

struct GradientField {
  // Matched pairs (lower cell, coface), the arrow pointing up a dimension.
  std::vector<std::pair<cfg::Cell, cfg::Cell>> matching;
  std::vector<cfg::Cell> critical0, critical1, critical2;
};

// Reads the gradient pairing off a valid discrete Morse function and asserts
// the absence of closed V-paths in both dimensions.
GradientField gradient_field(const cfg::ConfigComplex& c, const CellValues& f);

// Compares the critical cells of a repaired-trial field with the closed-form
// description: one zero-cell {root, its tree child}; the one-cells v x e with
// e deleted and either v the root or e(v) meeting e, plus exactly one of the
// two candidate cells per shared-parent vertex pair; the two-cells made of
// two disjoint deleted edges.
struct CriticalReport {
  bool matches = false;
  std::vector<cfg::Cell> unexpected;  // critical but not in the description
  std::vector<cfg::Cell> missing;     // described but not critical
};

CriticalReport classify_critical(const cfg::ConfigComplex& c,
                                 const GradientField& field,
                                 const core::SpanningTree& t);

struct MorseComplexData {
  std::vector<cfg::Cell> critical0, critical1, critical2;
  // Morse boundaries in the listed cell order; the composition is asserted
  // to vanish.
  hom::BoundaryData boundary;
};

// Collapses the complex onto its critical cells: each boundary coefficient
// sums the signed multiplicities of all gradient V-paths between the two
// cells.  Column assembly over critical two-cells runs under the execution
// policy; both policies produce identical matrices.
MorseComplexData morse_complex(const cfg::ConfigComplex& c,
                               const GradientField& field,
                               ExecPolicy policy = ExecPolicy::Parallel);

hom::FGAbelianGroup morse_h1(const MorseComplexData& m);

// The whole chain: spanning tree, f1, trial, repair, gradient field (with
// the critical set checked against its closed form), Morse complex, group.
struct MorsePipeline {
  cfg::ConfigComplex space;
  MorseF1 f1;
  CellValues trial;
  FixReport fix;
  GradientField field;
  MorseComplexData complex;
  hom::FGAbelianGroup h1;
};

MorsePipeline morse_pipeline(const core::Graph& g,
                             FixPolicy policy = FixPolicy::Lower,
                             std::optional<unsigned long long> seed =
                                 std::nullopt,
                             ExecPolicy exec = ExecPolicy::Parallel);

}  // namespace graphstat::morse
