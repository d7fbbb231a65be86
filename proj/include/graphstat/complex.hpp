#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphstat/graph.hpp"
#include "graphstat/homology.hpp"
#include "graphstat/util.hpp"

namespace graphstat::cfg {

// One cell of the discrete configuration space: n - d stationary vertices
// together with d pairwise disjoint moving edges (d = dim, at most 2 here;
// higher cells never enter the first homology computation).
struct Cell {
  std::vector<int> stationary;     // sorted ascending
  std::vector<core::Edge> movers;  // sorted canonical pairs

  int dim() const { return static_cast<int>(movers.size()); }
  bool operator==(const Cell& o) const = default;
  bool operator<(const Cell& o) const;
  std::string to_string() const;
};

struct ConfigComplex {
  core::Graph graph;
  int particles = 0;
  std::vector<Cell> cells0, cells1, cells2;
  std::map<Cell, int> index0, index1, index2;
  hom::SparseMat d1;  // cells0 x cells1
  hom::SparseMat d2;  // cells1 x cells2

  const std::vector<Cell>& cells(int dim) const;
  bool contains(const Cell& c) const;
  int index_of(const Cell& c) const;  // InputError if the cell is absent
  hom::BoundaryData boundary_data() const;
  long long total_cells() const {
    return static_cast<long long>(cells0.size()) + cells1.size() + cells2.size();
  }
};

// Builds the 2-skeleton of the discrete configuration space of n particles.
// By default the graph must be sufficiently subdivided for n; passing
// require_sufficient = false builds the combinatorial complex regardless.
ConfigComplex build_config_complex(const core::Graph& g, int n,
                                   ExecPolicy policy = ExecPolicy::Parallel,
                                   bool require_sufficient = true);

// A directed elementary move: the remaining n - 1 particles sit on
// `stationary` while one hops tail -> head along an edge.
struct Step {
  std::vector<int> stationary;
  int tail = 0;
  int head = 0;
};

using Loop = std::vector<Step>;

// One particle laps the cycle (given as its vertex order); the others rest.
Loop ab_loop(const std::vector<int>& cycle, const std::vector<int>& rest = {});

// One particle circulates through a degree-3 vertex: with a spectator on
// arm1, the mover swings center->arm2->center->arm3->center->arm1 while the
// spectator steps aside as needed; arms are taken in the given order.
Loop y_loop(int center, const std::array<int, 3>& arms,
            const std::vector<int>& rest = {});

// k particles exchange once around the cycle: the lead particle walks
// through the empty arc, the others close up one slot each, and the lead's
// final hop closes the loop -- one net cyclic shift of the pack, m steps in
// total (k = 1 degenerates to a single lap).
Loop exchange_loop(const std::vector<int>& cycle, int k,
                   const std::vector<int>& rest = {});

// Validates the loop against the complex (edges exist, configurations chain
// up, the walk closes) and returns its signed 1-chain.
std::vector<Int> loop_to_chain(const ConfigComplex& cx, const Loop& loop);

nlohmann::ordered_json complex_to_json(const ConfigComplex& cx);

}  // namespace graphstat::cfg
