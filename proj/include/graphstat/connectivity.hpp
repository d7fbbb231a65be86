#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphstat/graph.hpp"

namespace graphstat::conn {

// Vertex connectivity, with kappa(K_m) = m - 1 for complete graphs and 0 for
// disconnected ones.
int vertex_connectivity(const core::Graph& g);

// Maximum number of internally disjoint s-t paths.
int menger_paths(const core::Graph& g, int s, int t);

struct BlockDecomposition {
  // Biconnected components as induced subgraphs (bridges give single edges).
  std::vector<core::Graph> blocks;
  std::vector<int> cut_vertices;  // sorted
  std::map<int, int> mu;          // cut vertex -> components of g - v
  std::map<int, int> nu;          // cut vertex -> degree in g
};

BlockDecomposition block_decomposition(const core::Graph& g);

bool is_planar(const core::Graph& g);

// Connected multigraph used by the two-cut decomposition; parallel edges
// are kept explicitly (sorted canonical list with repeats).
struct MultiGraph {
  std::vector<int> verts;
  std::vector<core::Edge> edges;

  int degree(int v) const;
  int multiplicity(int a, int b) const;
  int beta1() const;  // E - V + 1 (connected)
  bool is_simple() const;
  std::vector<std::vector<int>> components_without(int x, int y) const;
  bool is_topological_cycle() const;
  bool is_three_connected() const;
  bool is_planar_multigraph() const;
};

MultiGraph to_multigraph(const core::Graph& g);

enum class MarkedKind { Cycle, ThreeConnectedPlanar, ThreeConnectedNonplanar };

struct MarkedComponent {
  MultiGraph graph;
  MarkedKind kind;
};

struct AppliedCut {
  std::pair<int, int> pair;  // the two cut vertices, smaller first
  int mu;                    // components split off plus direct multiplicity
};

// Result of repeatedly splitting a 2-connected graph at 2-cuts until every
// piece is a topological cycle or 3-connected.
struct TriDecomposition {
  std::vector<MarkedComponent> components;
  std::vector<AppliedCut> cuts;
  int c2 = 0;         // number of applied cuts
  int n3 = 0;         // 3-connected planar pieces
  int n3_prime = 0;   // 3-connected nonplanar pieces
  int n3_second = 0;  // topological cycles
};

// seed, when given, shuffles the candidate-cut order; the counting data
// (c2, n3, n3', n3'', sum of per-cut contributions) is order-invariant.
TriDecomposition tri_decomposition(const core::Graph& g,
                                   std::optional<unsigned long long> seed =
                                       std::nullopt);

}  // namespace graphstat::conn
