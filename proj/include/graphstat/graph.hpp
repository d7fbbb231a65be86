#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphstat/util.hpp"

namespace graphstat::core {

// Undirected edge with canonical orientation u < v.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Finite simple graph with positive-integer vertex ids.  Vertices and edges
// are kept sorted so that all downstream enumeration is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<int> vertices, std::vector<Edge> edges);

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(verts_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int v) const;
  bool has_edge(int a, int b) const;
  int degree(int v) const;
  // Neighbors in ascending id order.
  const std::vector<int>& neighbors(int v) const;
  int max_vertex_id() const { return verts_.empty() ? 0 : verts_.back(); }

  bool operator==(const Graph& o) const {
    return verts_ == o.verts_ && edges_ == o.edges_;
  }

 private:
  std::vector<int> verts_;
  std::vector<Edge> edges_;
  std::map<int, std::vector<int>> adj_;
};

// JSON I/O.  Format: {"vertices":[1,2,...],"edges":[[u,v],...]}.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);
Graph load_graph_file(const std::string& path);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// First Betti number E - V + 1 of a connected graph.
int betti_number(const Graph& g);

// Spanning tree with the deterministic vertex relabeling used by the Morse
// construction: the tree comes from a DFS at the smallest vertex id visiting
// neighbors in ascending order; labels come from a DFS preorder of the tree
// rooted at its smallest-id leaf, again with ascending-id tie-breaks.
struct SpanningTree {
  int root = 0;                       // root of the labeled tree
  std::vector<Edge> tree_edges;       // sorted canonical edges
  std::vector<Edge> deleted_edges;    // sorted canonical non-tree edges
  std::map<int, int> label;           // vertex id -> label 1..V
  std::vector<int> order;             // order[k] = vertex with label k+1
  std::map<int, int> parent;          // vertex -> parent vertex (root absent)

  bool is_tree_edge(const Edge& e) const;
  // Child endpoint of a tree edge (the endpoint with larger label).
  int child_of(const Edge& e) const;
  // Parent edge e(v) of a non-root vertex.
  Edge parent_edge(int v) const;
};

SpanningTree spanning_tree(const Graph& g);

// Subdivision record: for each original edge, the replacing chain of vertices
// (endpoints included, smaller endpoint first), and the reverse map telling
// which original edge each inserted vertex came from.
struct SubdivisionMap {
  std::map<Edge, std::vector<int>> chain;
  std::map<int, Edge> inserted_from;
};

// Insert max(n-2, 0) fresh interior vertices into every edge.  Fresh ids are
// allocated above the current maximum id, edges processed in canonical order.
std::pair<Graph, SubdivisionMap> subdivide(const Graph& g, int n);

// Independent check that g is sufficiently subdivided for n particles:
// every maximal chain between vertices of degree != 2 has at least n-1 edges
// and the girth is at least n+1.
bool sufficiently_subdivided(const Graph& g, int n);

// Canned constructions, all using contiguous ids starting at 1.
Graph make_path(int len_vertices);
Graph make_cycle(int m);
Graph make_star(int arms);              // center 1, arms 2..arms+1
Graph make_complete(int m);
Graph make_complete_bipartite(int a, int b);
Graph make_wheel(int rim);              // hub 1, rim cycle 2..rim+1
Graph make_theta();                     // two vertices joined by three 2-paths
Graph make_lasso();                     // pendant 1 on triangle {2,3,4}
Graph make_bowtie();                    // triangles {1,2,3},{2,4,5} sharing 2
Graph make_octahedron();
Graph make_two_connected_example();     // two triangles + joining 2-cut {x,y}

}  // namespace graphstat::core
