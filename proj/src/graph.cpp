#include "graphstat/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace graphstat::core {

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges) {
  std::sort(vertices.begin(), vertices.end());
  check_input(std::adjacent_find(vertices.begin(), vertices.end()) ==
                  vertices.end(),
              "duplicate vertex id");
  for (int v : vertices) check_input(v > 0, "vertex ids must be positive");
  verts_ = std::move(vertices);

  for (Edge& e : edges) {
    check_input(e.first != e.second, "self-loop not allowed");
    e = make_edge(e.first, e.second);
    check_input(std::binary_search(verts_.begin(), verts_.end(), e.first) &&
                    std::binary_search(verts_.begin(), verts_.end(), e.second),
                "edge references unknown vertex");
  }
  std::sort(edges.begin(), edges.end());
  check_input(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
              "duplicate edge");
  edges_ = std::move(edges);

  for (int v : verts_) adj_[v] = {};
  for (const Edge& e : edges_) {
    adj_[e.first].push_back(e.second);
    adj_[e.second].push_back(e.first);
  }
  for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(int a, int b) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

const std::vector<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  check_input(it != adj_.end(), "unknown vertex");
  return it->second;
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  check_input(j.is_object() && j.contains("vertices") && j.contains("edges"),
              "graph JSON needs 'vertices' and 'edges'");
  check_input(j["vertices"].is_array() && j["edges"].is_array(),
              "'vertices' and 'edges' must be arrays");
  std::vector<int> verts;
  for (const auto& v : j["vertices"]) {
    check_input(v.is_number_integer(), "vertex ids must be integers");
    verts.push_back(v.get<int>());
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    check_input(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                "each edge must be a pair of integer ids");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(std::move(verts), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges())
    j["edges"].push_back({e.first, e.second});
  return j.dump();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  check_input(in.good(), "cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (int s : g.vertices()) {
    if (seen.count(s)) continue;
    std::vector<int> comp, stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen.count(v)) {
          seen.insert(v);
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.num_vertices() == 0 || connected_components(g).size() == 1;
}

int betti_number(const Graph& g) {
  check_input(is_connected(g), "betti_number requires a connected graph");
  return g.num_edges() - g.num_vertices() + 1;
}

bool SpanningTree::is_tree_edge(const Edge& e) const {
  return std::binary_search(tree_edges.begin(), tree_edges.end(), e);
}

int SpanningTree::child_of(const Edge& e) const {
  auto a = label.at(e.first), b = label.at(e.second);
  return a > b ? e.first : e.second;
}

Edge SpanningTree::parent_edge(int v) const {
  auto it = parent.find(v);
  check_internal(it != parent.end(), "root has no parent edge");
  return make_edge(v, it->second);
}

SpanningTree spanning_tree(const Graph& g) {
  check_input(g.num_vertices() >= 1, "empty graph");
  check_input(is_connected(g), "spanning_tree requires a connected graph");
  SpanningTree t;

  // DFS from the smallest vertex id, neighbors in ascending order.
  std::set<int> visited{g.vertices().front()};
  std::set<Edge> tree;
  {
    std::vector<std::pair<int, size_t>> stack{{g.vertices().front(), 0}};
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      const auto& nbrs = g.neighbors(u);
      if (idx == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      int v = nbrs[idx++];
      if (!visited.count(v)) {
        visited.insert(v);
        tree.insert(make_edge(u, v));
        stack.push_back({v, 0});
      }
    }
  }
  t.tree_edges.assign(tree.begin(), tree.end());
  for (const Edge& e : g.edges())
    if (!tree.count(e)) t.deleted_edges.push_back(e);

  // Root: smallest-id vertex of tree-degree one (the vertex itself if V=1).
  std::map<int, std::vector<int>> tadj;
  for (int v : g.vertices()) tadj[v] = {};
  for (const Edge& e : t.tree_edges) {
    tadj[e.first].push_back(e.second);
    tadj[e.second].push_back(e.first);
  }
  for (auto& [v, nbrs] : tadj) std::sort(nbrs.begin(), nbrs.end());
  t.root = g.vertices().front();
  for (int v : g.vertices())
    if (tadj[v].size() == 1) {
      t.root = v;
      break;
    }

  // Preorder labels on the tree from the root, ascending-id children.
  int next_label = 1;
  std::vector<std::pair<int, size_t>> stack{{t.root, 0}};
  std::set<int> seen{t.root};
  t.label[t.root] = next_label++;
  t.order.push_back(t.root);
  while (!stack.empty()) {
    auto& [u, idx] = stack.back();
    const auto& nbrs = tadj[u];
    if (idx == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    int v = nbrs[idx++];
    if (!seen.count(v)) {
      seen.insert(v);
      t.parent[v] = u;
      t.label[v] = next_label++;
      t.order.push_back(v);
      stack.push_back({v, 0});
    }
  }
  check_internal(next_label == g.num_vertices() + 1, "labeling incomplete");
  return t;
}

std::pair<Graph, SubdivisionMap> subdivide(const Graph& g, int n) {
  check_input(n >= 1, "particle count must be at least 1");
  int k = std::max(n - 2, 0);
  SubdivisionMap m;
  std::vector<int> verts = g.vertices();
  std::vector<Edge> edges;
  int next_id = g.max_vertex_id();
  for (const Edge& e : g.edges()) {
    std::vector<int> chain{e.first};
    for (int i = 0; i < k; ++i) {
      ++next_id;
      chain.push_back(next_id);
      verts.push_back(next_id);
      m.inserted_from[next_id] = e;
    }
    chain.push_back(e.second);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      edges.push_back(make_edge(chain[i], chain[i + 1]));
    m.chain[e] = std::move(chain);
  }
  return {Graph(std::move(verts), std::move(edges)), std::move(m)};
}

namespace {

// Girth via BFS from every vertex; INT_MAX if acyclic.
int girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (int s : g.vertices()) {
    std::map<int, int> dist, par;
    std::vector<int> queue{s};
    dist[s] = 0;
    par[s] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : g.neighbors(u)) {
        if (!dist.count(v)) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          queue.push_back(v);
        } else if (v != par[u]) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

}  // namespace

bool sufficiently_subdivided(const Graph& g, int n) {
  check_input(n >= 1, "particle count must be at least 1");
  if (n <= 2) return true;

  // Maximal chains between essential vertices (degree != 2).
  for (int s : g.vertices()) {
    if (g.degree(s) == 2) continue;
    for (int t0 : g.neighbors(s)) {
      int prev = s, cur = t0, len = 1;
      while (g.degree(cur) == 2 && cur != s) {
        const auto& nb = g.neighbors(cur);
        int nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        ++len;
      }
      if (len < n - 1) return false;
    }
  }
  return girth(g) >= n + 1;
}

Graph make_path(int len_vertices) {
  std::vector<int> v;
  std::vector<Edge> e;
  for (int i = 1; i <= len_vertices; ++i) v.push_back(i);
  for (int i = 1; i < len_vertices; ++i) e.push_back({i, i + 1});
  return Graph(v, e);
}

Graph make_cycle(int m) {
  std::vector<int> v;
  std::vector<Edge> e;
  for (int i = 1; i <= m; ++i) v.push_back(i);
  for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
  e.push_back({1, m});
  return Graph(v, e);
}

Graph make_star(int arms) {
  std::vector<int> v{1};
  std::vector<Edge> e;
  for (int i = 2; i <= arms + 1; ++i) {
    v.push_back(i);
    e.push_back({1, i});
  }
  return Graph(v, e);
}

Graph make_complete(int m) {
  std::vector<int> v;
  std::vector<Edge> e;
  for (int i = 1; i <= m; ++i) v.push_back(i);
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) e.push_back({i, j});
  return Graph(v, e);
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<int> v;
  std::vector<Edge> e;
  for (int i = 1; i <= a + b; ++i) v.push_back(i);
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) e.push_back({i, j});
  return Graph(v, e);
}

Graph make_wheel(int rim) {
  std::vector<int> v{1};
  std::vector<Edge> e;
  for (int i = 2; i <= rim + 1; ++i) {
    v.push_back(i);
    e.push_back({1, i});
    e.push_back({i, i == rim + 1 ? 2 : i + 1});
  }
  return Graph(v, e);
}

Graph make_theta() {
  return Graph({1, 2, 3, 4, 5},
               {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}});
}

Graph make_lasso() {
  return Graph({1, 2, 3, 4}, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph make_bowtie() {
  return Graph({1, 2, 3, 4, 5},
               {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {4, 5}});
}

Graph make_octahedron() {
  // Antipodal pairs (1,6), (2,5), (3,4); every other pair adjacent.
  std::vector<Edge> e;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (i + j != 7) e.push_back({i, j});
  return Graph({1, 2, 3, 4, 5, 6}, e);
}

Graph make_two_connected_example() {
  // Triangles {1,2,6} and {3,4,5}, junction vertices 7 and 8 with a direct
  // edge, attached by 7-2, 7-3, 8-6, 8-5.
  return Graph({1, 2, 3, 4, 5, 6, 7, 8},
               {{1, 2},
                {1, 6},
                {2, 6},
                {3, 4},
                {4, 5},
                {3, 5},
                {2, 7},
                {3, 7},
                {5, 8},
                {6, 8},
                {7, 8}});
}

}  // namespace graphstat::core
