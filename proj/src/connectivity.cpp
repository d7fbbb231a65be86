#include "graphstat/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "graphstat/util.hpp"

namespace graphstat::conn {

namespace {

using core::Edge;
using core::Graph;

// Unit-capacity max flow (BFS augmentation); small networks only.
struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
  };
  std::vector<std::vector<Arc>> arcs;

  explicit FlowNet(int n) : arcs(n) {}

  void add(int u, int v, int cap) {
    arcs[u].push_back({v, cap, static_cast<int>(arcs[v].size())});
    arcs[v].push_back({u, 0, static_cast<int>(arcs[u].size()) - 1});
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
      std::queue<int> q;
      q.push(s);
      pred[s] = {s, -1};
      while (!q.empty() && pred[t].first == -1) {
        int u = q.front();
        q.pop();
        for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
          const Arc& a = arcs[u][i];
          if (a.cap > 0 && pred[a.to].first == -1) {
            pred[a.to] = {u, i};
            q.push(a.to);
          }
        }
      }
      if (pred[t].first == -1) return total;
      for (int v = t; v != s;) {
        auto [u, i] = pred[v];
        Arc& a = arcs[u][i];
        a.cap -= 1;
        arcs[a.to][a.rev].cap += 1;
        v = u;
      }
      total += 1;
    }
  }
};

// Number of internally disjoint s-t paths for nonadjacent s, t via the
// split-vertex network: v -> (v_in, v_out) with an internal unit arc.
int vertex_capacity_flow(const Graph& g, int s, int t) {
  const auto& vs = g.vertices();
  std::map<int, int> index;
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) index[vs[i]] = i;
  FlowNet net(2 * static_cast<int>(vs.size()));
  auto v_in = [&](int v) { return 2 * index.at(v); };
  auto v_out = [&](int v) { return 2 * index.at(v) + 1; };
  for (int v : vs) net.add(v_in(v), v_out(v), 1);
  for (const Edge& e : g.edges()) {
    net.add(v_out(e.first), v_in(e.second), 1);
    net.add(v_out(e.second), v_in(e.first), 1);
  }
  return net.max_flow(v_out(s), v_in(t));
}

bool is_complete(const Graph& g) {
  long long n = g.num_vertices();
  return 2 * static_cast<long long>(g.num_edges()) == n * (n - 1);
}

}  // namespace

int menger_paths(const Graph& g, int s, int t) {
  check_input(g.has_vertex(s) && g.has_vertex(t), "menger: unknown vertex");
  check_input(s != t, "menger: endpoints must differ");
  if (!g.has_edge(s, t)) return vertex_capacity_flow(g, s, t);
  std::vector<Edge> rest;
  for (const Edge& e : g.edges())
    if (e != core::make_edge(s, t)) rest.push_back(e);
  Graph reduced(g.vertices(), rest);
  return 1 + vertex_capacity_flow(reduced, s, t);
}

int vertex_connectivity(const Graph& g) {
  check_input(g.num_vertices() >= 1, "connectivity: empty graph");
  int n = g.num_vertices();
  if (n == 1) return 0;
  if (is_complete(g)) return n - 1;
  if (!core::is_connected(g)) return 0;
  int best = n - 1;
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j]))
        best = std::min(best, vertex_capacity_flow(g, vs[i], vs[j]));
  return best;
}

BlockDecomposition block_decomposition(const Graph& g) {
  BlockDecomposition out;
  std::map<int, int> disc, low, child_count;
  std::set<int> cut_set;
  std::vector<Edge> estack;
  std::vector<std::vector<Edge>> block_edges;
  int timer = 0;

  struct Frame {
    int v;
    int parent;
    size_t idx;
  };

  for (int root : g.vertices()) {
    if (disc.count(root)) continue;
    std::vector<Frame> st;
    st.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.idx < nbrs.size()) {
        int w = nbrs[f.idx++];
        if (!disc.count(w)) {
          estack.push_back(core::make_edge(f.v, w));
          disc[w] = low[w] = timer++;
          child_count[f.v]++;
          st.push_back({w, f.v, 0});
        } else if (w != f.parent && disc.at(w) < disc.at(f.v)) {
          estack.push_back(core::make_edge(f.v, w));
          low[f.v] = std::min(low.at(f.v), disc.at(w));
        }
      } else {
        int v = f.v;
        int parent = f.parent;
        st.pop_back();
        if (parent == -1) continue;
        low[parent] = std::min(low.at(parent), low.at(v));
        if (low.at(v) >= disc.at(parent)) {
          Edge stop = core::make_edge(parent, v);
          std::vector<Edge> block;
          while (true) {
            check_internal(!estack.empty(), "block decomposition: edge stack underflow");
            Edge e = estack.back();
            estack.pop_back();
            block.push_back(e);
            if (e == stop) break;
          }
          block_edges.push_back(block);
          bool parent_is_root = st.size() == 1 && st.front().v == parent;
          if (!parent_is_root || child_count[parent] >= 2) cut_set.insert(parent);
        }
      }
    }
  }
  check_internal(estack.empty(), "block decomposition: unpopped edges remain");

  for (auto& edges : block_edges) {
    std::set<int> vs;
    for (const Edge& e : edges) {
      vs.insert(e.first);
      vs.insert(e.second);
    }
    std::sort(edges.begin(), edges.end());
    out.blocks.emplace_back(std::vector<int>(vs.begin(), vs.end()), edges);
  }
  out.cut_vertices.assign(cut_set.begin(), cut_set.end());
  for (int v : out.cut_vertices) {
    std::vector<int> rest;
    for (int u : g.vertices())
      if (u != v) rest.push_back(u);
    std::vector<Edge> redges;
    for (const Edge& e : g.edges())
      if (e.first != v && e.second != v) redges.push_back(e);
    Graph reduced(rest, redges);
    out.mu[v] = static_cast<int>(core::connected_components(reduced).size());
    out.nu[v] = g.degree(v);
  }
  return out;
}

namespace {

// Incremental face-embedding planarity test for one 2-connected block.
bool dmp_planar_block(const Graph& b) {
  int nv = b.num_vertices();
  int ne = b.num_edges();
  if (nv <= 4) return true;
  if (ne > 3 * nv - 6) return false;

  // Initial cycle via depth-first search up to the first back edge.
  std::vector<int> cycle;
  {
    std::map<int, int> parent;
    std::set<int> seen;
    std::vector<std::pair<int, size_t>> st;
    int start = b.vertices().front();
    seen.insert(start);
    st.push_back({start, 0});
    parent[start] = -1;
    while (!st.empty() && cycle.empty()) {
      auto& [v, idx] = st.back();
      const auto& nbrs = b.neighbors(v);
      if (idx >= nbrs.size()) {
        st.pop_back();
        continue;
      }
      int w = nbrs[idx++];
      if (!seen.count(w)) {
        seen.insert(w);
        parent[w] = v;
        st.push_back({w, 0});
      } else if (w != parent.at(v)) {
        // Back edge v -> w: walk the tree path v .. w.
        for (int u = v; u != w; u = parent.at(u)) cycle.push_back(u);
        cycle.push_back(w);
      }
    }
    check_internal(cycle.size() >= 3, "planarity: no cycle in a 2-connected block");
  }

  std::set<int> hv(cycle.begin(), cycle.end());
  std::set<Edge> he;
  for (size_t i = 0; i < cycle.size(); ++i)
    he.insert(core::make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  std::vector<std::vector<int>> faces = {cycle, cycle};

  struct Frag {
    std::vector<int> attach;
    bool edge_frag;
    Edge e;
    std::vector<int> comp;
  };

  while (true) {
    std::vector<Frag> frs;
    for (const Edge& e : b.edges())
      if (!he.count(e) && hv.count(e.first) && hv.count(e.second))
        frs.push_back({{e.first, e.second}, true, e, {}});
    std::set<int> assigned;
    for (int v : b.vertices()) {
      if (hv.count(v) || assigned.count(v)) continue;
      std::vector<int> comp;
      std::set<int> attach;
      std::queue<int> q;
      q.push(v);
      assigned.insert(v);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        comp.push_back(u);
        for (int w : b.neighbors(u)) {
          if (hv.count(w)) {
            attach.insert(w);
          } else if (!assigned.count(w)) {
            assigned.insert(w);
            q.push(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      frs.push_back({std::vector<int>(attach.begin(), attach.end()), false,
                     Edge{0, 0}, comp});
    }
    if (frs.empty()) return true;

    std::vector<std::vector<int>> admissible(frs.size());
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      std::set<int> fs(faces[fi].begin(), faces[fi].end());
      for (size_t k = 0; k < frs.size(); ++k) {
        bool ok = true;
        for (int a : frs[k].attach)
          if (!fs.count(a)) {
            ok = false;
            break;
          }
        if (ok) admissible[k].push_back(fi);
      }
    }
    size_t chosen = frs.size();
    for (size_t k = 0; k < frs.size(); ++k) {
      if (admissible[k].empty()) return false;
      if (chosen == frs.size() && admissible[k].size() == 1) chosen = k;
    }
    if (chosen == frs.size()) chosen = 0;
    const Frag& fr = frs[chosen];
    check_internal(fr.attach.size() >= 2, "planarity: fragment with one attachment");

    int a = fr.attach[0];
    int c = fr.attach[1];
    std::vector<int> interior;  // path between a and c, endpoints excluded
    if (!fr.edge_frag) {
      std::set<int> comp(fr.comp.begin(), fr.comp.end());
      std::map<int, int> parent;
      std::queue<int> q;
      for (int w : b.neighbors(a))
        if (comp.count(w) && !parent.count(w)) {
          parent[w] = a;
          q.push(w);
        }
      int hit = -1;
      while (!q.empty() && hit == -1) {
        int u = q.front();
        q.pop();
        for (int w : b.neighbors(u)) {
          if (w == c) {
            hit = u;
            break;
          }
          if (comp.count(w) && !parent.count(w)) {
            parent[w] = u;
            q.push(w);
          }
        }
      }
      check_internal(hit != -1, "planarity: fragment path not found");
      for (int u = hit; u != a; u = parent.at(u)) interior.push_back(u);
      std::reverse(interior.begin(), interior.end());
    }

    int face_id = admissible[chosen][0];
    std::vector<int> cyc = faces[face_id];
    auto ia = std::find(cyc.begin(), cyc.end(), a);
    check_internal(ia != cyc.end(), "planarity: attachment missing from face");
    std::rotate(cyc.begin(), ia, cyc.end());
    auto ic = std::find(cyc.begin(), cyc.end(), c);
    check_internal(ic != cyc.end() && ic != cyc.begin(),
                   "planarity: attachment missing from face");
    size_t j = static_cast<size_t>(ic - cyc.begin());

    std::vector<int> f1(cyc.begin(), cyc.begin() + j + 1);
    for (auto it = interior.rbegin(); it != interior.rend(); ++it)
      f1.push_back(*it);
    std::vector<int> f2(cyc.begin() + j, cyc.end());
    f2.push_back(a);
    for (int u : interior) f2.push_back(u);

    // Embed the path.
    std::vector<int> path;
    path.push_back(a);
    for (int u : interior) path.push_back(u);
    path.push_back(c);
    for (size_t i = 0; i + 1 < path.size(); ++i)
      he.insert(core::make_edge(path[i], path[i + 1]));
    for (int u : interior) hv.insert(u);
    faces[face_id] = f1;
    faces.push_back(f2);
  }
}

}  // namespace

bool is_planar(const Graph& g) {
  for (const Graph& b : block_decomposition(g).blocks)
    if (!dmp_planar_block(b)) return false;
  return true;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) d += (e.first == v) + (e.second == v);
  return d;
}

int MultiGraph::multiplicity(int a, int b) const {
  if (a == b) return 0;
  Edge target = core::make_edge(a, b);
  return static_cast<int>(std::count(edges.begin(), edges.end(), target));
}

int MultiGraph::beta1() const {
  return static_cast<int>(edges.size()) - static_cast<int>(verts.size()) + 1;
}

bool MultiGraph::is_simple() const {
  for (size_t i = 0; i + 1 < edges.size(); ++i)
    if (edges[i] == edges[i + 1]) return false;
  return true;
}

std::vector<std::vector<int>> MultiGraph::components_without(int x, int y) const {
  std::map<int, std::vector<int>> adj;
  for (int v : verts)
    if (v != x && v != y) adj[v];
  for (const Edge& e : edges) {
    if (e.first == x || e.first == y || e.second == x || e.second == y) continue;
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> comps;
  for (const auto& [v, _] : adj) {
    if (seen.count(v)) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(v);
    seen.insert(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : adj.at(u))
        if (!seen.count(w)) {
          seen.insert(w);
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool MultiGraph::is_topological_cycle() const {
  if (verts.size() < 2) return false;
  if (components_without(-1, -1).size() != 1) return false;
  for (int v : verts)
    if (degree(v) != 2) return false;
  return true;
}

bool MultiGraph::is_three_connected() const {
  if (verts.size() < 4 || !is_simple()) return false;
  if (components_without(-1, -1).size() != 1) return false;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (components_without(verts[i], verts[j]).size() != 1) return false;
  return true;
}

bool MultiGraph::is_planar_multigraph() const {
  std::vector<Edge> simple(edges);
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  return conn::is_planar(Graph(verts, simple));
}

MultiGraph to_multigraph(const Graph& g) {
  MultiGraph m;
  m.verts = g.vertices();
  m.edges = g.edges();
  return m;
}

TriDecomposition tri_decomposition(const Graph& g,
                                   std::optional<unsigned long long> seed) {
  check_input(core::is_connected(g), "two-cut decomposition: graph must be connected");
  check_input(g.num_vertices() >= 3,
              "two-cut decomposition: need at least three vertices");
  check_input(vertex_connectivity(g) >= 2,
              "two-cut decomposition: graph must be 2-connected");

  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);

  TriDecomposition out;
  std::deque<MultiGraph> work;
  work.push_back(to_multigraph(g));

  while (!work.empty()) {
    MultiGraph h = work.front();
    work.pop_front();
    if (h.is_topological_cycle()) {
      out.components.push_back({h, MarkedKind::Cycle});
      out.n3_second++;
      continue;
    }
    if (h.is_three_connected()) {
      bool planar = h.is_planar_multigraph();
      out.components.push_back(
          {h, planar ? MarkedKind::ThreeConnectedPlanar
                     : MarkedKind::ThreeConnectedNonplanar});
      (planar ? out.n3 : out.n3_prime)++;
      continue;
    }

    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < h.verts.size(); ++i)
      for (size_t j = i + 1; j < h.verts.size(); ++j)
        pairs.push_back({h.verts[i], h.verts[j]});
    if (rng) std::shuffle(pairs.begin(), pairs.end(), *rng);

    bool split = false;
    for (auto [x, y] : pairs) {
      auto comps = h.components_without(x, y);
      int mult = h.multiplicity(x, y);
      if (static_cast<int>(comps.size()) < 2 && mult < 2) continue;

      out.cuts.push_back({{std::min(x, y), std::max(x, y)},
                          static_cast<int>(comps.size()) + mult});
      out.c2++;
      Edge direct = core::make_edge(x, y);
      for (const auto& comp : comps) {
        std::set<int> inside(comp.begin(), comp.end());
        MultiGraph piece;
        piece.verts = comp;
        piece.verts.push_back(std::min(x, y));
        piece.verts.push_back(std::max(x, y));
        std::sort(piece.verts.begin(), piece.verts.end());
        for (const Edge& e : h.edges) {
          if (e == direct) continue;
          bool touches = inside.count(e.first) || inside.count(e.second);
          bool within = (inside.count(e.first) || e.first == x || e.first == y) &&
                        (inside.count(e.second) || e.second == x || e.second == y);
          if (touches && within) piece.edges.push_back(e);
        }
        piece.edges.push_back(direct);
        std::sort(piece.edges.begin(), piece.edges.end());
        work.push_back(piece);
      }
      for (int k = 0; k < mult; ++k) {
        MultiGraph pair_piece;
        pair_piece.verts = {std::min(x, y), std::max(x, y)};
        pair_piece.edges = {direct, direct};
        work.push_back(pair_piece);
      }
      split = true;
      break;
    }
    check_internal(split, "two-cut decomposition: no admissible cut found");
  }
  return out;
}

}  // namespace graphstat::conn
