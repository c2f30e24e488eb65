#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "graphdeck/errors.hpp"

namespace graphdeck {

// Hard cap on the supported vertex count. General-purpose use (isomorphism
// on arbitrary graphs) is exercised up to order 64; the sparse structured
// graphs produced by the family generators are supported up to this cap.
inline constexpr int kMaxVertices = 256;

// Simple undirected graph on vertices 0..n-1. Adjacency is a symmetric bit
// matrix stored row-major; no self-loops. Immutable by convention once
// built (all algorithms take it by const reference and return new graphs).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw cap_error("graph order " + std::to_string(n) +
                      " outside supported range 0.." +
                      std::to_string(kMaxVertices));
    words_ = (n + 63) / 64;
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  }

  static Graph from_edges(int n,
                          const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw domain_error("edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ") has an endpoint outside 0.." +
                           std::to_string(n - 1));
      if (u == v)
        throw domain_error("self-loop (" + std::to_string(u) + "," +
                           std::to_string(v) + ") rejected");
      g.add_edge(u, v);
    }
    return g;
  }

  int order() const { return n_; }
  int row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) &
           1u;
  }

  void add_edge(int u, int v) {
    rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
    rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
  }

  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  int degree(int v) const {
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(w * 64 + b);
        bits &= bits - 1;
      }
    }
    return out;
  }

  // The card G-v: vertex v and its incident edges removed, remaining vertices
  // relabeled contiguously (labels above v shift down by one).
  Graph delete_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw domain_error("delete_vertex: vertex " + std::to_string(v) +
                         " out of range 0.." + std::to_string(n_ - 1));
    Graph g(n_ - 1);
    for (int a = 0; a < n_; ++a) {
      if (a == v) continue;
      int na = a < v ? a : a - 1;
      for (int b = a + 1; b < n_; ++b) {
        if (b == v || !has_edge(a, b)) continue;
        int nb = b < v ? b : b - 1;
        g.add_edge(na, nb);
      }
    }
    return g;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Raw adjacency words; usable as a map key for memoizing per-card work.
  const std::vector<std::uint64_t>& raw_bits() const { return rows_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw domain_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

// Component id per vertex, ids assigned in order of smallest member.
inline std::vector<int> component_ids(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        if (comp[u] == -1) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline std::vector<Graph> components(const Graph& g) {
  std::vector<int> comp = component_ids(g);
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> verts(count);
  for (int v = 0; v < g.order(); ++v) verts[comp[v]].push_back(v);
  std::vector<Graph> out;
  out.reserve(count);
  for (const auto& vs : verts) {
    Graph c(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.has_edge(vs[i], vs[j]))
          c.add_edge(static_cast<int>(i), static_cast<int>(j));
    out.push_back(std::move(c));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<int> comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

inline bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = color[v] ^ 1;
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Length of a shortest cycle, or nullopt for forests (girth infinity).
// BFS from every vertex; for each non-tree edge (u,w) the closed walk
// through the BFS root has length dist(u)+dist(w)+1 and contains a cycle
// no longer than that, and for a root on a shortest cycle the far edge of
// that cycle realizes its exact length.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  std::vector<int> order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    order.clear();
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          order.push_back(u);
        }
      }
    }
    for (int u = 0; u < n; ++u) {
      if (dist[u] == -1) continue;
      for (int w : g.neighbors(u)) {
        if (w <= u || dist[w] == -1) continue;
        if (parent[u] == w || parent[w] == u) continue;
        int cand = dist[u] + dist[w] + 1;
        if (best == -1 || cand < best) best = cand;
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

// Max over vertex pairs of the shortest-path distance in edges; nullopt if
// the graph is disconnected (infinite diameter).
inline std::optional<int> diameter(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = 0;
  std::vector<int> dist(n);
  std::vector<int> order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          order.push_back(u);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] == -1) return std::nullopt;
      best = std::max(best, dist[v]);
    }
  }
  return best;
}

struct Classification {
  int component_count = 0;
  int largest_component = 0;  // order of a largest component
  int cycle_rank = 0;         // e - n + components: 0 forest, 1 unicyclic
  bool connected = false;
  bool forest = false;
  bool tree = false;
  bool unicyclic = false;  // exactly one cycle, regardless of connectivity
  bool bipartite = false;
  bool multicyclic() const { return cycle_rank >= 2; }
};

inline Classification classify(const Graph& g) {
  Classification c;
  std::vector<int> comp = component_ids(g);
  c.component_count =
      comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> sizes(c.component_count, 0);
  for (int id : comp) ++sizes[id];
  c.largest_component =
      sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  c.cycle_rank = g.edge_count() - g.order() + c.component_count;
  c.connected = c.component_count <= 1;
  c.forest = c.cycle_rank == 0;
  c.tree = c.forest && c.connected && g.order() >= 1;
  c.unicyclic = c.cycle_rank == 1;
  c.bipartite = is_bipartite(g);
  return c;
}

enum class GraphClass {
  All,
  Tree,
  Forest,
  Unicyclic,
  Connected,
  Disconnected,
  Bipartite,
  NonBipartite,
  NonForest,
  MultiCyclic,  // cycle-count category >= 2
};

inline bool in_class(const Classification& c, GraphClass k) {
  switch (k) {
    case GraphClass::All: return true;
    case GraphClass::Tree: return c.tree;
    case GraphClass::Forest: return c.forest;
    case GraphClass::Unicyclic: return c.unicyclic;
    case GraphClass::Connected: return c.connected;
    case GraphClass::Disconnected: return !c.connected;
    case GraphClass::Bipartite: return c.bipartite;
    case GraphClass::NonBipartite: return !c.bipartite;
    case GraphClass::NonForest: return !c.forest;
    case GraphClass::MultiCyclic: return c.multicyclic();
  }
  return false;
}

inline const char* class_name(GraphClass k) {
  switch (k) {
    case GraphClass::All: return "all";
    case GraphClass::Tree: return "tree";
    case GraphClass::Forest: return "forest";
    case GraphClass::Unicyclic: return "unicyclic";
    case GraphClass::Connected: return "connected";
    case GraphClass::Disconnected: return "disconnected";
    case GraphClass::Bipartite: return "bipartite";
    case GraphClass::NonBipartite: return "nonbipartite";
    case GraphClass::NonForest: return "nonforest";
    case GraphClass::MultiCyclic: return "multicyclic";
  }
  return "?";
}

// Exact longest-path DP is exponential; cap documented here. Forests have
// no cap (linear per component).
inline constexpr int kLongestPathCap = 24;

namespace detail {

// Double BFS sweep on one tree component: farthest vertex from an arbitrary
// start, then the eccentricity of that vertex, is the tree diameter.
inline int tree_path_order(const Graph& g, const std::vector<int>& comp,
                           int comp_id, int start) {
  auto bfs_far = [&](int s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> order{s};
    dist[s] = 0;
    int far = s;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          order.push_back(u);
          if (dist[u] > dist[far]) far = u;
        }
      }
    }
    return std::make_pair(far, dist[far]);
  };
  (void)comp;
  (void)comp_id;
  auto [far, d1] = bfs_far(start);
  auto [far2, d2] = bfs_far(far);
  (void)far2;
  (void)d1;
  return d2 + 1;  // vertices on the path
}

}  // namespace detail

// Number of vertices on a longest simple path (the paper counts path length
// in vertices; a cycle of L vertices minus one vertex leaves a path on L-1
// vertices). Linear per component for forests, exact bitmask DP otherwise.
inline int longest_path_order(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  Classification c = classify(g);
  if (c.forest) {
    std::vector<int> comp = component_ids(g);
    std::vector<int> first(c.component_count, -1);
    for (int v = 0; v < n; ++v)
      if (first[comp[v]] == -1) first[comp[v]] = v;
    int best = 1;
    for (int id = 0; id < c.component_count; ++id)
      best = std::max(best, detail::tree_path_order(g, comp, id, first[id]));
    return best;
  }
  if (n > kLongestPathCap)
    throw cap_error("longest_path_order: non-forest order " +
                    std::to_string(n) + " exceeds cap " +
                    std::to_string(kLongestPathCap));
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;
  std::vector<std::uint32_t> endpoints(std::size_t(1) << n, 0);
  for (int v = 0; v < n; ++v) endpoints[std::uint32_t(1) << v] = 1u << v;
  int best = 1;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = endpoints[mask];
    if (!ends) continue;
    best = std::max(best, std::popcount(mask));
    std::uint32_t e = ends;
    while (e) {
      int v = std::countr_zero(e);
      e &= e - 1;
      std::uint32_t ext = adj[v] & ~mask;
      while (ext) {
        int u = std::countr_zero(ext);
        ext &= ext - 1;
        endpoints[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return best;
}

}  // namespace graphdeck
