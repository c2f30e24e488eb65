#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"
#include "graphdeck/graph6.hpp"

namespace graphdeck {

// Certificate with the property canonical_form(G) == canonical_form(H)
// iff G and H are isomorphic. The bytes are the bit-packed upper triangle
// (column order, most significant bit first) of the adjacency matrix of G
// under a canonical labeling, so a certificate decodes back into a concrete
// graph.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bits;

  bool operator==(const CanonicalForm& o) const {
    return n == o.n && bits == o.bits;
  }
  bool operator<(const CanonicalForm& o) const {
    if (n != o.n) return n < o.n;
    return bits < o.bits;
  }

  bool bit(long long k) const { return (bits[k >> 3] >> (7 - (k & 7))) & 1; }

  Graph to_graph() const {
    Graph g(n);
    long long k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (bit(k)) g.add_edge(i, j);
    return g;
  }

  std::string to_graph6() const { return encode_graph6(to_graph()); }

  std::uint64_t hash64() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint8_t b) {
      h ^= b;
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint8_t>(n));
    mix(static_cast<std::uint8_t>(n >> 8));
    for (std::uint8_t b : bits) mix(b);
    return h;
  }
};

namespace detail {

// order[i] = original vertex placed at canonical position i.
inline std::vector<std::uint8_t> pack_cert(const Graph& g,
                                           const std::vector<int>& order) {
  const int n = g.order();
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> out(static_cast<std::size_t>((nbits + 7) / 8), 0);
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.has_edge(order[i], order[j]))
        out[k >> 3] |= static_cast<std::uint8_t>(1u << (7 - (k & 7)));
  return out;
}

// ---------------------------------------------------------------------------
// Exact tier (order <= 8): the labeling minimizing the packed adjacency
// string, found by branch and bound over positions. With at most 28 pair
// bits the whole certificate fits one 32-bit word, packed from the top.
// ---------------------------------------------------------------------------

inline constexpr int kExactTierCap = 8;

class MinStringSearch {
 public:
  explicit MinStringSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      std::uint32_t row = 0;
      for (int u : g.neighbors(v)) row |= 1u << u;
      adj_[v] = row;
    }
  }

  std::vector<int> run() {
    chosen_.assign(n_, -1);
    have_best_ = false;
    descend(0, 0u, 0, 0u);
    return best_perm_;
  }

 private:
  void descend(int p, std::uint32_t partial, int len, std::uint32_t used) {
    if (p == n_) {
      if (!have_best_ || partial < best_) {
        best_ = partial;
        best_perm_.assign(chosen_.begin(), chosen_.end());
        have_best_ = true;
      }
      return;
    }
    // Column bits of candidate v against the already placed prefix,
    // most significant bit = position 0.
    struct Cand {
      std::uint32_t col;
      int v;
    };
    Cand cands[kExactTierCap];
    int count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < p; ++i)
        col = (col << 1) | ((adj_[chosen_[i]] >> v) & 1);
      cands[count++] = {col, v};
    }
    std::sort(cands, cands + count, [](const Cand& a, const Cand& b) {
      return a.col != b.col ? a.col < b.col : a.v < b.v;
    });
    const int new_len = len + p;
    for (int c = 0; c < count; ++c) {
      // Interchangeable siblings: same column so far and identical adjacency
      // outside the pair means swapping them is an automorphism.
      bool twin = false;
      for (int d = 0; d < c && cands[d].col == cands[c].col; ++d) {
        std::uint32_t off = ~((1u << cands[d].v) | (1u << cands[c].v));
        if ((adj_[cands[d].v] & off) == (adj_[cands[c].v] & off)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      std::uint32_t np =
          partial | (new_len ? cands[c].col << (32 - new_len) : 0u);
      if (have_best_) {
        std::uint32_t tb =
            new_len ? best_ & ~((1u << (32 - new_len)) - 1) : 0u;
        if (np > tb) break;  // candidates ascend, so all later ones prune too
      }
      chosen_[p] = cands[c].v;
      descend(p + 1, np, new_len, used | (1u << cands[c].v));
    }
    chosen_[p] = -1;
  }

  const Graph& g_;
  int n_;
  std::uint32_t adj_[kExactTierCap] = {};
  std::vector<int> chosen_;
  std::uint32_t best_ = 0;
  bool have_best_ = false;
  std::vector<int> best_perm_;
};

// ---------------------------------------------------------------------------
// Refinement tier (order > 8): individualization-refinement search. The
// certificate is the smallest packed adjacency string over the leaves of the
// search tree. Automorphisms discovered from equal-certificate leaves merge
// vertex orbits; children inside an orbit already explored at that node are
// skipped (only generators fixing the node's individualized vertices apply),
// and a leaf matching the first or best leaf backjumps to the point where
// their paths diverged, abandoning the mirrored subtree.
// ---------------------------------------------------------------------------

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

class RefinementSearch {
 public:
  using Mask = std::vector<std::uint64_t>;

  explicit RefinementSearch(const Graph& g)
      : g_(g), n_(g.order()), words_(g.row_words()) {}

  // initial_cells: ordered partition; empty means the unit partition.
  void run(std::vector<std::vector<int>> cells) {
    if (cells.empty() && n_ > 0) {
      cells.emplace_back(n_);
      for (int v = 0; v < n_; ++v) cells[0][v] = v;
    }
    have_zeta_ = false;
    have_best_ = false;
    gens_.clear();
    if (n_ == 0) {
      best_order_.clear();
      best_.clear();
      have_best_ = true;
      return;
    }
    std::vector<Mask> seeds;
    seeds.reserve(cells.size());
    for (const auto& c : cells) seeds.push_back(mask_of(c));
    std::vector<int> path;
    search(cells, seeds, path);
  }

  const std::vector<int>& best_order() const { return best_order_; }
  const std::vector<std::uint8_t>& best_cert() const { return best_; }
  const std::vector<std::vector<int>>& generators() const { return gens_; }

 private:
  Mask mask_of(const std::vector<int>& verts) const {
    Mask m(words_, 0);
    for (int v : verts) m[v >> 6] |= 1ULL << (v & 63);
    return m;
  }

  int count_in(int v, const Mask& m) const {
    const std::uint64_t* r = g_.row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w] & m[w]);
    return c;
  }

  // Equitable refinement: split cells by neighbor counts against queued
  // splitter sets until stable. Sub-cells are ordered by ascending count,
  // which keeps the procedure equivariant under isomorphism.
  void refine(std::vector<std::vector<int>>& cells,
              std::vector<Mask>& queue) const {
    for (std::size_t qh = 0; qh < queue.size(); ++qh) {
      Mask splitter = queue[qh];
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].size() <= 1) continue;
        std::map<int, std::vector<int>> groups;
        for (int v : cells[ci]) groups[count_in(v, splitter)].push_back(v);
        if (groups.size() <= 1) continue;
        std::vector<std::vector<int>> parts;
        parts.reserve(groups.size());
        for (auto& [cnt, verts] : groups) parts.push_back(std::move(verts));
        cells[ci] = std::move(parts[0]);
        cells.insert(cells.begin() + ci + 1,
                     std::make_move_iterator(parts.begin() + 1),
                     std::make_move_iterator(parts.end()));
        for (std::size_t t = 0; t < parts.size(); ++t)
          queue.push_back(mask_of(cells[ci + t]));
        ci += parts.size() - 1;
      }
    }
    queue.clear();
  }

  static constexpr std::size_t kNoJump = static_cast<std::size_t>(-1);

  // Records the automorphism mapping ref_order to order (both leaves have
  // equal certificates, so positionwise composition is an automorphism).
  void record_automorphism(const std::vector<int>& ref_order,
                           const std::vector<int>& order) {
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[ref_order[i]] = order[i];
      if (ref_order[i] != order[i]) identity = false;
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  static std::size_t common_prefix(const std::vector<int>& a,
                                   const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  std::size_t leaf(const std::vector<std::vector<int>>& cells,
                   const std::vector<int>& path) {
    std::vector<int> order(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) order[i] = cells[i][0];
    std::vector<std::uint8_t> cert = pack_cert(g_, order);
    if (!have_zeta_) {
      zeta_ = cert;
      zeta_order_ = order;
      zeta_path_ = path;
      have_zeta_ = true;
      best_ = std::move(cert);
      best_order_ = std::move(order);
      best_path_ = path;
      have_best_ = true;
      return kNoJump;
    }
    if (cert < best_) {
      best_ = std::move(cert);
      best_order_ = std::move(order);
      best_path_ = path;
      return kNoJump;
    }
    // A leaf matching a stored leaf yields an automorphism; the subtree of
    // the diverging child is its image and needs no further exploration, so
    // resume at the deepest node shared with the matched leaf's path.
    std::size_t jump = kNoJump;
    if (cert == zeta_) {
      record_automorphism(zeta_order_, order);
      jump = common_prefix(path, zeta_path_);
    }
    if (cert == best_ && best_order_ != zeta_order_) {
      record_automorphism(best_order_, order);
      std::size_t cp = common_prefix(path, best_path_);
      if (jump == kNoJump || cp > jump) jump = cp;
    }
    return jump;
  }

  std::size_t search(std::vector<std::vector<int>> cells,
                     std::vector<Mask> seeds, std::vector<int>& path) {
    refine(cells, seeds);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) return leaf(cells, path);

    const std::size_t my_depth = path.size();
    UnionFind uf(n_);
    std::size_t gens_seen = 0;
    auto absorb_gens = [&] {
      for (; gens_seen < gens_.size(); ++gens_seen) {
        const auto& gamma = gens_[gens_seen];
        bool fixes = true;
        for (int x : path) {
          if (gamma[x] != x) {
            fixes = false;
            break;
          }
        }
        if (!fixes) continue;
        for (int v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
      }
    };

    const std::vector<int> cell = cells[target];
    std::vector<int> explored;
    for (int v : cell) {
      absorb_gens();
      bool skip = false;
      for (int u : explored) {
        if (uf.find(u) == uf.find(v)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      explored.push_back(v);

      std::vector<std::vector<int>> child = cells;
      std::vector<int> rest;
      rest.reserve(cell.size() - 1);
      for (int u : cell)
        if (u != v) rest.push_back(u);
      child[target] = {v};
      std::vector<Mask> child_seeds;
      child_seeds.push_back(mask_of(child[target]));
      if (!rest.empty()) {
        child.insert(child.begin() + target + 1, rest);
        child_seeds.push_back(mask_of(rest));
      }
      path.push_back(v);
      std::size_t jump = search(std::move(child), std::move(child_seeds), path);
      path.pop_back();
      if (jump != kNoJump && jump < my_depth) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  int words_;
  std::vector<std::vector<int>> gens_;
  std::vector<std::uint8_t> zeta_;
  std::vector<int> zeta_order_;
  std::vector<int> zeta_path_;
  bool have_zeta_ = false;
  std::vector<std::uint8_t> best_;
  std::vector<int> best_order_;
  std::vector<int> best_path_;
  bool have_best_ = false;
};

inline std::vector<int> connected_canonical_order(const Graph& g) {
  if (g.order() <= kExactTierCap) return MinStringSearch(g).run();
  RefinementSearch search(g);
  search.run({});
  return search.best_order();
}

// Orders up to 8 take the exact minimum adjacency string over all labelings
// (the brute-force oracle's target). Above that, each connected component is
// canonicalized on its own and the blocks are assembled sorted by
// (order, certificate); this sidesteps the search-tree blowup on graphs with
// many mutually isomorphic components.
inline std::vector<int> canonical_order(const Graph& g) {
  const int n = g.order();
  if (n <= kExactTierCap) return MinStringSearch(g).run();

  std::vector<int> comp = component_ids(g);
  const int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  if (count <= 1) return connected_canonical_order(g);

  struct Block {
    int order;
    std::vector<std::uint8_t> cert;
    std::vector<int> original;  // original labels in canonical order
  };
  std::vector<std::vector<int>> verts(count);
  for (int v = 0; v < n; ++v) verts[comp[v]].push_back(v);
  std::vector<Block> blocks;
  blocks.reserve(count);
  for (const auto& vs : verts) {
    Graph cg(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (g.has_edge(vs[i], vs[j]))
          cg.add_edge(static_cast<int>(i), static_cast<int>(j));
    std::vector<int> local = connected_canonical_order(cg);
    Block b;
    b.order = cg.order();
    b.cert = pack_cert(cg, local);
    b.original.reserve(vs.size());
    for (int idx : local) b.original.push_back(vs[idx]);
    blocks.push_back(std::move(b));
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) {
                     if (a.order != b.order) return a.order < b.order;
                     return a.cert < b.cert;
                   });
  std::vector<int> order;
  order.reserve(n);
  for (const Block& b : blocks)
    order.insert(order.end(), b.original.begin(), b.original.end());
  return order;
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm form;
  form.n = g.order();
  form.bits = detail::pack_cert(g, detail::canonical_order(g));
  return form;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// Automorphisms discovered during refinement search. Sound (every returned
// permutation is an automorphism) but not guaranteed to generate the full
// group; callers use them for pruning only.
inline std::vector<std::vector<int>> automorphism_generators(const Graph& g) {
  detail::RefinementSearch search(g);
  search.run({});
  return search.generators();
}

// Certificate of (G, v) with v individualized. Two vertices are in the same
// orbit of the automorphism group iff their pinned certificates are equal.
inline CanonicalForm canonical_form_pinned(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw domain_error("canonical_form_pinned: vertex out of range");
  std::vector<std::vector<int>> cells;
  cells.push_back({v});
  std::vector<int> rest;
  for (int u = 0; u < g.order(); ++u)
    if (u != v) rest.push_back(u);
  if (!rest.empty()) cells.push_back(std::move(rest));
  detail::RefinementSearch search(g);
  search.run(std::move(cells));
  CanonicalForm form;
  form.n = g.order();
  form.bits = search.best_cert();
  return form;
}

inline bool is_vertex_transitive(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  CanonicalForm ref = canonical_form_pinned(g, 0);
  for (int v = 1; v < n; ++v)
    if (!(canonical_form_pinned(g, v) == ref)) return false;
  return true;
}

}  // namespace graphdeck
