#pragma once

#include <string>
#include <vector>

#include "graphdeck/canonical.hpp"
#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"

namespace graphdeck {

// S1[G]: one new pendant leaf attached to every vertex. Original vertices
// keep their labels; the leaf of vertex v is v(G)+v.
inline Graph star(const Graph& g) {
  const int n = g.order();
  Graph out(2 * n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < n; ++v) out.add_edge(v, n + v);
  return out;
}

// S1[G]': the star of G minus one leaf. Only well-defined when G is
// vertex-transitive (all leaves are then equivalent); checked exactly via
// the automorphism orbit of a pinned vertex.
inline Graph star_minus_leaf(const Graph& g) {
  if (!is_vertex_transitive(g))
    throw domain_error(
        "star_minus_leaf: not well-defined, input is not vertex-transitive");
  Graph s = star(g);
  return s.delete_vertex(s.order() - 1);
}

// One member of the three extremal forest/unicyclic families. F and G share
// exactly floor(n/2)+1 cards.
struct FamilyInstance {
  int family_id = 0;
  int k = 0;
  int n = 0;
  Graph forest;         // F
  Graph non_forest;     // G, unicyclic
  int expected_common = 0;  // floor(n/2)+1
};

namespace detail {

inline Graph k2_blocks(int count) {
  Graph g(2 * count);
  for (int i = 0; i < count; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

}  // namespace detail

// Family 1: F = P_k u (k+1)K1,      G = C_{k+1} u kK1,          n = 2k+1
// Family 2: F = P_{2k-1} u kK2,     G = C_{2k} u (k-1)K2 u K1,  n = 4k-1
// Family 3: F = S1[P_k] u K1,       G = S1[C_{k+1}]',           n = 2k+1
inline FamilyInstance family(int id, int k) {
  if (id < 1 || id > 3)
    throw domain_error("family: id must be 1, 2 or 3");
  if (k < 2)
    throw domain_error("family " + std::to_string(id) +
                       ": requires k >= 2 so that n >= 5");
  FamilyInstance inst;
  inst.family_id = id;
  inst.k = k;
  switch (id) {
    case 1:
      inst.n = 2 * k + 1;
      inst.forest = disjoint_union(path_graph(k), empty_graph(k + 1));
      inst.non_forest = disjoint_union(cycle_graph(k + 1), empty_graph(k));
      break;
    case 2:
      inst.n = 4 * k - 1;
      inst.forest = disjoint_union(path_graph(2 * k - 1), detail::k2_blocks(k));
      inst.non_forest = disjoint_union(
          disjoint_union(cycle_graph(2 * k), detail::k2_blocks(k - 1)),
          empty_graph(1));
      break;
    case 3:
      inst.n = 2 * k + 1;
      inst.forest = disjoint_union(star(path_graph(k)), empty_graph(1));
      inst.non_forest = star_minus_leaf(cycle_graph(k + 1));
      break;
  }
  inst.expected_common = inst.n / 2 + 1;
  return inst;
}

// Sharpness construction for the component-count bound: a cycle on
// target_n - k*floor(target_n/(k+1)) vertices (k = v(H)) with a copy of H
// hanging off each of floor(target_n/(k+1)) distinct cycle vertices, joined
// by a new edge to H's vertex 0. Deleting an attachment vertex leaves its
// H-copy as a component, so cards_with_component(result, H) attains
// floor(target_n/(k+1)).
inline Graph lemma_a1_sharp(const Graph& h, int target_n) {
  const int k = h.order();
  if (k < 1 || !is_connected(h))
    throw domain_error("lemma_a1_sharp: H must be connected and nonempty");
  if (2 * k >= target_n)
    throw domain_error("lemma_a1_sharp: requires v(H) < n/2");
  const int copies = target_n / (k + 1);
  const int cycle_order = target_n - k * copies;
  if (cycle_order < 3 || cycle_order < copies)
    throw domain_error("lemma_a1_sharp: infeasible, cycle on " +
                       std::to_string(cycle_order) + " vertices cannot host " +
                       std::to_string(copies) + " attachments");
  Graph g(target_n);
  for (int i = 0; i < cycle_order; ++i)
    g.add_edge(i, (i + 1) % cycle_order);
  const auto h_edges = h.edges();
  for (int c = 0; c < copies; ++c) {
    const int base = cycle_order + c * k;
    for (auto [u, v] : h_edges) g.add_edge(base + u, base + v);
    g.add_edge(c, base);
  }
  return g;
}

}  // namespace graphdeck
