#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "graphdeck/canonical.hpp"
#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"

namespace graphdeck {

// Correctness reference for the canonical form: the minimum packed adjacency
// string over all vertex permutations, computed by plain enumeration.
// Feasible up to order 8 (8! labelings); canonical_form must agree with this
// on every graph it accepts in that range.
inline constexpr int kBruteForceCap = 8;

inline CanonicalForm brute_force_canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kBruteForceCap)
    throw cap_error("brute_force_canonical_form: order " + std::to_string(n) +
                    " exceeds cap " + std::to_string(kBruteForceCap));
  CanonicalForm form;
  form.n = n;
  if (n <= 1) {
    form.bits = {};
    return form;
  }
  // At most 28 pair bits, so a certificate fits one word packed from the
  // top; the integer order equals the byte-string order.
  std::uint32_t adj[kBruteForceCap] = {};
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t cert = 0;
    int k = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++k)
        cert |= ((adj[perm[i]] >> perm[j]) & 1u) << (31 - k);
    if (cert < best) best = cert;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const int nbits = n * (n - 1) / 2;
  form.bits.assign((nbits + 7) / 8, 0);
  for (int k = 0; k < nbits; ++k)
    if ((best >> (31 - k)) & 1)
      form.bits[k >> 3] |= static_cast<std::uint8_t>(1u << (7 - (k & 7)));
  return form;
}

inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return brute_force_canonical_form(a) == brute_force_canonical_form(b);
}

}  // namespace graphdeck
