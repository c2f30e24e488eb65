#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graphdeck/canonical.hpp"
#include "graphdeck/deck.hpp"
#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"
#include "graphdeck/parallel.hpp"

namespace graphdeck {

enum class RecProperty { Tree, Forest, Connected, Bipartite, Girth };
enum class RecDecision { Holds, Fails, Value, Ambiguous };
enum class RecMethod { DirectRule, PreimageOracle };

inline const char* property_name(RecProperty p) {
  switch (p) {
    case RecProperty::Tree: return "tree";
    case RecProperty::Forest: return "forest";
    case RecProperty::Connected: return "connected";
    case RecProperty::Bipartite: return "bipartite";
    case RecProperty::Girth: return "girth";
  }
  return "?";
}

inline std::optional<RecProperty> parse_property(const std::string& s) {
  for (RecProperty p : {RecProperty::Tree, RecProperty::Forest,
                        RecProperty::Connected, RecProperty::Bipartite,
                        RecProperty::Girth})
    if (s == property_name(p)) return p;
  return std::nullopt;
}

inline constexpr int kWitnessLimit = 50;
inline constexpr int kDefaultOracleCap = 11;

struct Verdict {
  RecProperty property = RecProperty::Tree;
  RecDecision decision = RecDecision::Ambiguous;
  RecMethod method = RecMethod::PreimageOracle;
  // Engaged for girth verdicts with decision == Value; nullopt there means
  // girth infinity (the preimages are forests).
  std::optional<int> value;
  int n = 0;
  int subdeck_size = 0;
  long long witness_count = 0;  // consistent preimages found (oracle path)
  std::vector<CanonicalForm> witnesses;  // truncated at kWitnessLimit
};

namespace detail {

// Orbit-minimal representative of a neighborhood subset under the card's
// discovered automorphisms; non-minimal subsets yield duplicate extensions
// and are skipped. The closure is capped; overflow just means less pruning.
inline bool subset_is_orbit_minimal(std::uint32_t mask,
                                    const std::vector<std::vector<int>>& gens,
                                    int n) {
  if (gens.empty()) return true;
  std::vector<std::uint32_t> frontier{mask};
  std::vector<std::uint32_t> seen{mask};
  constexpr std::size_t kClosureCap = 2048;
  while (!frontier.empty()) {
    std::uint32_t cur = frontier.back();
    frontier.pop_back();
    for (const auto& gamma : gens) {
      std::uint32_t img = 0;
      for (int v = 0; v < n; ++v)
        if ((cur >> v) & 1) img |= 1u << gamma[v];
      if (img < mask) return false;
      if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
        if (seen.size() >= kClosureCap) return true;
        seen.push_back(img);
        frontier.push_back(img);
      }
    }
  }
  return true;
}

}  // namespace detail

// All order-n graphs (up to isomorphism) whose full deck contains the
// subdeck. Every preimage is a one-vertex extension of any fixed card, so
// the lexicographically smallest card is extended by all 2^(n-1)
// neighborhoods, canonicalized, deduplicated, and filtered by containment.
inline std::vector<CanonicalForm> preimage_search(const Subdeck& sub, int n,
                                                  int cap = kDefaultOracleCap,
                                                  int threads = 0) {
  if (sub.cards.empty()) throw domain_error("preimage_search: empty subdeck");
  if (sub.claimed_parent_order != n)
    throw domain_error("preimage_search: subdeck claims parent order " +
                       std::to_string(sub.claimed_parent_order) +
                       ", queried with n = " + std::to_string(n));
  if (sub.cards[0].first.n != n - 1)
    throw domain_error("preimage_search: cards must have order n-1");
  if (n > cap)
    throw cap_error("preimage_search: order " + std::to_string(n) +
                    " exceeds oracle cap " + std::to_string(cap));

  const Graph card = sub.cards[0].first.to_graph();
  const int m = n - 1;
  const auto gens = automorphism_generators(card);

  const std::uint32_t subsets = 1u << m;
  std::vector<std::optional<CanonicalForm>> per_mask(subsets);
  parallel_for(0, static_cast<int>(subsets), threads, [&](int mask) {
    if (!detail::subset_is_orbit_minimal(static_cast<std::uint32_t>(mask),
                                         gens, m))
      return;
    Graph child(n);
    for (auto [u, v] : card.edges()) child.add_edge(u, v);
    for (int v = 0; v < m; ++v)
      if ((mask >> v) & 1) child.add_edge(v, m);
    per_mask[mask] = canonical_form(child);
  });

  std::vector<CanonicalForm> candidates;
  for (auto& c : per_mask)
    if (c) candidates.push_back(std::move(*c));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<char> keep(candidates.size(), 0);
  parallel_for(0, static_cast<int>(candidates.size()), threads, [&](int i) {
    keep[i] = deck_contains(full_deck(candidates[i].to_graph()), sub) ? 1 : 0;
  });
  std::vector<CanonicalForm> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(std::move(candidates[i]));
  return out;
}

// Candidate girth from an all-forest subdeck under the hidden-cycle rule:
// when the parent is known to contain a cycle and enough cards are present,
// the cycle length is one more than the smallest longest path over the
// cards. Without that external certificate the value is only conditional.
struct GirthEstimate {
  int candidate_girth = 0;
  bool valid = false;  // true only when the caller certified a cycle exists
};

inline GirthEstimate girth_direct(const Subdeck& sub, int n,
                                  bool parent_known_cyclic = false) {
  if (sub.cards.empty()) throw domain_error("girth_direct: empty subdeck");
  if (3 * (sub.total() - 1) < 2 * n)
    throw domain_error(
        "girth_direct: subdeck smaller than ceil(2n/3)+1 cards, hypothesis "
        "unmet");
  int min_path = -1;
  for (const auto& [form, mult] : sub.cards) {
    Graph g = form.to_graph();
    if (!classify(g).forest)
      throw domain_error("girth_direct: all cards must be forests");
    int lp = longest_path_order(g);
    if (min_path == -1 || lp < min_path) min_path = lp;
  }
  return GirthEstimate{min_path + 1, parent_known_cyclic};
}

// Decides a property from a partial deck. Unconditionally sound direct rules
// fire first; otherwise every consistent preimage is enumerated and the
// verdict is their consensus, or Ambiguous when they disagree.
inline Verdict recognize(const Subdeck& sub, int n, RecProperty prop,
                         int oracle_cap = kDefaultOracleCap, int threads = 0) {
  if (sub.cards.empty()) throw domain_error("recognize: empty subdeck");
  if (sub.claimed_parent_order != n)
    throw domain_error("recognize: subdeck claims parent order " +
                       std::to_string(sub.claimed_parent_order) +
                       ", queried with n = " + std::to_string(n));
  if (sub.cards[0].first.n != n - 1)
    throw domain_error("recognize: cards must have order n-1");

  Verdict v;
  v.property = prop;
  v.n = n;
  v.subdeck_size = sub.total();

  // Direct rules.
  if (prop == RecProperty::Tree || prop == RecProperty::Forest ||
      prop == RecProperty::Bipartite) {
    for (const auto& [form, mult] : sub.cards) {
      Graph card = form.to_graph();
      Classification c = classify(card);
      if ((prop == RecProperty::Bipartite && !c.bipartite) ||
          (prop != RecProperty::Bipartite && !c.forest)) {
        v.decision = RecDecision::Fails;
        v.method = RecMethod::DirectRule;
        return v;
      }
    }
  } else if (prop == RecProperty::Girth && 3 * (v.subdeck_size - 1) >= 2 * n) {
    // Any cycle of length at most 2n/3 is visible on some card of a subdeck
    // this large, so a visible minimum at most 2n/3 is the girth itself.
    std::optional<int> min_girth;
    for (const auto& [form, mult] : sub.cards) {
      std::optional<int> g = girth(form.to_graph());
      if (g && (!min_girth || *g < *min_girth)) min_girth = g;
    }
    if (min_girth && 3 * *min_girth <= 2 * n) {
      v.decision = RecDecision::Value;
      v.value = min_girth;
      v.method = RecMethod::DirectRule;
      return v;
    }
  }

  // Oracle fallback.
  if (n > oracle_cap)
    throw cap_error("recognize: no direct rule fired and order " +
                    std::to_string(n) + " exceeds oracle cap " +
                    std::to_string(oracle_cap) +
                    ", undecidable at this scale");
  std::vector<CanonicalForm> preimages = preimage_search(sub, n, oracle_cap,
                                                         threads);
  if (preimages.empty())
    throw data_error("recognize: subdeck has no consistent preimage of order " +
                     std::to_string(n));
  v.method = RecMethod::PreimageOracle;
  v.witness_count = static_cast<long long>(preimages.size());

  bool agree = true;
  if (prop == RecProperty::Girth) {
    std::optional<int> first = girth(preimages[0].to_graph());
    for (std::size_t i = 1; i < preimages.size() && agree; ++i)
      agree = girth(preimages[i].to_graph()) == first;
    if (agree) {
      v.decision = RecDecision::Value;
      v.value = first;
    }
  } else {
    auto holds = [&](const CanonicalForm& f) {
      Classification c = classify(f.to_graph());
      switch (prop) {
        case RecProperty::Tree: return c.tree;
        case RecProperty::Forest: return c.forest;
        case RecProperty::Connected: return c.connected;
        case RecProperty::Bipartite: return c.bipartite;
        case RecProperty::Girth: break;
      }
      return false;
    };
    bool first = holds(preimages[0]);
    for (std::size_t i = 1; i < preimages.size() && agree; ++i)
      agree = holds(preimages[i]) == first;
    if (agree) v.decision = first ? RecDecision::Holds : RecDecision::Fails;
  }
  if (!agree) v.decision = RecDecision::Ambiguous;

  const std::size_t shown =
      std::min<std::size_t>(preimages.size(), kWitnessLimit);
  v.witnesses.assign(preimages.begin(), preimages.begin() + shown);
  return v;
}

}  // namespace graphdeck
