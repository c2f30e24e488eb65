#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphdeck/canonical.hpp"
#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"
#include "graphdeck/graph6.hpp"

namespace graphdeck {

// Multiset of canonical forms with multiplicities, kept sorted by form.
using CardMultiset = std::vector<std::pair<CanonicalForm, int>>;

namespace detail {

inline void add_card(CardMultiset& cards, CanonicalForm form, int count = 1) {
  auto it = std::lower_bound(
      cards.begin(), cards.end(), form,
      [](const auto& entry, const CanonicalForm& f) { return entry.first < f; });
  if (it != cards.end() && it->first == form)
    it->second += count;
  else
    cards.insert(it, {std::move(form), count});
}

inline int multiset_total(const CardMultiset& cards) {
  int total = 0;
  for (const auto& [form, mult] : cards) total += mult;
  return total;
}

inline int multiset_common(const CardMultiset& a, const CardMultiset& b) {
  int common = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      common += std::min(a[i].second, b[j].second);
      ++i;
      ++j;
    }
  }
  return common;
}

}  // namespace detail

// The deck of an n-vertex graph: all n unlabeled cards G-v with
// multiplicities. Cards are stored as canonical forms only.
struct Deck {
  int parent_order = 0;
  CardMultiset cards;

  int total() const { return detail::multiset_total(cards); }
};

// A sub-multiset of some deck, with the claimed parent order carried
// explicitly (the recognizers always need n).
struct Subdeck {
  int claimed_parent_order = 0;
  CardMultiset cards;

  int total() const { return detail::multiset_total(cards); }
};

inline Deck full_deck(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw domain_error("full_deck: graph must have at least 1 vertex");
  Deck deck;
  deck.parent_order = n;
  // Deleting different vertices often yields byte-identical labeled cards
  // (e.g. any isolated vertex of a tail block); canonicalize each distinct
  // labeled card once.
  std::map<std::vector<std::uint64_t>, int> raw_counts;
  std::vector<Graph> raws;
  for (int v = 0; v < n; ++v) {
    Graph card = g.delete_vertex(v);
    auto [it, fresh] = raw_counts.try_emplace(card.raw_bits(), 0);
    ++it->second;
    if (fresh) raws.push_back(std::move(card));
  }
  for (const Graph& card : raws)
    detail::add_card(deck.cards, canonical_form(card),
                     raw_counts.at(card.raw_bits()));
  return deck;
}

inline Subdeck subdeck_of(const Deck& deck) {
  return Subdeck{deck.parent_order, deck.cards};
}

inline int common_card_count(const Deck& a, const Deck& b) {
  if (a.parent_order != b.parent_order)
    throw domain_error("common_card_count: parent orders differ (" +
                       std::to_string(a.parent_order) + " vs " +
                       std::to_string(b.parent_order) + ")");
  return detail::multiset_common(a.cards, b.cards);
}

inline int common_card_count(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw domain_error("common_card_count: graphs must have equal order");
  return common_card_count(full_deck(g), full_deck(h));
}

inline bool deck_contains(const Deck& full, const Subdeck& sub) {
  if (!sub.cards.empty() && sub.claimed_parent_order != full.parent_order)
    throw domain_error("deck_contains: card orders do not match");
  std::size_t i = 0;
  for (const auto& [form, mult] : sub.cards) {
    while (i < full.cards.size() && full.cards[i].first < form) ++i;
    if (i == full.cards.size() || !(full.cards[i].first == form) ||
        full.cards[i].second < mult)
      return false;
  }
  return true;
}

// e(G) from the complete deck: each edge survives on exactly n-2 cards, so
// the card edge counts sum to (n-2) e(G).
inline int edge_count_from_deck(const Deck& deck) {
  const int n = deck.parent_order;
  if (n < 3) throw domain_error("edge_count_from_deck: needs order >= 3");
  if (deck.total() != n)
    throw data_error("edge_count_from_deck: deck has " +
                     std::to_string(deck.total()) + " cards, expected " +
                     std::to_string(n));
  long long sum = 0;
  for (const auto& [form, mult] : deck.cards)
    sum += static_cast<long long>(form.to_graph().edge_count()) * mult;
  if (sum % (n - 2) != 0)
    throw data_error("inconsistent deck: card edge sum " + std::to_string(sum) +
                     " not divisible by n-2 = " + std::to_string(n - 2));
  return static_cast<int>(sum / (n - 2));
}

// Number of cards of a connected graph G with a connected component
// isomorphic to H (hypotheses: H connected, v(H) < v(G)/2). The count is
// at most floor(v(G)/(v(H)+1)).
inline int cards_with_component(const Graph& g, const Graph& h) {
  if (!is_connected(g))
    throw domain_error("cards_with_component: G must be connected");
  if (!is_connected(h) || h.order() < 1)
    throw domain_error("cards_with_component: H must be connected");
  if (2 * h.order() >= g.order())
    throw domain_error("cards_with_component: requires v(H) < v(G)/2");
  const CanonicalForm target = canonical_form(h);
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (const Graph& comp : components(g.delete_vertex(v))) {
      if (comp.order() != h.order()) continue;
      if (canonical_form(comp) == target) {
        ++count;
        break;
      }
    }
  }
  return count;
}

// --- Deck file format -------------------------------------------------------
// First line "n=<parent order>", then one graph6 line per card; repeated
// lines encode multiplicity. Lines are emitted in certificate order, so the
// encoding of a given multiset is unique.

inline std::string write_deck_file(int parent_order,
                                   const CardMultiset& cards) {
  std::string out = "n=" + std::to_string(parent_order) + "\n";
  for (const auto& [form, mult] : cards) {
    std::string line = form.to_graph6();
    for (int k = 0; k < mult; ++k) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

inline std::string write_deck_file(const Deck& deck) {
  return write_deck_file(deck.parent_order, deck.cards);
}

inline std::string write_deck_file(const Subdeck& sub) {
  return write_deck_file(sub.claimed_parent_order, sub.cards);
}

// Parses the shared on-disk format. Cards are re-canonicalized, so files
// written with arbitrary labelings load correctly.
inline Subdeck read_subdeck_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw data_error("deck file: missing n=<order> header", 0);
  Subdeck sub;
  try {
    sub.claimed_parent_order = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw data_error("deck file: bad order in header '" + line + "'", 2);
  }
  if (sub.claimed_parent_order < 1 || sub.claimed_parent_order > kMaxVertices)
    throw cap_error("deck file: order " + line.substr(2) + " out of range");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Graph card = decode_graph6(line);
    if (card.order() != sub.claimed_parent_order - 1)
      throw data_error("deck file line " + std::to_string(line_no) +
                       ": card order " + std::to_string(card.order()) +
                       " does not match n-1");
    detail::add_card(sub.cards, canonical_form(card));
  }
  return sub;
}

inline Deck read_deck_file(const std::string& text) {
  Subdeck sub = read_subdeck_file(text);
  if (sub.total() != sub.claimed_parent_order)
    throw data_error("deck file: " + std::to_string(sub.total()) +
                     " cards do not form a full deck of order " +
                     std::to_string(sub.claimed_parent_order));
  return Deck{sub.claimed_parent_order, std::move(sub.cards)};
}

}  // namespace graphdeck
