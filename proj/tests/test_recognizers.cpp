#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "graphdeck/deck.hpp"
#include "graphdeck/enumerate.hpp"
#include "graphdeck/recognizers.hpp"
#include "test_helpers.hpp"

using namespace graphdeck;
using testutil::brute_iso_classes;

namespace {

Subdeck single_card(const Graph& card, int parent_order, int mult = 1) {
  Subdeck sub;
  sub.claimed_parent_order = parent_order;
  detail::add_card(sub.cards, canonical_form(card), mult);
  return sub;
}

// Subdeck with the first `size` cards of the full deck in certificate order.
Subdeck prefix_subdeck(const Graph& g, int size) {
  Deck deck = full_deck(g);
  Subdeck sub;
  sub.claimed_parent_order = deck.parent_order;
  for (const auto& [form, mult] : deck.cards) {
    int take = std::min(mult, size - sub.total());
    if (take > 0) detail::add_card(sub.cards, form, take);
  }
  return sub;
}

}  // namespace

TEST_CASE("preimages of single-card subdecks at order 3", "[recognizers]") {
  // independent oracle: filter all 3-vertex classes by deck containment
  auto oracle = [&](const Subdeck& sub) {
    std::set<std::vector<std::uint8_t>> expected;
    for (const Graph& g : brute_iso_classes(3))
      if (deck_contains(full_deck(g), sub))
        expected.insert(canonical_form(g).bits);
    return expected;
  };
  Subdeck k2 = single_card(path_graph(2), 3);
  auto got = preimage_search(k2, 3);
  std::set<std::vector<std::uint8_t>> got_set;
  for (const auto& f : got) got_set.insert(f.bits);
  CHECK(got_set == oracle(k2));
  CHECK(got.size() == 3);  // P3, K3, K2uK1

  Subdeck e2 = single_card(Graph(2), 3);
  got = preimage_search(e2, 3);
  got_set.clear();
  for (const auto& f : got) got_set.insert(f.bits);
  CHECK(got_set == oracle(e2));
  CHECK(got.size() == 3);  // P3, K2uK1, 3K1
}

TEST_CASE("full decks pin down their graph at small order", "[recognizers]") {
  // every graph here is reconstructible: its full deck has exactly one
  // preimage. Ground truth independently: group classes by deck multiset.
  for (int n = 3; n <= 6; ++n) {
    auto classes = brute_iso_classes(n);
    std::map<std::string, int> deck_owners;
    for (const Graph& g : classes) ++deck_owners[write_deck_file(full_deck(g))];
    for (const Graph& g : classes) {
      Deck deck = full_deck(g);
      auto pre = preimage_search(subdeck_of(deck), n);
      bool contains_g = false;
      for (const auto& f : pre)
        if (f == canonical_form(g)) contains_g = true;
      CHECK(contains_g);
      if (deck_owners[write_deck_file(deck)] == 1) {
        CHECK(pre.size() == 1);
      }
    }
  }
}

TEST_CASE("preimage search preconditions", "[recognizers]") {
  CHECK_THROWS_AS(preimage_search(Subdeck{5, {}}, 5), domain_error);
  Subdeck sub = single_card(path_graph(2), 3);
  CHECK_THROWS_AS(preimage_search(sub, 4), domain_error);
  Subdeck big = single_card(path_graph(11), 12);
  CHECK_THROWS_AS(preimage_search(big, 12), cap_error);
  CHECK_NOTHROW(preimage_search(big, 12, 12));
}

TEST_CASE("recognize: cycle on a card refutes forest and tree",
          "[recognizers]") {
  Subdeck sub = single_card(disjoint_union(cycle_graph(3), Graph(2)), 6);
  for (RecProperty p : {RecProperty::Forest, RecProperty::Tree}) {
    Verdict v = recognize(sub, 6, p);
    CHECK(v.decision == RecDecision::Fails);
    CHECK(v.method == RecMethod::DirectRule);
  }
}

TEST_CASE("recognize: non-bipartite card refutes bipartiteness",
          "[recognizers]") {
  Subdeck sub = single_card(disjoint_union(cycle_graph(5), Graph(1)), 7);
  Verdict v = recognize(sub, 7, RecProperty::Bipartite);
  CHECK(v.decision == RecDecision::Fails);
  CHECK(v.method == RecMethod::DirectRule);
}

TEST_CASE("recognize: visible small girth is decided directly",
          "[recognizers]") {
  // C3 u 3K1 at n=6: threshold ceil(2n/3)+1 = 5 cards
  Graph g = disjoint_union(cycle_graph(3), Graph(3));
  Subdeck sub = prefix_subdeck(g, 5);
  REQUIRE(sub.total() == 5);
  Verdict v = recognize(sub, 6, RecProperty::Girth);
  CHECK(v.decision == RecDecision::Value);
  CHECK(v.value == 3);
  CHECK(v.method == RecMethod::DirectRule);
}

TEST_CASE("recognize: hidden cycle girth via the oracle", "[recognizers]") {
  // C6 u 2K1 at n=8 with 7 of 8 cards
  Graph g = disjoint_union(cycle_graph(6), Graph(2));
  Subdeck sub = prefix_subdeck(g, 7);
  REQUIRE(sub.total() == 7);
  Verdict v = recognize(sub, 8, RecProperty::Girth);
  CHECK(v.decision == RecDecision::Value);
  CHECK(v.value == 6);
}

TEST_CASE("recognize: tree verdict from a threshold subdeck at order 7",
          "[recognizers]") {
  Graph t = path_graph(7);
  Subdeck sub = prefix_subdeck(t, 7 / 2 + 2);
  Verdict v = recognize(sub, 7, RecProperty::Tree);
  CHECK(v.decision == RecDecision::Holds);
  CHECK(v.method == RecMethod::PreimageOracle);
  CHECK(v.witness_count >= 1);
}

TEST_CASE("recognize: ambiguity is a first-class verdict", "[recognizers]") {
  // {K2:1} at n=3: preimages P3, K3, K2uK1 disagree on connectivity
  Subdeck sub = single_card(path_graph(2), 3);
  Verdict v = recognize(sub, 3, RecProperty::Connected);
  CHECK(v.decision == RecDecision::Ambiguous);
  CHECK(v.witness_count == 3);
  CHECK(v.witnesses.size() == 3);
}

TEST_CASE("recognize: errors", "[recognizers]") {
  Subdeck sub = single_card(path_graph(11), 12);
  CHECK_THROWS_AS(recognize(sub, 12, RecProperty::Connected), cap_error);
  // inconsistent subdeck: no graph on 4 vertices has both K3 and 3K1 cards.
  // Forest still decides directly (a card shows a cycle); a property with no
  // direct rule reaches the oracle, which reports the inconsistency.
  Subdeck impossible;
  impossible.claimed_parent_order = 4;
  detail::add_card(impossible.cards, canonical_form(complete_graph(3)));
  detail::add_card(impossible.cards, canonical_form(Graph(3)));
  Verdict direct = recognize(impossible, 4, RecProperty::Forest);
  CHECK(direct.decision == RecDecision::Fails);
  CHECK(direct.method == RecMethod::DirectRule);
  CHECK_THROWS_AS(recognize(impossible, 4, RecProperty::Connected),
                  data_error);
  CHECK_THROWS_AS(recognize(Subdeck{3, {}}, 3, RecProperty::Tree),
                  domain_error);
}

TEST_CASE("fired direct rules always match the truth", "[recognizers]") {
  std::mt19937_64 rng(2025);
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : brute_iso_classes(n)) {
      Classification truth = classify(g);
      for (int trial = 0; trial < 3; ++trial) {
        int size = 1 + static_cast<int>(rng() % n);
        Subdeck sub = prefix_subdeck(g, size);
        for (RecProperty p : {RecProperty::Tree, RecProperty::Forest,
                              RecProperty::Bipartite}) {
          Verdict v = recognize(sub, n, p);
          if (v.method != RecMethod::DirectRule) continue;
          REQUIRE(v.decision == RecDecision::Fails);
          bool actual = p == RecProperty::Tree     ? truth.tree
                        : p == RecProperty::Forest ? truth.forest
                                                   : truth.bipartite;
          CHECK_FALSE(actual);
        }
        Verdict v = recognize(sub, n, RecProperty::Girth);
        if (v.method == RecMethod::DirectRule) {
          REQUIRE(v.decision == RecDecision::Value);
          CHECK(girth(g) == v.value);
        }
      }
    }
  }
}

TEST_CASE("girth from forest cards", "[recognizers]") {
  auto c7 = girth_direct(subdeck_of(full_deck(cycle_graph(7))), 7, true);
  CHECK(c7.candidate_girth == 7);
  CHECK(c7.valid);

  // hidden cycle amid isolated vertices: the six cycle-vertex cards of
  // C6 u K1 meet the ceil(2n/3)+1 = 6 threshold at n = 7
  Subdeck cycle_cards =
      single_card(disjoint_union(path_graph(5), Graph(1)), 7, 6);
  auto est = girth_direct(cycle_cards, 7);
  CHECK(est.candidate_girth == 6);
  CHECK_FALSE(est.valid);  // no external certificate supplied
  CHECK(girth_direct(cycle_cards, 7, true).valid);

  // a card with a cycle violates the all-forest hypothesis
  Subdeck mixed = single_card(disjoint_union(path_graph(5), Graph(1)), 7, 5);
  detail::add_card(mixed.cards, canonical_form(cycle_graph(6)));
  CHECK_THROWS_MATCHES(girth_direct(mixed, 7), domain_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("forests")));

  Subdeck tiny = single_card(path_graph(5), 6, 2);
  CHECK_THROWS_AS(girth_direct(tiny, 6), domain_error);  // below threshold
}

TEST_CASE("verdicts never contradict a consistent preimage", "[recognizers]") {
  std::mt19937_64 rng(606);
  auto classes = brute_iso_classes(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph& g = classes[rng() % classes.size()];
    Subdeck sub = prefix_subdeck(g, 1 + static_cast<int>(rng() % 5));
    auto pre = preimage_search(sub, 5);
    REQUIRE(!pre.empty());
    for (RecProperty p : {RecProperty::Tree, RecProperty::Forest,
                          RecProperty::Connected, RecProperty::Bipartite}) {
      Verdict v = recognize(sub, 5, p);
      auto holds = [&](const CanonicalForm& f) {
        Classification c = classify(f.to_graph());
        return p == RecProperty::Tree        ? c.tree
               : p == RecProperty::Forest    ? c.forest
               : p == RecProperty::Connected ? c.connected
                                             : c.bipartite;
      };
      if (v.decision == RecDecision::Holds)
        for (const auto& f : pre) CHECK(holds(f));
      if (v.decision == RecDecision::Fails)
        for (const auto& f : pre) CHECK_FALSE(holds(f));
      if (v.decision == RecDecision::Ambiguous) {
        bool saw_true = false, saw_false = false;
        for (const auto& f : pre) (holds(f) ? saw_true : saw_false) = true;
        CHECK((saw_true && saw_false));
      }
    }
  }
}
