#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "graphdeck/deck.hpp"
#include "test_helpers.hpp"

using namespace graphdeck;
using testutil::brute_iso_classes;
using testutil::random_graph;

namespace {

Subdeck make_subdeck(int parent_order,
                     const std::vector<std::pair<Graph, int>>& cards) {
  Subdeck sub;
  sub.claimed_parent_order = parent_order;
  for (const auto& [g, mult] : cards)
    detail::add_card(sub.cards, canonical_form(g), mult);
  return sub;
}

int multiplicity_of(const Deck& deck, const Graph& card) {
  CanonicalForm f = canonical_form(card);
  for (const auto& [form, mult] : deck.cards)
    if (form == f) return mult;
  return 0;
}

}  // namespace

TEST_CASE("full decks of named graphs", "[deck]") {
  Deck k3 = full_deck(complete_graph(3));
  REQUIRE(k3.cards.size() == 1);
  CHECK(k3.cards[0].second == 3);
  CHECK(k3.cards[0].first == canonical_form(path_graph(2)));

  Deck p3 = full_deck(path_graph(3));
  CHECK(p3.total() == 3);
  CHECK(multiplicity_of(p3, path_graph(2)) == 2);
  CHECK(multiplicity_of(p3, Graph(2)) == 1);

  // cycle with isolated vertices: every cycle deletion gives the same card
  Deck c6i = full_deck(disjoint_union(cycle_graph(6), Graph(5)));
  CHECK(multiplicity_of(c6i, disjoint_union(path_graph(5), Graph(5))) == 6);

  CHECK_THROWS_AS(full_deck(Graph(0)), domain_error);
}

TEST_CASE("deck sizes and multiplicities sum to n", "[deck]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 9), 0.4, rng);
    CHECK(full_deck(g).total() == g.order());
  }
}

TEST_CASE("common cards", "[deck]") {
  CHECK(common_card_count(path_graph(3), complete_graph(3)) == 2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.5, rng);
    Graph h = random_graph(n, 0.5, rng);
    CHECK(common_card_count(g, g) == n);
    CHECK(common_card_count(g, h) == common_card_count(h, g));
    CHECK(common_card_count(g, h) <= n);
  }
  CHECK_THROWS_AS(common_card_count(path_graph(3), path_graph(4)),
                  domain_error);
}

TEST_CASE("deck containment", "[deck]") {
  Deck p3 = full_deck(path_graph(3));
  CHECK(deck_contains(p3, make_subdeck(3, {{path_graph(2), 2}})));
  CHECK_FALSE(deck_contains(p3, make_subdeck(3, {{path_graph(2), 3}})));
  CHECK_FALSE(
      deck_contains(full_deck(complete_graph(3)), make_subdeck(3, {{Graph(2), 1}})));
  CHECK(deck_contains(p3, Subdeck{3, {}}));
}

TEST_CASE("edge count from deck", "[deck]") {
  CHECK(edge_count_from_deck(full_deck(complete_graph(3))) == 3);
  CHECK(edge_count_from_deck(full_deck(cycle_graph(5))) == 5);
  CHECK(edge_count_from_deck(full_deck(path_graph(4))) == 3);
  CHECK_THROWS_AS(edge_count_from_deck(full_deck(Graph(2))), domain_error);

  // Kelly identity over every graph of order <= 6
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : brute_iso_classes(n)) {
      Deck deck = full_deck(g);
      long long sum = 0;
      for (const auto& [form, mult] : deck.cards)
        sum += static_cast<long long>(form.to_graph().edge_count()) * mult;
      CHECK(sum == static_cast<long long>(n - 2) * g.edge_count());
      CHECK(edge_count_from_deck(deck) == g.edge_count());
    }
  }

  // cooked inconsistent deck: P3 x3 and K2uK1 x1 has edge sum 7, n-2 = 2
  Deck fake;
  fake.parent_order = 4;
  detail::add_card(fake.cards, canonical_form(path_graph(3)), 3);
  detail::add_card(fake.cards,
                   canonical_form(disjoint_union(path_graph(2), Graph(1))), 1);
  CHECK_THROWS_MATCHES(edge_count_from_deck(fake), data_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("inconsistent")));
}

TEST_CASE("multicyclic graphs share at most two cards with forests",
          "[deck]") {
  for (int n = 4; n <= 6; ++n) {
    std::vector<Graph> multi, forests;
    for (const Graph& g : brute_iso_classes(n)) {
      Classification c = classify(g);
      if (c.multicyclic()) multi.push_back(g);
      if (c.forest) forests.push_back(g);
    }
    for (const Graph& g : multi)
      for (const Graph& f : forests) CHECK(common_card_count(g, f) <= 2);
  }
}

TEST_CASE("cards with a given component", "[deck]") {
  // C6 with one pendant: only deleting the attachment vertex isolates one
  Graph c6p(7);
  for (int i = 0; i < 6; ++i) c6p.add_edge(i, (i + 1) % 6);
  c6p.add_edge(0, 6);
  CHECK(cards_with_component(c6p, Graph(1)) == 1);

  CHECK(cards_with_component(path_graph(5), path_graph(2)) == 1);

  CHECK_THROWS_MATCHES(
      cards_with_component(disjoint_union(path_graph(2), Graph(1)), Graph(1)),
      domain_error,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("connected")));
  CHECK_THROWS_MATCHES(cards_with_component(path_graph(4), path_graph(2)),
                       domain_error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("v(H) < v(G)/2")));
  CHECK_THROWS_AS(cards_with_component(path_graph(5), Graph(2)), domain_error);
}

TEST_CASE("component-count bounds hold exhaustively at small order",
          "[deck]") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : brute_iso_classes(n)) {
      if (!is_connected(g)) continue;
      // per-card component inventory
      std::map<CanonicalForm, int> with_component;
      std::map<int, int> with_size;
      for (int v = 0; v < n; ++v) {
        std::set<std::vector<std::uint8_t>> seen;
        std::set<int> sizes;
        for (const Graph& comp : components(g.delete_vertex(v))) {
          CanonicalForm f = canonical_form(comp);
          if (seen.insert(f.bits).second) ++with_component[f];
          sizes.insert(comp.order());
        }
        for (int s : sizes) ++with_size[s];
      }
      for (const auto& [form, count] : with_component) {
        if (2 * form.n >= n) continue;
        CHECK(count <= n / (form.n + 1));
        CHECK(cards_with_component(g, form.to_graph()) == count);
      }
      for (const auto& [size, count] : with_size) {
        if (2 * size >= n || size < 1) continue;
        CHECK(count <= n / (size + 1));
      }
    }
  }
}

TEST_CASE("deck file round trip", "[deck]") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 8), 0.4, rng);
    Deck deck = full_deck(g);
    std::string text = write_deck_file(deck);
    CHECK(text.rfind("n=" + std::to_string(g.order()), 0) == 0);
    Deck back = read_deck_file(text);
    CHECK(back.parent_order == deck.parent_order);
    CHECK(back.cards == deck.cards);
    CHECK(write_deck_file(back) == text);
  }
}

TEST_CASE("deck file parsing errors", "[deck]") {
  CHECK_THROWS_AS(read_subdeck_file("Bw\n"), data_error);
  CHECK_THROWS_AS(read_subdeck_file("n=abc\n"), data_error);
  // card order does not match header
  CHECK_THROWS_AS(read_subdeck_file("n=5\nBw\n"), data_error);
  // subdeck reads fine, full deck rejects the missing card
  std::string three = "n=3\nA_\nA_\n";
  Subdeck sub = read_subdeck_file(three);
  CHECK(sub.total() == 2);
  CHECK_THROWS_AS(read_deck_file(three), data_error);
}

TEST_CASE("decks written by one labeling load from another", "[deck]") {
  // the file holds arbitrary labelings; reading canonicalizes
  std::string text = "n=4\n";
  text += encode_graph6(path_graph(3)) + "\n";
  text += encode_graph6(testutil::relabel(path_graph(3), {2, 0, 1})) + "\n";
  Subdeck sub = read_subdeck_file(text);
  REQUIRE(sub.cards.size() == 1);
  CHECK(sub.cards[0].second == 2);
}
