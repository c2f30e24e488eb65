#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "graphdeck/enumerate.hpp"
#include "test_helpers.hpp"

using namespace graphdeck;
using testutil::brute_iso_classes;

TEST_CASE("class counts match labeled brute force through order 6",
          "[enumerate]") {
  const std::vector<GraphClass> classes = {
      GraphClass::All,          GraphClass::Tree,
      GraphClass::Forest,       GraphClass::Unicyclic,
      GraphClass::Connected,    GraphClass::Disconnected,
      GraphClass::Bipartite,    GraphClass::NonBipartite,
      GraphClass::NonForest,    GraphClass::MultiCyclic};
  for (int n = 1; n <= 6; ++n) {
    auto reps = brute_iso_classes(n);
    for (GraphClass k : classes) {
      std::size_t expected = 0;
      for (const Graph& g : reps)
        if (in_class(classify(g), k)) ++expected;
      CHECK(enumerate_class(n, ClassSpec{k}).size() == expected);
    }
  }
}

TEST_CASE("named enumeration counts", "[enumerate]") {
  CHECK(enumerate_class(4, ClassSpec{}).size() == 11);
  CHECK(enumerate_class(7, ClassSpec{GraphClass::Tree}).size() == 11);
  CHECK(enumerate_class(4, ClassSpec{GraphClass::Unicyclic,
                                     GraphClass::Connected})
            .size() == 2);
  CHECK(enumerate_class(8, ClassSpec{}).size() == 12346);
}

TEST_CASE("tree count at order 7 matches the Pruefer oracle", "[enumerate]") {
  // all 7^5 labeled trees, deduplicated by certificate
  std::set<std::vector<std::uint8_t>> classes;
  std::vector<int> seq(5, 0);
  for (;;) {
    classes.insert(canonical_form(testutil::tree_from_pruefer(seq)).bits);
    int i = 0;
    while (i < 5 && ++seq[i] == 7) seq[i++] = 0;
    if (i == 5) break;
  }
  CHECK(classes.size() == 11);
}

TEST_CASE("streams are sorted and duplicate-free", "[enumerate]") {
  for (int n : {5, 6, 7}) {
    auto graphs = enumerate_class(n, ClassSpec{GraphClass::Forest});
    for (std::size_t i = 0; i + 1 < graphs.size(); ++i) {
      CHECK(canonical_form(graphs[i]) < canonical_form(graphs[i + 1]));
    }
  }
}

TEST_CASE("enumeration caps", "[enumerate]") {
  CHECK_THROWS_AS(enumerate_class(9, ClassSpec{}), cap_error);
  CHECK_THROWS_AS(enumerate_class(9, ClassSpec{GraphClass::NonForest}),
                  cap_error);
  CHECK_THROWS_AS(enumerate_class(14, ClassSpec{GraphClass::Tree}), cap_error);
  CHECK_NOTHROW(enumerate_class(9, ClassSpec{GraphClass::Tree}));
}

TEST_CASE("class spec parsing", "[enumerate]") {
  CHECK(ClassSpec::parse("forest").name() == "forest");
  CHECK(ClassSpec::parse("connected+unicyclic").flags.size() == 2);
  CHECK(ClassSpec::parse("connected,nonforest").flags.size() == 2);
  CHECK(ClassSpec::parse("all").flags.empty());
  CHECK_THROWS_AS(ClassSpec::parse("caterpillar"), domain_error);
}

TEST_CASE("conjunction classes filter consistently", "[enumerate]") {
  auto conn_uni = enumerate_class(6, ClassSpec{GraphClass::Unicyclic,
                                               GraphClass::Connected});
  auto uni = enumerate_class(6, ClassSpec{GraphClass::Unicyclic});
  std::size_t conn_in_uni = 0;
  for (const Graph& g : uni)
    if (classify(g).connected) ++conn_in_uni;
  CHECK(conn_uni.size() == conn_in_uni);
}
