#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphdeck/canonical.hpp"
#include "graphdeck/deck.hpp"
#include "graphdeck/enumerate.hpp"
#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"
#include "graphdeck/parallel.hpp"

namespace graphdeck {

inline constexpr int kMaxWitnessPairs = 8;

// Restricts which cross-class pairs count. DifferentGirth realizes the
// girth-recognizability bounds, which are about pairs rather than classes.
enum class PairFilter { None, DifferentGirth };

struct ExtremalRecord {
  int n = 0;
  std::string class_a, class_b;
  int max_common = 0;
  // Pairs attaining the maximum, lexicographically smallest first,
  // truncated at kMaxWitnessPairs; witness_total is the full count.
  std::vector<std::pair<CanonicalForm, CanonicalForm>> witnesses;
  long long witness_total = 0;
  long long pairs_examined = 0;  // pairs sharing at least one card
  long long pairs_total = 0;
  std::int64_t elapsed_ms = 0;
};

namespace detail {

struct DeckIndex {
  std::vector<CanonicalForm> graphs;
  std::vector<std::optional<int>> girths;            // filled only when needed
  std::vector<std::vector<std::pair<int, int>>> decks;  // (card id, mult)
};

// Interns card certificates to dense ids shared by both sides, so deck
// intersection is integer merging.
inline DeckIndex build_deck_index(const std::vector<Graph>& graphs,
                                  std::map<CanonicalForm, int>& intern,
                                  bool with_girth, int threads) {
  DeckIndex idx;
  const int count = static_cast<int>(graphs.size());
  idx.graphs.resize(count);
  idx.decks.resize(count);
  if (with_girth) idx.girths.resize(count);
  std::vector<Deck> decks(count);
  parallel_for(0, count, threads, [&](int i) {
    idx.graphs[i] = canonical_form(graphs[i]);
    decks[i] = full_deck(graphs[i]);
    if (with_girth) idx.girths[i] = girth(graphs[i]);
  });
  for (int i = 0; i < count; ++i) {
    for (const auto& [form, mult] : decks[i].cards) {
      auto [it, fresh] = intern.try_emplace(form, static_cast<int>(intern.size()));
      idx.decks[i].emplace_back(it->second, mult);
    }
    std::sort(idx.decks[i].begin(), idx.decks[i].end());
  }
  return idx;
}

// Common cards and the smallest shared card id of two interned decks.
inline std::pair<int, int> merge_common(
    const std::vector<std::pair<int, int>>& a,
    const std::vector<std::pair<int, int>>& b) {
  int common = 0, first_shared = -1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      if (first_shared == -1) first_shared = a[i].first;
      common += std::min(a[i].second, b[j].second);
      ++i;
      ++j;
    }
  }
  return {common, first_shared};
}

}  // namespace detail

// Exact maximum of common_card_count over all cross-class pairs (identical
// pairs included when the classes overlap). Decks are interned once per
// side; a card-id index yields only the pairs sharing at least one card, so
// non-intersecting pairs short-circuit at zero. Deterministic: graphs are
// enumerated in certificate order and the reduction is max with
// lexicographic witness tie-break.
inline ExtremalRecord max_common_cards(int n, const ClassSpec& class_a,
                                       const ClassSpec& class_b,
                                       PairFilter filter = PairFilter::None,
                                       int threads = 0) {
  const auto start = std::chrono::steady_clock::now();
  ExtremalRecord rec;
  rec.n = n;
  rec.class_a = class_a.name();
  rec.class_b = class_b.name();

  const std::vector<Graph> ga = enumerate_class(n, class_a);
  const std::vector<Graph> gb = enumerate_class(n, class_b);
  rec.pairs_total = static_cast<long long>(ga.size()) * gb.size();

  const bool with_girth = filter == PairFilter::DifferentGirth;
  std::map<CanonicalForm, int> intern;
  detail::DeckIndex ia = detail::build_deck_index(ga, intern, with_girth, threads);
  detail::DeckIndex ib = detail::build_deck_index(gb, intern, with_girth, threads);

  const int card_count = static_cast<int>(intern.size());
  std::vector<std::vector<int>> touch_a(card_count), touch_b(card_count);
  for (std::size_t i = 0; i < ia.decks.size(); ++i)
    for (const auto& [id, mult] : ia.decks[i]) touch_a[id].push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < ib.decks.size(); ++j)
    for (const auto& [id, mult] : ib.decks[j]) touch_b[id].push_back(static_cast<int>(j));

  struct Partial {
    int max = 0;
    long long attaining = 0;
    long long examined = 0;
    std::vector<std::pair<int, int>> witnesses;  // graph indices
  };
  std::vector<Partial> parts(card_count);
  parallel_for(0, card_count, threads, [&](int id) {
    Partial& p = parts[id];
    for (int i : touch_a[id]) {
      for (int j : touch_b[id]) {
        auto [common, first_shared] = detail::merge_common(ia.decks[i], ib.decks[j]);
        if (first_shared != id) continue;  // counted at its first shared card
        if (filter == PairFilter::DifferentGirth &&
            ia.girths[i] == ib.girths[j])
          continue;
        ++p.examined;
        if (common > p.max) {
          p.max = common;
          p.attaining = 1;
          p.witnesses.assign(1, {i, j});
        } else if (common == p.max && common > 0) {
          ++p.attaining;
          if (p.witnesses.size() < 4 * kMaxWitnessPairs)
            p.witnesses.emplace_back(i, j);
        }
      }
    }
  });

  std::vector<std::pair<int, int>> best_pairs;
  for (const Partial& p : parts) {
    rec.pairs_examined += p.examined;
    if (p.max < rec.max_common) continue;
    if (p.max > rec.max_common) {
      rec.max_common = p.max;
      rec.witness_total = 0;
      best_pairs.clear();
    }
    rec.witness_total += p.attaining;
    best_pairs.insert(best_pairs.end(), p.witnesses.begin(), p.witnesses.end());
  }
  if (rec.max_common == 0) {
    rec.witness_total = 0;
    best_pairs.clear();
  }
  for (auto [i, j] : best_pairs)
    rec.witnesses.emplace_back(ia.graphs[i], ib.graphs[j]);
  std::sort(rec.witnesses.begin(), rec.witnesses.end(),
            [](const auto& x, const auto& y) {
              if (x.first < y.first) return true;
              if (y.first < x.first) return false;
              return x.second < y.second;
            });
  if (rec.witnesses.size() > kMaxWitnessPairs)
    rec.witnesses.resize(kMaxWitnessPairs);

  rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

// A bound on max common cards between two classes. asserted distinguishes
// unconditional results from large-n theorems and conjectures, which are
// reported but never failed on.
struct BoundSpec {
  std::string name;
  ClassSpec class_a, class_b;
  PairFilter filter = PairFilter::None;
  int (*bound)(int);
  std::string source;
  bool asserted = false;
  int n_min = 3;
  int n_cap = kEnumerationCapAll;
};

inline const std::vector<BoundSpec>& bound_registry() {
  static const std::vector<BoundSpec> registry = {
      {"lemma3.1",
       ClassSpec{GraphClass::MultiCyclic},
       ClassSpec{GraphClass::Forest},
       PairFilter::None,
       [](int) { return 2; },
       "graphs with >= 2 cycles vs forests",
       true,
       4,
       kEnumerationCapAll},
      {"lemma5.2",
       ClassSpec{GraphClass::Forest},
       ClassSpec{GraphClass::NonForest},
       PairFilter::None,
       [](int n) { return 2 * n / 3; },
       "forests vs non-forests, stated floor form (exceeded at n = 4, 5)",
       true,
       3,
       kEnumerationCapAll},
      {"lemma5.2-ceil",
       ClassSpec{GraphClass::Forest},
       ClassSpec{GraphClass::NonForest},
       PairFilter::None,
       [](int n) { return (2 * n + 2) / 3; },  // ceil(2n/3)
       "forests vs non-forests, integer form: fewer than 2n/3 + 1 cards",
       true,
       3,
       kEnumerationCapAll},
      {"thm1.4",
       ClassSpec{GraphClass::Tree},
       ClassSpec{GraphClass::Connected, GraphClass::NonForest},
       PairFilter::None,
       [](int n) { return n / 2 + 1; },
       "trees vs connected non-trees (proved for n >= 5000)",
       false,
       3,
       kEnumerationCapAll},
      {"thm1.5",
       ClassSpec{GraphClass::Forest},
       ClassSpec{GraphClass::NonForest},
       PairFilter::None,
       [](int n) { return n / 2 + 1; },
       "forests vs non-forests (proved for n >= 5000)",
       false,
       3,
       kEnumerationCapAll},
      {"thm1.6",
       ClassSpec{},
       ClassSpec{},
       PairFilter::DifferentGirth,
       [](int n) { return (2 * n + 2) / 3; },  // ceil(2n/3)
       "pairs with different girth",
       true,
       3,
       kEnumerationCapAll},
      {"thm1.7",
       ClassSpec{GraphClass::Bipartite},
       ClassSpec{GraphClass::NonBipartite},
       PairFilter::None,
       [](int n) { return 5 * n / 6 + 1; },
       "bipartite vs non-bipartite",
       true,
       3,
       kEnumerationCapAll},
      {"myrvold",
       ClassSpec{GraphClass::Connected},
       ClassSpec{GraphClass::Disconnected},
       PairFilter::None,
       [](int n) { return n / 2 + 1; },
       "connected vs disconnected",
       true,
       3,
       kEnumerationCapAll},
      {"conj6.1",
       ClassSpec{},
       ClassSpec{},
       PairFilter::DifferentGirth,
       [](int n) { return n / 2 + 1; },
       "conjecture: pairs with different girth",
       false,
       3,
       kEnumerationCapAll},
      {"conj6.2",
       ClassSpec{GraphClass::Bipartite},
       ClassSpec{GraphClass::NonBipartite},
       PairFilter::None,
       [](int n) { return n / 2 + 1; },
       "conjecture: bipartite vs non-bipartite",
       false,
       3,
       kEnumerationCapAll},
  };
  return registry;
}

inline const BoundSpec* find_bound(const std::string& name) {
  for (const BoundSpec& spec : bound_registry())
    if (spec.name == name) return &spec;
  return nullptr;
}

struct BoundReportRow {
  std::string bound_name;
  ExtremalRecord record;
  int bound_value = 0;
  bool tight = false;   // max == bound; these witnesses are the extremal pairs
  bool pass = false;    // max <= bound
  bool asserted = false;
};

inline BoundReportRow verify_bound_row(const BoundSpec& spec, int n,
                                       int threads = 0) {
  BoundReportRow row;
  row.bound_name = spec.name;
  row.record = max_common_cards(n, spec.class_a, spec.class_b, spec.filter,
                                threads);
  row.bound_value = spec.bound(n);
  row.tight = row.record.max_common == row.bound_value;
  row.pass = row.record.max_common <= row.bound_value;
  row.asserted = spec.asserted;
  return row;
}

}  // namespace graphdeck
