#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "graphdeck/canonical.hpp"
#include "graphdeck/errors.hpp"
#include "graphdeck/graph.hpp"

namespace graphdeck {

// Conjunction of class flags, e.g. {Unicyclic, Connected}. Empty means All.
struct ClassSpec {
  std::vector<GraphClass> flags;

  ClassSpec() = default;
  ClassSpec(std::initializer_list<GraphClass> fs) : flags(fs) {}
  explicit ClassSpec(GraphClass f) : flags{f} {}

  bool contains(GraphClass f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }

  bool matches(const Classification& c) const {
    for (GraphClass f : flags)
      if (!in_class(c, f)) return false;
    return true;
  }

  std::string name() const {
    if (flags.empty()) return "all";
    std::string out;
    for (std::size_t i = 0; i < flags.size(); ++i) {
      if (i) out += "+";
      out += class_name(flags[i]);
    }
    return out;
  }

  // Accepts names joined by '+' or ',' (e.g. "connected+unicyclic").
  static ClassSpec parse(const std::string& text) {
    ClassSpec spec;
    std::string token;
    std::istringstream in(text);
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', '+');
    std::istringstream parts(norm);
    while (std::getline(parts, token, '+')) {
      if (token.empty()) continue;
      bool found = false;
      for (GraphClass f :
           {GraphClass::All, GraphClass::Tree, GraphClass::Forest,
            GraphClass::Unicyclic, GraphClass::Connected,
            GraphClass::Disconnected, GraphClass::Bipartite,
            GraphClass::NonBipartite, GraphClass::NonForest,
            GraphClass::MultiCyclic}) {
        if (token == class_name(f)) {
          if (f != GraphClass::All) spec.flags.push_back(f);
          found = true;
          break;
        }
      }
      if (!found) throw domain_error("unknown graph class '" + token + "'");
    }
    return spec;
  }
};

inline constexpr int kEnumerationCapAll = 8;
inline constexpr int kEnumerationCapSparse = 13;  // trees, forests, unicyclic

namespace detail {

enum class GenKind { All, Tree, Forest, ConnectedUnicyclic, UnicyclicAny };

// Children of parent under one-vertex extension: certificates of parent plus
// vertex n adjacent to each subset (or each single vertex for leaf growth).
inline void add_extension_certs(const Graph& parent, bool all_subsets,
                                bool with_isolated,
                                std::vector<CanonicalForm>& out) {
  const int n = parent.order();
  Graph base(n + 1);
  for (auto [u, v] : parent.edges()) base.add_edge(u, v);
  if (all_subsets) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Graph child = base;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) child.add_edge(v, n);
      out.push_back(canonical_form(child));
    }
    return;
  }
  if (with_isolated) out.push_back(canonical_form(base));
  for (int v = 0; v < n; ++v) {
    Graph child = base;
    child.add_edge(v, n);
    out.push_back(canonical_form(child));
  }
}

inline std::vector<Graph> materialize_sorted(std::vector<CanonicalForm> certs) {
  std::sort(certs.begin(), certs.end());
  certs.erase(std::unique(certs.begin(), certs.end()), certs.end());
  std::vector<Graph> out;
  out.reserve(certs.size());
  for (const CanonicalForm& c : certs) out.push_back(c.to_graph());
  return out;
}

// Shared cache across enumeration calls; every generator grows order by
// order from its base case, deduplicating by certificate, which is
// exhaustive because each class is closed under the matching reduction
// (vertex deletion / leaf deletion / isolated-or-leaf deletion).
inline const std::vector<Graph>& generated(GenKind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mutex);

  auto key = std::make_pair(static_cast<int>(kind), n);
  auto found = cache.find(key);
  if (found != cache.end()) return found->second;

  auto get = [&](GenKind k, int m) -> const std::vector<Graph>& {
    return cache.at(std::make_pair(static_cast<int>(k), m));
  };
  auto ensure = [&](GenKind k, int m, auto&& build) {
    auto kk = std::make_pair(static_cast<int>(k), m);
    if (!cache.count(kk)) cache.emplace(kk, build());
  };

  // Build bottom-up for the requested kind (plus the pieces UnicyclicAny
  // needs).
  auto build_chain = [&](GenKind k, int upto) {
    int base_n = (k == GenKind::ConnectedUnicyclic) ? 3
                 : (k == GenKind::Tree)             ? 1
                                                    : 0;
    for (int m = base_n; m <= upto; ++m) {
      ensure(k, m, [&]() -> std::vector<Graph> {
        if (k == GenKind::ConnectedUnicyclic && m == 3)
          return {cycle_graph(3)};
        if (m == 0) return {Graph(0)};
        if (m == 1) return {Graph(1)};
        std::vector<CanonicalForm> certs;
        for (const Graph& parent : get(k, m - 1)) {
          switch (k) {
            case GenKind::All:
              add_extension_certs(parent, true, false, certs);
              break;
            case GenKind::Tree:
              add_extension_certs(parent, false, false, certs);
              break;
            case GenKind::Forest:
              add_extension_certs(parent, false, true, certs);
              break;
            case GenKind::ConnectedUnicyclic:
              add_extension_certs(parent, false, false, certs);
              break;
            case GenKind::UnicyclicAny:
              break;
          }
        }
        if (k == GenKind::ConnectedUnicyclic)
          certs.push_back(canonical_form(cycle_graph(m)));
        return materialize_sorted(std::move(certs));
      });
    }
  };

  if (kind == GenKind::UnicyclicAny) {
    build_chain(GenKind::ConnectedUnicyclic, n);
    build_chain(GenKind::Forest, std::max(0, n - 3));
    std::vector<CanonicalForm> certs;
    for (int c = 3; c <= n; ++c) {
      for (const Graph& core : get(GenKind::ConnectedUnicyclic, c))
        for (const Graph& rest : get(GenKind::Forest, n - c))
          certs.push_back(canonical_form(disjoint_union(core, rest)));
    }
    cache.emplace(key, materialize_sorted(std::move(certs)));
  } else {
    build_chain(kind, n);
  }
  return cache.at(key);
}

}  // namespace detail

// Every isomorphism class of order n matching the spec, each exactly once,
// sorted by certificate and materialized in canonical labeling.
// Caps: 8 when backed by the all-graphs generator, 13 for the sparse
// generators (tree / forest / unicyclic).
inline std::vector<Graph> enumerate_class(int n, const ClassSpec& spec) {
  if (n < 0) throw domain_error("enumerate_class: negative order");
  if (n == 0) {
    if (spec.matches(classify(Graph(0)))) return {Graph(0)};
    return {};
  }
  detail::GenKind kind = detail::GenKind::All;
  if (spec.contains(GraphClass::Tree)) {
    kind = detail::GenKind::Tree;
  } else if (spec.contains(GraphClass::Forest)) {
    kind = detail::GenKind::Forest;
  } else if (spec.contains(GraphClass::Unicyclic)) {
    kind = spec.contains(GraphClass::Connected)
               ? detail::GenKind::ConnectedUnicyclic
               : detail::GenKind::UnicyclicAny;
  }
  const int cap = kind == detail::GenKind::All ? kEnumerationCapAll
                                               : kEnumerationCapSparse;
  if (n > cap)
    throw cap_error("enumerate_class: order " + std::to_string(n) +
                    " exceeds cap " + std::to_string(cap) + " for class " +
                    spec.name());
  if (kind == detail::GenKind::ConnectedUnicyclic && n < 3) return {};
  if (kind == detail::GenKind::UnicyclicAny && n < 3) return {};

  std::vector<Graph> out;
  for (const Graph& g : detail::generated(kind, n)) {
    if (spec.matches(classify(g))) out.push_back(g);
  }
  return out;
}

}  // namespace graphdeck
