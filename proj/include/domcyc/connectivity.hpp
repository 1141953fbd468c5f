#pragma once

#include <cstddef>
#include <vector>

#include "domcyc/graph.hpp"

namespace domcyc {

/// Connected, at least 3 vertices, and no cut vertex.
inline bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  return with_set_type(g, [&](auto tag) {
    using Set = decltype(tag);
    const Set all = Set::full(g.order());
    if (reachable_within(g, 0, all).count() != g.order()) return false;
    for (std::size_t v = 0; v < g.order(); ++v) {
      Set rest = all;
      rest.erase(static_cast<Vertex>(v));
      const Vertex start = rest.first();
      if (reachable_within(g, start, rest).count() != g.order() - 1) return false;
    }
    return true;
  });
}

/// True iff g has more than k vertices and stays connected after deleting
/// any set of fewer than k vertices. Exhaustive over deletion sets.
inline bool is_k_connected(const Graph& g, std::size_t k) {
  if (g.order() <= k) return false;
  if (k == 0) return true;
  return with_set_type(g, [&](auto tag) {
    using Set = decltype(tag);
    const std::size_t n = g.order();
    std::vector<Vertex> chosen;
    // Recursively choose deletion sets of size < k in ascending order.
    auto survives = [&](auto&& self, Vertex from) -> bool {
      Set rest = Set::full(n);
      for (Vertex v : chosen) rest.erase(v);
      if (reachable_within(g, rest.first(), rest).count() != rest.count()) return false;
      if (chosen.size() + 1 >= k) return true;
      for (Vertex v = from; static_cast<std::size_t>(v) < n; ++v) {
        chosen.push_back(v);
        const bool ok = self(self, v + 1);
        chosen.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    return survives(survives, 0);
  });
}

}  // namespace domcyc
