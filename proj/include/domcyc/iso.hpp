#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcyc/connectivity.hpp"
#include "domcyc/errors.hpp"
#include "domcyc/graph.hpp"

namespace domcyc {

/// Injective map V(H) -> V(G): image[h] is the host vertex playing h.
using Embedding = std::vector<Vertex>;

namespace iso_detail {

// Pattern vertices in a connectivity-respecting order: each next vertex has
// the most already-placed neighbours, then the highest degree, then the
// lowest index.
inline std::vector<Vertex> search_order(const Graph& h) {
  const std::size_t k = h.order();
  std::vector<Vertex> order;
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> links(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = -1;
    for (std::size_t v = 0; v < k; ++v) {
      if (placed[v]) continue;
      const auto vv = static_cast<Vertex>(v);
      if (best < 0 || links[v] > links[static_cast<std::size_t>(best)] ||
          (links[v] == links[static_cast<std::size_t>(best)] && h.degree(vv) > h.degree(best)))
        best = vv;
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    h.neighbors(best).for_each([&](Vertex w) { ++links[static_cast<std::size_t>(w)]; });
  }
  return order;
}

template <class Set>
class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& h)
      : g_(g), h_(h), order_(search_order(h)), image_(h.order(), -1), used_(g.order()) {
    const std::size_t k = h.order();
    degree_ok_.assign(k, Set(g.order()));
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t need = h.degree(order_[i]);
      for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) >= need) degree_ok_[i].insert(static_cast<Vertex>(v));
    }
    linked_.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < i; ++j) linked_[i][j] = h.adjacent(order_[i], order_[j]);
  }

  std::optional<Embedding> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Set cand = degree_ok_[depth] - used_;
    for (std::size_t j = 0; j < depth && !cand.empty(); ++j) {
      const Set row = g_.template row<Set>(image_[static_cast<std::size_t>(order_[j])]);
      if (linked_[depth][j])
        cand &= row;
      else
        cand -= row;
    }
    for (Vertex v = cand.first(); v >= 0; v = next_member(cand, v)) {
      image_[static_cast<std::size_t>(order_[depth])] = v;
      used_.insert(v);
      if (extend(depth + 1)) return true;
      used_.erase(v);
    }
    image_[static_cast<std::size_t>(order_[depth])] = -1;
    return false;
  }

  static Vertex next_member(Set& s, Vertex current) {
    s.erase(current);
    return s.first();
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  Embedding image_;
  Set used_;
  std::vector<Set> degree_ok_;
  std::vector<std::vector<bool>> linked_;
};

}  // namespace iso_detail

/// Searches for H as an induced subgraph of G (the relation H ≺ G).
inline std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
  return with_set_type(g, [&](auto tag) {
    return iso_detail::InducedMatcher<decltype(tag)>(g, h).run();
  });
}

inline bool contains_induced(const Graph& g, const Graph& h) { return find_induced(g, h).has_value(); }

/// Replays an embedding: injective, preserves adjacency and non-adjacency.
inline bool is_induced_embedding(const Graph& g, const Graph& h, const Embedding& image) {
  if (image.size() != h.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : image) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order() || hit[static_cast<std::size_t>(v)])
      return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t a = 0; a < h.order(); ++a)
    for (std::size_t b = a + 1; b < h.order(); ++b)
      if (h.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) != g.adjacent(image[a], image[b]))
        return false;
  return true;
}

/// A forbidden family: nonempty, every member connected with at least 3 vertices.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  ForbiddenSet(std::vector<Graph> members, std::vector<std::string> labels = {})
      : members_(std::move(members)), labels_(std::move(labels)) {
    if (members_.empty()) throw std::invalid_argument("forbidden set must be nonempty");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i].order() < 3)
        throw std::invalid_argument("forbidden subgraphs need at least 3 vertices");
      if (!is_connected(members_[i]))
        throw std::invalid_argument("forbidden subgraphs must be connected");
    }
    labels_.resize(members_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i].empty()) labels_[i] = "H" + std::to_string(i);
  }

  const std::vector<Graph>& members() const { return members_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<Graph> members_;
  std::vector<std::string> labels_;
};

/// G contains no member of the family as an induced subgraph.
inline bool is_free(const Graph& g, const ForbiddenSet& family) {
  return std::none_of(family.members().begin(), family.members().end(),
                      [&](const Graph& h) { return contains_induced(g, h); });
}

inline bool is_free_of(const Graph& g, const Graph& h) { return !contains_induced(g, h); }

/// H1 ≤ H2: every member of H2 contains some member of H1 as an induced subgraph.
inline bool set_leq(const ForbiddenSet& lower, const ForbiddenSet& upper) {
  return std::all_of(upper.members().begin(), upper.members().end(), [&](const Graph& h2) {
    return std::any_of(lower.members().begin(), lower.members().end(),
                       [&](const Graph& h1) { return contains_induced(h2, h1); });
  });
}

// --- connected induced subgraphs -------------------------------------------

namespace iso_detail {

// ESU-style extension: every connected vertex set is produced exactly once,
// from its least vertex.
template <class Set, class F>
void extend_connected(const Graph& g, Vertex root, std::size_t k, Set& current, std::size_t size,
                      Set extension, const Set& covered, const Set& above_root, F& visit) {
  visit(current);
  if (size == k) return;
  while (!extension.empty()) {
    const Vertex w = extension.first();
    extension.erase(w);
    const Set w_row = g.template row<Set>(w);
    Set next_ext = extension | ((w_row - covered) & above_root);
    Set next_cov = covered | w_row;
    current.insert(w);
    extend_connected(g, root, k, current, size + 1, std::move(next_ext), next_cov, above_root, visit);
    current.erase(w);
  }
}

}  // namespace iso_detail

/// Visits every vertex set of size 1..k that induces a connected subgraph, each once.
template <class F>
void for_each_connected_induced(const Graph& g, std::size_t k, F&& visit) {
  if (k == 0) throw std::invalid_argument("connected_induced_subgraphs: k must be at least 1");
  with_set_type(g, [&](auto tag) {
    using Set = decltype(tag);
    const std::size_t n = g.order();
    auto emit = [&](const Set& s) {
      if constexpr (std::is_same_v<Set, VertexSet>) {
        visit(s);
      } else {
        VertexSet out(n);
        s.for_each([&](Vertex v) { out.insert(v); });
        visit(out);
      }
    };
    for (std::size_t r = 0; r < n; ++r) {
      const auto root = static_cast<Vertex>(r);
      Set above = Set::full(n);
      for (Vertex v = 0; v <= root; ++v) above.erase(v);
      Set current = Set::single(n, root);
      Set covered = g.template row<Set>(root) | current;
      Set ext = g.template row<Set>(root) & above;
      iso_detail::extend_connected(g, root, k, current, 1, ext, covered, above, emit);
    }
  });
}

inline std::vector<VertexSet> connected_induced_subgraphs(const Graph& g, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_connected_induced(g, k, [&](const VertexSet& s) { out.push_back(s); });
  return out;
}

// --- complete-join partition of P4-free graphs ----------------------------

struct Bipartition {
  VertexSet a;
  VertexSet b;
};

/// For a P4-free, k-connected graph on at least 2k vertices, a split {A, B}
/// with |A|, |B| >= k and every A–B pair adjacent. Unmet hypotheses throw
/// PreconditionViolation.
inline std::optional<Bipartition> p4free_partition(const Graph& g, std::size_t k) {
  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  if (contains_induced(g, p4)) throw PreconditionViolation("p4free_partition: graph contains an induced P4");
  if (g.order() < 2 * k)
    throw PreconditionViolation("p4free_partition: graph has fewer than 2k vertices");
  if (!is_k_connected(g, k)) throw PreconditionViolation("p4free_partition: graph is not k-connected");

  // Parts of G's join decomposition are the components of the complement.
  const Graph co = complement(g);
  const std::vector<VertexSet> parts = components_within(co, co.vertices());
  const std::size_t n = g.order();

  // Subset sum over part sizes, reaching a total in [k, n-k].
  std::vector<std::optional<std::size_t>> via(n + 1);  // via[t] = last part used to reach t
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::size_t sz = parts[p].count();
    for (std::size_t t = n; t + 1 > sz; --t)
      if (!reach[t] && reach[t - sz]) {
        reach[t] = true;
        via[t] = p;
      }
  }
  for (std::size_t t = k; t + k <= n; ++t) {
    if (!reach[t]) continue;
    Bipartition out{VertexSet(n), VertexSet::full(n)};
    for (std::size_t left = t; left > 0;) {
      const std::size_t p = *via[left];
      out.a |= parts[p];
      left -= parts[p].count();
    }
    out.b -= out.a;
    return out;
  }
  return std::nullopt;
}

}  // namespace domcyc
