#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domcyc/vertex_set.hpp"

namespace domcyc {

using Edge = std::pair<Vertex, Vertex>;

/// Distance value used for unreachable pairs and disconnected diameters.
inline constexpr std::size_t kInfiniteDistance = std::numeric_limits<std::size_t>::max();

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored as bit rows of `stride` words each, so graphs with at
/// most 64 vertices have one word per row. Every constructor enforces
/// symmetry and irreflexivity.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order)
      : n_(order), stride_(std::max<std::size_t>(1, (order + 63) / 64)), rows_(n_ * stride_, 0) {}

  /// Mutable staging area; build() freezes it into a Graph.
  class Builder;

  static Graph from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.set_edge(u, v);
    return g;
  }
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return bit(u, v);
  }
  std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t i = 0; i < stride_; ++i)
      d += static_cast<std::size_t>(std::popcount(rows_[idx(v) * stride_ + i]));
    return d;
  }
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
    return best;
  }

  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return VertexSet::from_words(n_, rows_.data() + idx(v) * stride_);
  }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Neighbourhood in the requested set representation. Mask64 requires order() <= 64.
  template <class Set>
  Set row(Vertex v) const {
    if constexpr (std::is_same_v<Set, Mask64>) {
      return Mask64::from_word(rows_[idx(v) * stride_]);
    } else {
      return VertexSet::from_words(n_, rows_.data() + idx(v) * stride_);
    }
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (bit(static_cast<Vertex>(u), static_cast<Vertex>(v)))
          out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.set_edge(u, v);
    return g;
  }
  Graph without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.clear_edge(u, v);
    return g;
  }
  /// Adds every missing edge among `members`.
  template <class Set>
  Graph with_clique(const Set& members) const {
    Graph g = *this;
    auto list = members_of(members);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) g.set_edge(list[i], list[j]);
    return g;
  }
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("relabeling has wrong length");
    std::vector<bool> seen(n_, false);
    for (Vertex p : perm) {
      if (p < 0 || static_cast<std::size_t>(p) >= n_ || seen[idx(p)])
        throw std::invalid_argument("relabeling is not a permutation");
      seen[idx(p)] = true;
    }
    Graph g(n_);
    for (auto [u, v] : edges()) g.set_edge(perm[idx(u)], perm[idx(v)]);
    return g;
  }

  bool fits_word() const { return n_ <= Mask64::kMaxUniverse; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  bool bit(Vertex u, Vertex v) const {
    return (rows_[idx(u) * stride_ + (idx(v) >> 6)] >> (v & 63)) & 1u;
  }
  void check_vertex(Vertex v) const {
    if (v < 0 || idx(v) >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                  std::to_string(n_));
  }
  void set_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (bit(u, v)) return;
    rows_[idx(u) * stride_ + (idx(v) >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[idx(v) * stride_ + (idx(u) >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
  }
  void clear_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !bit(u, v)) return;
    rows_[idx(u) * stride_ + (idx(v) >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    rows_[idx(v) * stride_ + (idx(u) >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
  }

  std::size_t n_ = 0;
  std::size_t stride_ = 1;
  std::size_t m_ = 0;
  std::vector<std::uint64_t> rows_;
};

class Graph::Builder {
 public:
  explicit Builder(std::size_t order) : g_(order) {}
  explicit Builder(Graph g) : g_(std::move(g)) {}
  Builder& add_edge(Vertex u, Vertex v) {
    g_.set_edge(u, v);
    return *this;
  }
  Builder& remove_edge(Vertex u, Vertex v) {
    g_.clear_edge(u, v);
    return *this;
  }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  std::size_t order() const { return g_.order(); }
  Graph build() && { return std::move(g_); }
  Graph build() const& { return g_; }

 private:
  Graph g_;
};

/// Calls f with a default-constructed set tag matching the fast representation for g.
template <class F>
decltype(auto) with_set_type(const Graph& g, F&& f) {
  if (g.fits_word()) return f(Mask64{});
  return f(VertexSet{});
}

// --- constructions -------------------------------------------------------

template <class Set>
Graph induced(const Graph& g, const Set& members) {
  std::vector<Vertex> keep = members_of(members);
  for (Vertex v : keep)
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
      throw std::invalid_argument("induced: vertex " + std::to_string(v) + " not in graph");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j]))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(keep.size(), edges);
}

inline Graph induced(const Graph& g, std::initializer_list<Vertex> members) {
  std::vector<Vertex> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted)
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
      throw std::invalid_argument("induced: vertex " + std::to_string(v) + " not in graph");
  VertexSet s(g.order());
  for (Vertex v : sorted) s.insert(v);
  return induced(g, s);
}

/// G minus a vertex set, remaining vertices relabeled in ascending order.
template <class Set>
Graph remove_vertices(const Graph& g, const Set& removed) {
  VertexSet keep = g.vertices();
  removed.for_each([&](Vertex v) { keep.erase(v); });
  return induced(g, keep);
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

/// Join: disjoint union plus every edge between the two sides.
inline Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = disjoint_union(a, b).edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (std::size_t u = 0; u < a.order(); ++u)
    for (std::size_t v = 0; v < b.order(); ++v)
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v) + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

/// lG: l disjoint copies of g.
inline Graph copies(const Graph& g, std::size_t l) {
  if (l == 0) throw std::invalid_argument("copies: count must be at least 1");
  Graph out = g;
  for (std::size_t i = 1; i < l; ++i) out = disjoint_union(out, g);
  return out;
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::from_edges(g.order(), edges);
}

// --- metric and degree vocabulary ----------------------------------------

/// Vertices reachable from `start` using only vertices of `allowed` (start is always included).
template <class Set>
Set reachable_within(const Graph& g, Vertex start, const Set& allowed) {
  Set seen = Set::single(g.order(), start);
  Set frontier = seen;
  while (!frontier.empty()) {
    Set next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.template row<Set>(v); });
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// BFS layers from `source`; kInfiniteDistance for unreachable vertices.
inline std::vector<std::size_t> distances_from(const Graph& g, Vertex source) {
  if (source < 0 || static_cast<std::size_t>(source) >= g.order())
    throw std::invalid_argument("distance: vertex out of range");
  std::vector<std::size_t> dist(g.order(), kInfiniteDistance);
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[static_cast<std::size_t>(w)] == kInfiniteDistance) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

inline std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.order())
    throw std::invalid_argument("distance: vertex out of range");
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

/// Max distance over all pairs; kInfiniteDistance when g is disconnected.
inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    for (std::size_t d : distances_from(g, static_cast<Vertex>(v))) best = std::max(best, d);
  return best;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return with_set_type(g, [&](auto tag) {
    using Set = decltype(tag);
    return reachable_within(g, 0, Set::full(g.order())).count() == g.order();
  });
}

/// Connected components of g restricted to `allowed`, in order of least member.
template <class Set>
std::vector<Set> components_within(const Graph& g, const Set& allowed) {
  std::vector<Set> out;
  Set rest = allowed;
  while (!rest.empty()) {
    Set comp = reachable_within(g, rest.first(), rest);
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

/// V_l(G): the vertices of degree exactly l.
inline VertexSet degree_class(const Graph& g, std::size_t l) {
  VertexSet out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) == l) out.insert(static_cast<Vertex>(v));
  return out;
}

/// True iff no two members are adjacent.
template <class Set>
bool is_independent(const Graph& g, const Set& s) {
  bool ok = true;
  s.for_each([&](Vertex v) { ok = ok && !g.template row<Set>(v).intersects(s); });
  return ok;
}

template <class Set>
bool is_clique(const Graph& g, const Set& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    Set others = s;
    others.erase(v);
    ok = ok && others.is_subset_of(g.template row<Set>(v));
  });
  return ok;
}

// --- cycles ---------------------------------------------------------------

/// An oriented simple cycle v_0 v_1 ... v_{k-1} of a host graph.
class Cycle {
 public:
  Cycle() = default;

  /// Validates that `seq` is a simple cycle of g; throws std::invalid_argument otherwise.
  Cycle(const Graph& g, std::vector<Vertex> seq) : vertices_(std::move(seq)) {
    if (vertices_.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : vertices_) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.order())
        throw std::invalid_argument("cycle vertex " + std::to_string(v) + " out of range");
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
      seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const Vertex a = vertices_[i];
      const Vertex b = vertices_[(i + 1) % vertices_.size()];
      if (!g.adjacent(a, b))
        throw std::invalid_argument("cycle step " + std::to_string(a) + "-" + std::to_string(b) +
                                    " is not an edge");
    }
  }

  std::size_t length() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  bool contains(Vertex v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }
  std::size_t position(Vertex v) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end())
      throw std::invalid_argument("vertex " + std::to_string(v) + " not on cycle");
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  /// u^{+h}: h steps forward along the orientation.
  Vertex successor(Vertex u, std::size_t h = 1) const {
    return vertices_[(position(u) + h) % vertices_.size()];
  }
  /// u^{-h}: h steps backward along the orientation.
  Vertex predecessor(Vertex u, std::size_t h = 1) const {
    const std::size_t k = vertices_.size();
    return vertices_[(position(u) + k - (h % k)) % k];
  }
  /// X^{+} for X a subset of V(C).
  template <class Set>
  Set successors(const Set& x) const {
    Set out = x;
    x.for_each([&](Vertex v) { out.erase(v); });
    x.for_each([&](Vertex v) { out.insert(successor(v)); });
    return out;
  }
  template <class Set>
  Set predecessors(const Set& x) const {
    Set out = x;
    x.for_each([&](Vertex v) { out.erase(v); });
    x.for_each([&](Vertex v) { out.insert(predecessor(v)); });
    return out;
  }
  /// V(C) as a set over the host graph's universe.
  VertexSet vertex_set(std::size_t universe) const {
    VertexSet s(universe);
    for (Vertex v : vertices_) s.insert(v);
    return s;
  }

  /// Rotation/reflection-invariant form: starts at the least vertex, then
  /// proceeds towards its smaller cycle neighbour.
  std::vector<Vertex> normalized() const {
    const std::size_t k = vertices_.size();
    const std::size_t at = static_cast<std::size_t>(
        std::min_element(vertices_.begin(), vertices_.end()) - vertices_.begin());
    const bool forward = vertices_[(at + 1) % k] < vertices_[(at + k - 1) % k];
    std::vector<Vertex> out(k);
    for (std::size_t i = 0; i < k; ++i)
      out[i] = forward ? vertices_[(at + i) % k] : vertices_[(at + k - i) % k];
    return out;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace domcyc
