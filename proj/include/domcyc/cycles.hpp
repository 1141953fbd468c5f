#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "domcyc/connectivity.hpp"
#include "domcyc/errors.hpp"
#include "domcyc/graph.hpp"

namespace domcyc {

/// Caps for exact cycle searches. Exceeding a cap raises ResourceExhausted.
struct CycleSearchBudget {
  std::uint64_t max_expansions = 100'000'000;
  std::optional<std::chrono::milliseconds> wall_clock;
};

class BudgetMeter {
 public:
  explicit BudgetMeter(const CycleSearchBudget& budget) : cap_(budget.max_expansions) {
    if (cap_ == 0) throw std::invalid_argument("cycle search budget must be positive");
    if (budget.wall_clock) {
      if (budget.wall_clock->count() <= 0) throw std::invalid_argument("wall-clock cap must be positive");
      deadline_ = std::chrono::steady_clock::now() + *budget.wall_clock;
    }
  }

  void tick() {
    if (++used_ > cap_)
      throw ResourceExhausted("cycle search exceeded " + std::to_string(cap_) + " node expansions");
    if (deadline_ && (used_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_)
      throw ResourceExhausted("cycle search exceeded its wall-clock cap");
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

/// Parameters of a depth-first cycle search. Each reported cycle starts at
/// its least vertex.
struct CycleQuery {
  /// Only cycles with at least this many vertices are reported; visitors may
  /// raise it while the search runs (branch and bound).
  std::size_t min_length = 3;
  std::size_t max_length = std::numeric_limits<std::size_t>::max();
  /// Report only cycles whose complement is independent, pruning partial
  /// paths that already strand an edge.
  bool dominating_only = false;
  /// Report one representative per orbit under permutations of twin
  /// vertices (equal open or closed neighbourhoods) instead of every cycle.
  /// Sound for any question invariant under automorphisms. Disables the
  /// reflection dedupe, so a representative may be seen in both directions.
  bool break_twin_symmetry = false;
  /// Restrict to cycles whose least vertex is this one.
  std::optional<Vertex> only_start;
};

enum class Visit { kContinue, kStop };

namespace cycle_detail {

/// Twin classes as masks; class_of[v] is an index into classes or -1 for singletons.
template <class Set>
struct TwinClasses {
  std::vector<int> class_of;
  std::vector<Set> classes;
};

template <class Set>
TwinClasses<Set> twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  TwinClasses<Set> out;
  out.class_of.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (out.class_of[v] >= 0) continue;
    const auto vv = static_cast<Vertex>(v);
    const Set open_v = g.template row<Set>(vv);
    Set closed_v = open_v;
    closed_v.insert(vv);
    Set cls = Set::single(n, vv);
    for (std::size_t w = v + 1; w < n; ++w) {
      if (out.class_of[w] >= 0) continue;
      const auto ww = static_cast<Vertex>(w);
      const Set open_w = g.template row<Set>(ww);
      Set closed_w = open_w;
      closed_w.insert(ww);
      if (open_w == open_v || closed_w == closed_v) cls.insert(ww);
    }
    if (cls.count() > 1) {
      const int id = static_cast<int>(out.classes.size());
      cls.for_each([&](Vertex x) { out.class_of[static_cast<std::size_t>(x)] = id; });
      out.classes.push_back(cls);
    }
  }
  return out;
}

template <class Set, class Visitor>
class CycleSearcher {
 public:
  CycleSearcher(const Graph& g, CycleQuery& query, BudgetMeter& meter, Visitor& visit)
      : g_(g), n_(g.order()), q_(query), meter_(meter), visit_(visit), on_path_(n_), allowed_(n_) {
    rows_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) rows_.push_back(g.template row<Set>(static_cast<Vertex>(v)));
    if (q_.break_twin_symmetry) twins_ = twin_classes<Set>(g);
  }

  /// Returns false if the visitor stopped the search.
  bool run() {
    const Set all = Set::full(n_);
    for (std::size_t s = 0; s < n_; ++s) {
      const auto start = static_cast<Vertex>(s);
      if (q_.only_start && *q_.only_start != start) continue;
      if (n_ - s < q_.min_length) break;
      if (q_.dominating_only) {
        // Vertices below the start are all off the cycle.
        Set below = all;
        for (std::size_t v = s; v < n_; ++v) below.erase(static_cast<Vertex>(v));
        if (!is_independent(g_, below)) break;
      }
      start_ = start;
      allowed_ = all;
      for (Vertex v = 0; v < start; ++v) allowed_.erase(v);
      path_.assign(1, start);
      on_path_ = Set::single(n_, start);
      if (!extend()) return false;
    }
    return true;
  }

 private:
  const Set& row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }

  bool extend() {
    meter_.tick();
    const Vertex end = path_.back();
    const std::size_t k = path_.size();
    const Set unvisited = allowed_ - on_path_;
    Set reach = reachable_within(g_, end, unvisited | Set::single(n_, end));
    reach.erase(end);
    if (k + reach.count() < q_.min_length) return true;
    if (k > 1 && !row(start_).intersects(reach) && !row(start_).test(end)) return true;
    if (q_.dominating_only) {
      Set stranded = Set::full(n_) - on_path_ - reach;
      if (!is_independent(g_, stranded)) return true;
    }
    if (k >= 3 && k >= q_.min_length && k <= q_.max_length && row(start_).test(end) &&
        (q_.break_twin_symmetry || path_[1] < end)) {
      bool report = true;
      if (q_.dominating_only) report = is_independent(g_, Set::full(n_) - on_path_);
      if (report && visit_(static_cast<const std::vector<Vertex>&>(path_)) == Visit::kStop) return false;
    }
    if (k >= q_.max_length) return true;
    Set cand = row(end) & unvisited;
    for (Vertex c = cand.first(); c >= 0; c = cand.first()) {
      cand.erase(c);
      if (q_.break_twin_symmetry) {
        const int cls = twins_.class_of[static_cast<std::size_t>(c)];
        if (cls >= 0 && (twins_.classes[static_cast<std::size_t>(cls)] & unvisited).first() != c) continue;
      }
      path_.push_back(c);
      on_path_.insert(c);
      const bool go_on = extend();
      on_path_.erase(c);
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Graph& g_;
  std::size_t n_;
  CycleQuery& q_;
  BudgetMeter& meter_;
  Visitor& visit_;
  std::vector<Set> rows_;
  TwinClasses<Set> twins_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  Set on_path_;
  Set allowed_;
};

}  // namespace cycle_detail

/// Runs a cycle search; visitor(const std::vector<Vertex>&) -> Visit.
/// Returns false when the visitor stopped early.
template <class Visitor>
bool search_cycles(const Graph& g, CycleQuery& query, BudgetMeter& meter, Visitor&& visit) {
  return with_set_type(g, [&](auto tag) {
    return cycle_detail::CycleSearcher<decltype(tag), std::remove_reference_t<Visitor>>(g, query, meter, visit)
        .run();
  });
}

/// V(G) - V(C) is independent.
inline bool is_dominating(const Graph& g, const Cycle& c) {
  const Cycle checked(g, c.vertices());
  VertexSet off = g.vertices() - checked.vertex_set(g.order());
  return is_independent(g, off);
}

/// The edge-incidence formulation: every edge has an endpoint on C.
inline bool covers_every_edge(const Graph& g, const Cycle& c) {
  const Cycle checked(g, c.vertices());
  for (auto [u, v] : g.edges())
    if (!checked.contains(u) && !checked.contains(v)) return false;
  return true;
}

inline std::optional<Cycle> longest_cycle(const Graph& g, const CycleSearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  CycleQuery q;
  q.break_twin_symmetry = true;
  std::optional<Cycle> best;
  search_cycles(g, q, meter, [&](const std::vector<Vertex>& path) {
    best = Cycle(g, path);
    q.min_length = path.size() + 1;
    return path.size() == g.order() ? Visit::kStop : Visit::kContinue;
  });
  return best;
}

/// c(G); 0 for forests.
inline std::size_t circumference(const Graph& g, const CycleSearchBudget& budget = {}) {
  const auto c = longest_cycle(g, budget);
  return c ? c->length() : 0;
}

inline std::optional<Cycle> hamilton_cycle(const Graph& g, const CycleSearchBudget& budget = {}) {
  if (g.order() < 3) return std::nullopt;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.degree(static_cast<Vertex>(v)) < 2) return std::nullopt;
  if (!is_connected(g)) return std::nullopt;
  BudgetMeter meter(budget);
  CycleQuery q;
  q.min_length = g.order();
  q.break_twin_symmetry = true;
  q.only_start = 0;
  std::optional<Cycle> found;
  search_cycles(g, q, meter, [&](const std::vector<Vertex>& path) {
    found = Cycle(g, path);
    return Visit::kStop;
  });
  return found;
}

inline bool is_hamiltonian(const Graph& g, const CycleSearchBudget& budget = {}) {
  return hamilton_cycle(g, budget).has_value();
}

/// A dominating cycle of maximum length among dominating cycles (the first
/// one met in search order), or nullopt when none exists.
inline std::optional<Cycle> exists_dominating_cycle(const Graph& g, const CycleSearchBudget& budget = {}) {
  BudgetMeter meter(budget);
  CycleQuery q;
  q.dominating_only = true;
  q.break_twin_symmetry = true;
  std::optional<Cycle> best;
  search_cycles(g, q, meter, [&](const std::vector<Vertex>& path) {
    best = Cycle(g, path);
    q.min_length = path.size() + 1;
    return path.size() == g.order() ? Visit::kStop : Visit::kContinue;
  });
  return best;
}

struct LongestCycleAudit {
  bool holds = true;
  std::size_t circumference = 0;
  std::optional<Cycle> counterexample;
};

/// Every cycle of length c(G) is dominating; on failure carries one that is not.
inline LongestCycleAudit all_longest_cycles_dominating(const Graph& g, const CycleSearchBudget& budget = {}) {
  LongestCycleAudit out;
  out.circumference = circumference(g, budget);
  // With at most one vertex off the cycle no edge can be missed.
  if (out.circumference == 0 || out.circumference + 1 >= g.order()) return out;
  BudgetMeter meter(budget);
  CycleQuery q;
  q.min_length = q.max_length = out.circumference;
  q.break_twin_symmetry = true;
  search_cycles(g, q, meter, [&](const std::vector<Vertex>& path) {
    Cycle c(g, path);
    if (is_dominating(g, c)) return Visit::kContinue;
    out.holds = false;
    out.counterexample = std::move(c);
    return Visit::kStop;
  });
  return out;
}

/// Some cycle of length c(G) is dominating; returns it.
inline std::optional<Cycle> dominating_longest_cycle(const Graph& g, const CycleSearchBudget& budget = {}) {
  const std::size_t c = circumference(g, budget);
  if (c == 0) return std::nullopt;
  BudgetMeter meter(budget);
  CycleQuery q;
  q.min_length = q.max_length = c;
  q.dominating_only = true;
  q.break_twin_symmetry = true;
  std::optional<Cycle> found;
  search_cycles(g, q, meter, [&](const std::vector<Vertex>& path) {
    found = Cycle(g, path);
    return Visit::kStop;
  });
  return found;
}

/// Every cycle of length c(G), each once, in normalized orientation.
inline std::vector<Cycle> longest_cycles(const Graph& g, const CycleSearchBudget& budget = {}) {
  std::vector<Cycle> out;
  const std::size_t c = circumference(g, budget);
  if (c == 0) return out;
  BudgetMeter meter(budget);
  CycleQuery q;
  q.min_length = q.max_length = c;
  search_cycles(g, q, meter, [&](const std::vector<Vertex>& path) {
    out.emplace_back(g, path);
    return Visit::kContinue;
  });
  return out;
}

/// Complete multipartite test: non-adjacency must be an equivalence relation.
/// On success returns the parts, ordered by least member.
inline std::optional<std::vector<VertexSet>> complete_multipartite_parts(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> parts;
  std::vector<bool> done(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexSet non_nbrs = g.vertices() - g.neighbors(static_cast<Vertex>(v));
    bool ok = true;
    non_nbrs.for_each([&](Vertex u) {
      ok = ok && (g.vertices() - g.neighbors(u)) == non_nbrs;
    });
    if (!ok) return std::nullopt;
    if (!done[v]) {
      non_nbrs.for_each([&](Vertex u) { done[static_cast<std::size_t>(u)] = true; });
      parts.push_back(non_nbrs);
    }
  }
  return parts;
}

inline bool is_complete_multipartite(const Graph& g) { return complete_multipartite_parts(g).has_value(); }

/// N(H; C) ∩ N(H; C)^+ = ∅ for every component H of G - V(C), without
/// checking that C is longest.
inline bool successor_sets_disjoint(const Graph& g, const Cycle& c) {
  const VertexSet on = c.vertex_set(g.order());
  const VertexSet off = g.vertices() - on;
  for (const VertexSet& comp : components_within(g, off)) {
    VertexSet attach(g.order());
    comp.for_each([&](Vertex h) { attach |= g.neighbors(h); });
    attach &= on;
    if (attach.intersects(c.successors(attach))) return false;
  }
  return true;
}

/// For a longest cycle C: every component H of G - V(C) has
/// N(H; C) ∩ N(H; C)^+ = ∅. Vacuously true when C is Hamiltonian.
inline bool successor_disjointness_check(const Graph& g, const Cycle& c, const CycleSearchBudget& budget = {}) {
  const Cycle checked(g, c.vertices());
  if (circumference(g, budget) != checked.length())
    throw std::invalid_argument("successor_disjointness_check: cycle is not a longest cycle");
  return successor_sets_disjoint(g, checked);
}

}  // namespace domcyc
