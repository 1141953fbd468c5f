#pragma once

// Closure of claw-free graphs: while some vertex has a connected, non-complete
// neighbourhood, turn that neighbourhood into a clique.

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domcyc/graph.hpp"
#include "domcyc/iso.hpp"
#include "domcyc/zoo.hpp"

namespace domcyc {

struct ClosureStep {
  Vertex vertex;
  std::vector<Edge> added;
};

using ClosureTrace = std::vector<ClosureStep>;

struct ClosureResult {
  Graph graph;
  ClosureTrace trace;
};

inline bool is_claw_free(const Graph& g) { return !contains_induced(g, claw()); }

namespace closure_detail {

inline VertexSet candidates_unchecked(const Graph& g) {
  VertexSet out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    const VertexSet nbrs = g.neighbors(static_cast<Vertex>(v));
    if (nbrs.count() < 2 || is_clique(g, nbrs)) continue;
    if (reachable_within(g, nbrs.first(), nbrs).count() == nbrs.count()) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

}  // namespace closure_detail

/// Vertices whose neighbourhood induces a connected, non-complete graph.
inline VertexSet locally_connected_candidates(const Graph& g) {
  if (!is_claw_free(g)) throw std::invalid_argument("closure: graph is not claw-free");
  return closure_detail::candidates_unchecked(g);
}

/// Closure with the completion vertex picked by `choose(candidates)` at each
/// step. Claw-freeness is re-checked after every step.
template <class Chooser>
ClosureResult closure_with(const Graph& g, Chooser&& choose) {
  if (!is_claw_free(g)) throw std::invalid_argument("closure: graph is not claw-free");
  ClosureResult out{g, {}};
  while (true) {
    const VertexSet cand = closure_detail::candidates_unchecked(out.graph);
    if (cand.empty()) break;
    const Vertex v = choose(cand);
    if (!cand.test(v)) throw std::logic_error("closure: chooser picked a non-candidate");
    ClosureStep step{v, {}};
    const auto nbrs = out.graph.neighbors(v).members();
    Graph::Builder b(out.graph);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j)
        if (!b.adjacent(nbrs[i], nbrs[j])) {
          b.add_edge(nbrs[i], nbrs[j]);
          step.added.emplace_back(nbrs[i], nbrs[j]);
        }
    out.graph = std::move(b).build();
    out.trace.push_back(std::move(step));
    if (!is_claw_free(out.graph)) throw std::logic_error("closure step produced an induced claw");
  }
  return out;
}

/// cl(G) completing the lowest-index candidate first.
inline ClosureResult closure(const Graph& g) {
  return closure_with(g, [](const VertexSet& cand) { return cand.first(); });
}

/// Runs the closure under `trials` random completion orders and checks
/// that all of them reach the deterministic result.
inline bool verify_closure_wellfounded(const Graph& g, std::size_t trials, std::uint64_t seed = 1) {
  const Graph reference = closure(g).graph;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph other = closure_with(g, [&](const VertexSet& cand) {
                          const auto members = cand.members();
                          std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
                          return members[pick(rng)];
                        }).graph;
    if (!(other == reference)) return false;
  }
  return true;
}

}  // namespace domcyc
