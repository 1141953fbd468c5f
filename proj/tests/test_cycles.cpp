#include <gtest/gtest.h>

#include <random>

#include "domcyc/cycles.hpp"
#include "domcyc/graph6.hpp"
#include "domcyc/zoo.hpp"
#include "oracles.hpp"

using namespace domcyc;

namespace {

std::vector<Graph> random_corpus(std::uint64_t seed, int count, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_graph(3 + rng() % (max_n - 2), 0.25 + 0.5 * (rng() % 100) / 100.0, rng));
  return out;
}

}  // namespace

TEST(Dominating, Examples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(is_dominating(c5, Cycle(c5, {0, 1, 2, 3, 4})));
  const Graph ap = make_family({FamilyId::kAPrime, 3});
  const Cycle six(ap, {0, 2, 3, 1, 4, 5});
  EXPECT_FALSE(is_dominating(ap, six));
  const Graph k4 = complete_graph(4);
  EXPECT_TRUE(is_dominating(k4, Cycle(k4, {0, 1, 2})));
  EXPECT_THROW(is_dominating(c5, Cycle(cycle_graph(6), {0, 1, 2, 3, 4, 5})), std::invalid_argument);
}

TEST(Dominating, FormulationsAgree) {
  for (const Graph& g : random_corpus(1, 150, 8))
    for (const auto& seq : oracle::all_cycles(g)) {
      const Cycle c(g, seq);
      const bool a = is_dominating(g, c);
      EXPECT_EQ(a, covers_every_edge(g, c));
      EXPECT_EQ(a, oracle::dominates(g, seq));
    }
}

TEST(Circumference, Examples) {
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(circumference(cycle_graph(n)), n);
  EXPECT_EQ(circumference(make_family({FamilyId::kFsst, 3, 3, 1})), 8u);
  EXPECT_EQ(circumference(make_family({FamilyId::kA, 2})), 6u);
  EXPECT_EQ(circumference(path_graph(6)), 0u);
  EXPECT_FALSE(longest_cycle(Graph(0)).has_value());
  EXPECT_EQ(circumference(read_graph6("IheA@GUAo")), 9u);
}

TEST(Circumference, MatchesOracle) {
  for (const Graph& g : random_corpus(2, 300, 8)) {
    const auto c = longest_cycle(g);
    const std::size_t expect = oracle::circumference(g);
    EXPECT_EQ(c ? c->length() : 0u, expect) << write_graph6(g);
    if (c) { EXPECT_NO_THROW(Cycle(g, c->vertices())); }
  }
}

TEST(Hamiltonian, Examples) {
  EXPECT_TRUE(is_hamiltonian(complete_graph(4)));
  EXPECT_FALSE(is_hamiltonian(make_family({FamilyId::kFsst, 3, 3, 1})));
  EXPECT_FALSE(is_hamiltonian(read_graph6("IheA@GUAo")));
  EXPECT_FALSE(is_hamiltonian(complete_graph(2)));
  EXPECT_FALSE(is_hamiltonian(complete_bipartite(3, 4)));
  EXPECT_TRUE(is_hamiltonian(complete_bipartite(4, 4)));
  EXPECT_TRUE(is_hamiltonian(complete_graph(30)));
}

TEST(Hamiltonian, MatchesOracle) {
  for (const Graph& g : random_corpus(3, 300, 9)) {
    const auto h = hamilton_cycle(g);
    EXPECT_EQ(h.has_value(), oracle::circumference(g) == g.order()) << write_graph6(g);
    if (h) { EXPECT_EQ(h->length(), g.order()); }
  }
}

TEST(DominatingSearch, Examples) {
  EXPECT_FALSE(exists_dominating_cycle(make_family({FamilyId::kA4, 3})).has_value());
  const auto c6 = exists_dominating_cycle(cycle_graph(6));
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(c6->length(), 6u);
  EXPECT_TRUE(exists_dominating_cycle(k4_minus()).has_value());
  EXPECT_FALSE(exists_dominating_cycle(path_graph(5)).has_value());
}

TEST(DominatingSearch, MatchesOracle) {
  for (const Graph& g : random_corpus(4, 300, 8)) {
    std::size_t best = 0;
    for (const auto& seq : oracle::all_cycles(g))
      if (oracle::dominates(g, seq)) best = std::max(best, seq.size());
    const auto c = exists_dominating_cycle(g);
    ASSERT_EQ(c.has_value(), best > 0) << write_graph6(g);
    if (c) {
      EXPECT_TRUE(oracle::dominates(g, c->vertices()));
      EXPECT_EQ(c->length(), best) << write_graph6(g);
    }
  }
}

TEST(DominatingSearch, HamiltonianImpliesDominating) {
  for (const Graph& g : random_corpus(5, 200, 9))
    if (is_hamiltonian(g)) { EXPECT_TRUE(exists_dominating_cycle(g).has_value()); }
}

TEST(LongestDominating, Examples) {
  EXPECT_TRUE(all_longest_cycles_dominating(cycle_graph(5)).holds);
  const Graph ap = make_family({FamilyId::kAPrime, 3});
  const LongestCycleAudit audit = all_longest_cycles_dominating(ap);
  EXPECT_FALSE(audit.holds);
  ASSERT_TRUE(audit.counterexample.has_value());
  EXPECT_EQ(audit.counterexample->length(), audit.circumference);
  EXPECT_FALSE(is_dominating(ap, *audit.counterexample));
  EXPECT_FALSE(dominating_longest_cycle(ap).has_value());
}

TEST(LongestDominating, MatchesOracle) {
  for (const Graph& g : random_corpus(6, 300, 8)) {
    const auto cycles = oracle::all_cycles(g);
    const std::size_t c = oracle::circumference(g);
    bool all = true, some = false;
    std::size_t count = 0;
    for (const auto& seq : cycles)
      if (seq.size() == c) {
        ++count;
        const bool d = oracle::dominates(g, seq);
        all = all && d;
        some = some || d;
      }
    const LongestCycleAudit audit = all_longest_cycles_dominating(g);
    EXPECT_EQ(audit.holds, all) << write_graph6(g);
    EXPECT_EQ(dominating_longest_cycle(g).has_value(), c > 0 && some) << write_graph6(g);
    const auto listed = longest_cycles(g);
    EXPECT_EQ(listed.size(), count) << write_graph6(g);
    for (const Cycle& cyc : listed) EXPECT_EQ(cyc.length(), c);
  }
}

TEST(Multipartite, Examples) {
  EXPECT_TRUE(is_complete_multipartite(complete_bipartite(2, 3)));
  EXPECT_FALSE(is_complete_multipartite(path_graph(4)));
  EXPECT_TRUE(is_complete_multipartite(complete_graph(5)));
  EXPECT_TRUE(is_complete_multipartite(Graph(3)));
  const auto parts = complete_multipartite_parts(complement(disjoint_union(complete_graph(2), complete_graph(3))));
  ASSERT_TRUE(parts.has_value());
  ASSERT_EQ(parts->size(), 2u);
  EXPECT_EQ((*parts)[0].count(), 2u);
}

TEST(Multipartite, MatchesTransitivityOracle) {
  for (const Graph& g : random_corpus(7, 300, 8)) {
    const std::size_t n = g.order();
    bool transitive = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          const auto A = static_cast<Vertex>(a), B = static_cast<Vertex>(b), C = static_cast<Vertex>(c);
          if (!g.adjacent(A, B) && !g.adjacent(B, C) && g.adjacent(A, C)) transitive = false;
        }
    EXPECT_EQ(is_complete_multipartite(g), transitive) << write_graph6(g);
  }
}

TEST(SuccessorDisjointness, Examples) {
  const Graph ap = make_family({FamilyId::kAPrime, 3});
  EXPECT_TRUE(successor_disjointness_check(ap, Cycle(ap, {0, 2, 3, 1, 4, 5})));
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(successor_disjointness_check(c5, Cycle(c5, {0, 1, 2, 3, 4})));
  const Graph k4 = complete_graph(4);
  EXPECT_THROW(successor_disjointness_check(k4, Cycle(k4, {0, 1, 2})), std::invalid_argument);
}

TEST(SuccessorDisjointness, HoldsOnLongestCycles) {
  for (const Graph& g : random_corpus(8, 200, 8))
    for (const Cycle& c : longest_cycles(g)) EXPECT_TRUE(successor_sets_disjoint(g, c)) << write_graph6(g);
}

TEST(SuccessorDisjointness, FailsOnShortCycles) {
  // On K_4, the triangle 0 1 2 leaves 3 attached to every cycle vertex.
  const Graph k4 = complete_graph(4);
  EXPECT_FALSE(successor_sets_disjoint(k4, Cycle(k4, {0, 1, 2})));
}

TEST(Budget, ExhaustionIsAnError) {
  CycleSearchBudget tiny;
  tiny.max_expansions = 10;
  EXPECT_THROW(circumference(read_graph6("IheA@GUAo"), tiny), ResourceExhausted);
  EXPECT_THROW(exists_dominating_cycle(make_family({FamilyId::kA, 4}), tiny), ResourceExhausted);
  CycleSearchBudget zero;
  zero.max_expansions = 0;
  EXPECT_THROW(circumference(cycle_graph(4), zero), std::invalid_argument);
  CycleSearchBudget clock;
  clock.wall_clock = std::chrono::milliseconds(0);
  EXPECT_THROW(circumference(cycle_graph(4), clock), std::invalid_argument);
}

TEST(Budget, MeterCounts) {
  BudgetMeter meter(CycleSearchBudget{});
  CycleQuery q;
  std::size_t seen = 0;
  search_cycles(cycle_graph(5), q, meter, [&](const std::vector<Vertex>&) {
    ++seen;
    return Visit::kContinue;
  });
  EXPECT_EQ(seen, 1u);
  EXPECT_GT(meter.used(), 0u);
}

TEST(TwinSymmetry, ManyTwins) {
  // Both sides of K_{9,10} are twin classes; without symmetry breaking the
  // Hamiltonicity search would revisit 9!·10! relabelled paths.
  const Graph g = complete_bipartite(9, 10);
  const auto classes = cycle_detail::twin_classes<Mask64>(g);
  EXPECT_EQ(classes.classes.size(), 2u);
  EXPECT_FALSE(is_hamiltonian(g));
  EXPECT_EQ(circumference(g), 18u);
  EXPECT_TRUE(exists_dominating_cycle(g).has_value());
  const Graph f = make_family({FamilyId::kFsst, 7, 7, 3});
  EXPECT_FALSE(is_hamiltonian(f));
  EXPECT_EQ(circumference(f), f.order() - 1);
}
