#include <gtest/gtest.h>

#include <random>

#include "domcyc/closure.hpp"
#include "domcyc/cycles.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/graph6.hpp"
#include "oracles.hpp"

using namespace domcyc;

namespace {

std::vector<Graph> claw_free_corpus(std::size_t n_max) {
  std::vector<Graph> out;
  GraphFilter f;
  f.connected = true;
  f.custom = is_claw_free;
  for (std::size_t n = 3; n <= n_max; ++n)
    for (Graph& g : generate_all(n, f)) out.push_back(std::move(g));
  return out;
}

bool subgraph_of(const Graph& a, const Graph& b) {
  for (auto [u, v] : a.edges())
    if (!b.adjacent(u, v)) return false;
  return true;
}

}  // namespace

TEST(Candidates, Examples) {
  const VertexSet k4m = locally_connected_candidates(k4_minus());
  EXPECT_EQ(k4m.count(), 2u);
  k4m.for_each([&](Vertex v) { EXPECT_EQ(k4_minus().degree(v), 3u); });
  EXPECT_TRUE(locally_connected_candidates(cycle_graph(6)).empty());
  EXPECT_TRUE(locally_connected_candidates(complete_graph(5)).empty());
  EXPECT_THROW(locally_connected_candidates(claw()), std::invalid_argument);
  EXPECT_THROW(closure(complete_bipartite(1, 3)), std::invalid_argument);
}

TEST(Closure, Examples) {
  const ClosureResult k4m = closure(k4_minus());
  EXPECT_EQ(k4m.graph, complete_graph(4));
  ASSERT_EQ(k4m.trace.size(), 1u);
  EXPECT_EQ(k4m.trace[0].added.size(), 1u);
  const ClosureResult c6 = closure(cycle_graph(6));
  EXPECT_EQ(c6.graph, cycle_graph(6));
  EXPECT_TRUE(c6.trace.empty());
  const Graph f = make_family({FamilyId::kFsst, 3, 3, 1});
  EXPECT_EQ(oracle::circumference(closure(f).graph), oracle::circumference(f));
}

TEST(Closure, TraceReplaysToResult) {
  for (const Graph& g : claw_free_corpus(6)) {
    const ClosureResult r = closure(g);
    Graph::Builder b(g);
    for (const ClosureStep& step : r.trace)
      for (auto [u, v] : step.added) {
        EXPECT_FALSE(b.adjacent(u, v));
        b.add_edge(u, v);
      }
    EXPECT_EQ(std::move(b).build(), r.graph) << write_graph6(g);
  }
}

TEST(Closure, Properties) {
  for (const Graph& g : claw_free_corpus(7)) {
    const Graph cl = closure(g).graph;
    EXPECT_TRUE(subgraph_of(g, cl)) << write_graph6(g);
    EXPECT_EQ(closure(cl).graph, cl) << write_graph6(g);
    EXPECT_TRUE(is_claw_free(cl));
    EXPECT_TRUE(locally_connected_candidates(cl).empty());
    EXPECT_TRUE(verify_closure_wellfounded(g, 5, 3)) << write_graph6(g);
  }
}

TEST(Closure, PreservesCircumference) {
  for (const Graph& g : claw_free_corpus(7)) {
    if (g.order() > 7) continue;
    EXPECT_EQ(oracle::circumference(closure(g).graph), oracle::circumference(g)) << write_graph6(g);
  }
}

TEST(Closure, WellFoundedOnFamilyMember) {
  const Graph g = make_family({FamilyId::kA2, 4});
  ASSERT_TRUE(is_claw_free(g));
  EXPECT_TRUE(verify_closure_wellfounded(g, 20, 7));
}

TEST(Closure, ChooserMustPickCandidates) {
  const Graph g = k4_minus();
  EXPECT_THROW(closure_with(g, [&](const VertexSet& cand) { return (g.vertices() - cand).first(); }),
               std::logic_error);
}
