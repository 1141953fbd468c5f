#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "domcyc/canonical.hpp"
#include "domcyc/iso.hpp"
#include "domcyc/zoo.hpp"
#include "oracles.hpp"

using namespace domcyc;

namespace {

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

// Random cograph: leaves are single vertices, internal nodes union or join.
Graph random_cograph(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1);
  const std::size_t left = 1 + rng() % (n - 1);
  const Graph a = random_cograph(left, rng), b = random_cograph(n - left, rng);
  return (rng() & 1) ? join(a, b) : disjoint_union(a, b);
}

}  // namespace

TEST(Induced, SimpleExamples) {
  EXPECT_TRUE(contains_induced(cycle_graph(5), path_graph(4)));
  EXPECT_FALSE(contains_induced(cycle_graph(4), path_graph(4)));
  EXPECT_FALSE(contains_induced(complete_graph(5), claw()));
  EXPECT_TRUE(contains_induced(complete_bipartite(1, 4), claw()));
  EXPECT_FALSE(contains_induced(path_graph(3), path_graph(4)));
  EXPECT_TRUE(contains_induced(path_graph(3), Graph(1)));
}

TEST(Induced, EmbeddingIsReplayable) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(3 + rng() % 7, 0.5, rng);
    const Graph h = oracle::random_graph(2 + rng() % 3, 0.5, rng);
    if (auto e = find_induced(g, h)) { EXPECT_TRUE(is_induced_embedding(g, h, *e)); }
  }
  EXPECT_FALSE(is_induced_embedding(path_graph(3), path_graph(2), {0, 0}));
  EXPECT_FALSE(is_induced_embedding(path_graph(3), path_graph(2), {0, 2}));
}

TEST(Induced, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (rng() % 100) / 100.0, rng);
    const Graph h = oracle::random_graph(1 + rng() % 5, 0.5, rng);
    EXPECT_EQ(contains_induced(g, h), oracle::contains_induced(g, h)) << write_graph6(g) << " " << write_graph6(h);
  }
}

TEST(Induced, LargeHostUsesDynamicSets) {
  const Graph host = disjoint_union(cycle_graph(70), claw());
  EXPECT_FALSE(host.fits_word());
  EXPECT_TRUE(contains_induced(host, claw()));
  EXPECT_TRUE(contains_induced(host, path_graph(20)));
  EXPECT_FALSE(contains_induced(cycle_graph(70), claw()));
}

TEST(ForbiddenSets, Validation) {
  EXPECT_THROW(ForbiddenSet(std::vector<Graph>{}), std::invalid_argument);
  EXPECT_THROW(ForbiddenSet({complete_graph(2)}), std::invalid_argument);
  EXPECT_THROW(ForbiddenSet({disjoint_union(complete_graph(3), Graph(1))}), std::invalid_argument);
  const ForbiddenSet s({claw(), path_graph(4)});
  EXPECT_EQ(s.labels()[1], "H1");
}

TEST(ForbiddenSets, Freeness) {
  const ForbiddenSet h4 = forbidden_pair("H4");
  EXPECT_TRUE(is_free(complete_graph(6), h4));
  EXPECT_FALSE(is_free(cycle_graph(5), h4));
  EXPECT_FALSE(is_free(w_graph(), h4));
  EXPECT_TRUE(is_free_of(cycle_graph(4), path_graph(4)));
}

TEST(ForbiddenSets, Ordering) {
  const ForbiddenSet c({claw()}), cs({claw_star()}), css({claw_star_star()});
  EXPECT_TRUE(set_leq(c, cs));
  EXPECT_TRUE(set_leq(css, cs));
  EXPECT_FALSE(set_leq(cs, c));
  // K**_{1,3} sits inside K*_{1,3}, so {K**_{1,3}, Z_1} ≤ {K*_{1,3}, Z_1}.
  EXPECT_TRUE(set_leq(forbidden_pair("H5P"), forbidden_pair("H5")));
  EXPECT_TRUE(set_leq(c, c));
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng() % 12, 0.4, rng);
    const CanonicalForm a = canonical(g);
    const CanonicalForm b = canonical(random_relabel(g, rng));
    EXPECT_EQ(a.encoding, b.encoding) << write_graph6(g);
    EXPECT_EQ(write_graph6(canonical_graph(g)), a.encoding);
    std::vector<Vertex> sorted = a.labeling;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], static_cast<Vertex>(i));
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = oracle::random_graph(n, 0.5, rng), h = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(canonical(g).encoding == canonical(h).encoding, oracle::min_mask(g) == oracle::min_mask(h))
        << write_graph6(g) << " " << write_graph6(h);
  }
}

TEST(Canonical, SymmetricGraphs) {
  std::mt19937_64 rng(17);
  const std::vector<Graph> hard = {read_graph6("IheA@GUAo"), complete_bipartite(6, 6), cycle_graph(20),
                                   copies(complete_graph(3), 5), complement(copies(cycle_graph(5), 3))};
  for (const Graph& g : hard) EXPECT_EQ(canonical(g).encoding, canonical(random_relabel(g, rng)).encoding);
  EXPECT_FALSE(isomorphic(cycle_graph(6), copies(complete_graph(3), 2)));
  EXPECT_TRUE(isomorphic(path_graph(5), random_relabel(path_graph(5), rng)));
}

TEST(Canonical, LargeOrders) {
  std::mt19937_64 rng(19);
  const Graph g = disjoint_union(cycle_graph(40), oracle::random_graph(30, 0.2, rng));
  EXPECT_EQ(canonical(g).encoding, canonical(random_relabel(g, rng)).encoding);
}

TEST(ConnectedSubgraphs, MatchesSubsetScan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    const std::size_t k = 1 + rng() % 5;
    std::set<std::vector<Vertex>> expected;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > k) continue;
      VertexSet s(n);
      for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.insert(static_cast<Vertex>(v));
      const Graph h = induced(g, s);
      if (oracle::connected_without(oracle::matrix(h), h.order())) expected.insert(s.members());
    }
    std::vector<std::vector<Vertex>> got;
    for (const VertexSet& s : connected_induced_subgraphs(g, k)) got.push_back(s.members());
    const std::set<std::vector<Vertex>> unique(got.begin(), got.end());
    EXPECT_EQ(unique.size(), got.size()) << "duplicates for " << write_graph6(g);
    EXPECT_EQ(unique, expected) << write_graph6(g);
  }
  EXPECT_THROW(connected_induced_subgraphs(path_graph(3), 0), std::invalid_argument);
}

namespace {

// Some split {A, B} with |A|, |B| >= k and all A-B pairs adjacent, by scanning every subset.
bool brute_split_exists(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    const auto a = static_cast<std::size_t>(std::popcount(mask));
    if (a < k || n - a < k) continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if (((mask >> x) & 1u) && !((mask >> y) & 1u)) ok = g.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(y));
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(P4Free, PartitionOnCographs) {
  std::mt19937_64 rng(29);
  int found = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_cograph(2 + rng() % 8, rng);
    const std::size_t k = 1 + rng() % 3;
    if (g.order() < 2 * k || !is_k_connected(g, k)) {
      EXPECT_THROW(p4free_partition(g, k), PreconditionViolation);
      continue;
    }
    const auto part = p4free_partition(g, k);
    EXPECT_EQ(part.has_value(), brute_split_exists(g, k)) << write_graph6(g) << " k=" << k;
    if (k <= 2) { EXPECT_TRUE(part.has_value()) << write_graph6(g) << " k=" << k; }
    if (!part) continue;
    ++found;
    EXPECT_GE(part->a.count(), k);
    EXPECT_GE(part->b.count(), k);
    EXPECT_EQ((part->a | part->b).count(), g.order());
    EXPECT_FALSE(part->a.intersects(part->b));
    part->a.for_each([&](Vertex x) { part->b.for_each([&](Vertex y) { EXPECT_TRUE(g.adjacent(x, y)); }); });
  }
  EXPECT_GT(found, 20);
  EXPECT_THROW(p4free_partition(path_graph(4), 1), PreconditionViolation);
}

TEST(P4Free, SpecExamples) {
  const auto k4 = p4free_partition(complete_graph(4), 2);
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->a.count(), 2u);
  const auto c4 = p4free_partition(cycle_graph(4), 2);
  ASSERT_TRUE(c4.has_value());
  // The sides are the diagonals {0,2} and {1,3}.
  EXPECT_FALSE(c4->a.test(0) == c4->a.test(1));
  EXPECT_TRUE(c4->a.test(0) == c4->a.test(2));
  // W is only 1-connected: its hub is a cut vertex.
  EXPECT_THROW(p4free_partition(w_graph(), 2), PreconditionViolation);
  const auto w1 = p4free_partition(w_graph(), 1);
  ASSERT_TRUE(w1.has_value());
  EXPECT_EQ(std::min(w1->a.count(), w1->b.count()), 1u);
  EXPECT_FALSE(brute_split_exists(w_graph(), 2));
}

TEST(P4Free, NoBalancedSplitOfOctahedronAtThree) {
  // K_{2,2,2} is 4-connected on 6 vertices, yet each side of a complete
  // split must be a union of its pairs, so 3/3 is impossible.
  const Graph oct = complement(copies(complete_graph(2), 3));
  ASSERT_TRUE(is_k_connected(oct, 3));
  EXPECT_FALSE(p4free_partition(oct, 3).has_value());
  EXPECT_FALSE(brute_split_exists(oct, 3));
}

TEST(P4Free, CompleteBipartite) {
  const auto part = p4free_partition(complete_bipartite(2, 3), 2);
  ASSERT_TRUE(part.has_value());
  EXPECT_EQ(std::min(part->a.count(), part->b.count()), 2u);
}
