#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "acq/generators.hpp"
#include "expect_error.hpp"

namespace acq {
namespace {

bool bfs_connected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : adj[queue[i]]) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == g.n();
}

TEST(Gnp, ExtremeProbabilities) {
  EXPECT_EQ(gen_gnp(4, 1.0, 1), Graph::complete(4));
  EXPECT_EQ(gen_gnp(10, 0.0, 1).edge_count(), 0U);
}

TEST(Gnp, RejectsBadProbability) {
  EXPECT_ERROR_KIND(gen_gnp(5, 1.5, 0), ErrorKind::kInvalidProbability);
  EXPECT_ERROR_KIND(gen_gnp(5, -0.1, 0), ErrorKind::kInvalidProbability);
}

TEST(Gnp, Deterministic) { EXPECT_EQ(gen_gnp(50, 0.3, 7), gen_gnp(50, 0.3, 7)); }

TEST(Gnp, MeanEdgeCount) {
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) total += gen_gnp(200, 0.1, seed).edge_count();
  EXPECT_NEAR(total / 100, 1990.0, 0.05 * 1990.0);
}

TEST(Hrnp, ExtremeCases) {
  const Hypergraph full = gen_hrnp(5, 5, 1.0, 3);
  ASSERT_EQ(full.edge_count(), 1U);
  EXPECT_EQ(full.edge_list()[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(gen_hrnp(5, 3, 0.0, 3).edge_count(), 0U);
}

TEST(Hrnp, RejectsBadUniformity) {
  EXPECT_ERROR_KIND(gen_hrnp(3, 4, 0.5, 0), ErrorKind::kInvalidUniformity);
  EXPECT_ERROR_KIND(gen_hrnp(3, 1, 0.5, 0), ErrorKind::kInvalidUniformity);
  EXPECT_ERROR_KIND(gen_hrnp(5, 3, 2.0, 0), ErrorKind::kInvalidProbability);
}

TEST(Hrnp, TwoUniformMatchesGnp) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(underlying_graph(gen_hrnp(40, 2, 0.2, seed)), gen_gnp(40, 0.2, seed));
  }
}

TEST(Hrnp, MeanEdgeCount) {
  double total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) total += gen_hrnp(30, 3, 0.05, seed).edge_count();
  EXPECT_NEAR(total / 100, 203.0, 0.1 * 203.0);
}

TEST(Process, SmallCases) {
  const EdgeSequence two = gen_process(2, 9);
  ASSERT_EQ(two.order.size(), 1U);
  EXPECT_EQ(two.order[0], Edge(0, 1));
  const EdgeSequence four = gen_process(4, 9);
  EXPECT_EQ(std::set<Edge>(four.order.begin(), four.order.end()).size(), 6U);
  EXPECT_EQ(gen_process(5, 11), gen_process(5, 11));
  EXPECT_ERROR_KIND(gen_process(1, 0), ErrorKind::kInvalidStructure);
}

TEST(Process, ConnectivityTimeSmall) {
  EXPECT_EQ(connectivity_time(gen_process(2, 0)), 1U);
  const EdgeSequence seq{3, {{0, 1}, {0, 2}, {1, 2}}};
  EXPECT_EQ(connectivity_time(seq), 2U);
}

TEST(Process, ConnectivityTimeIsMinimal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const EdgeSequence seq = gen_process(60, seed);
    const std::size_t m = connectivity_time(seq);
    EXPECT_TRUE(bfs_connected(snapshot(seq, m)));
    EXPECT_FALSE(bfs_connected(snapshot(seq, m - 1)));
  }
}

TEST(Process, HittingTimeScale) {
  const std::size_t n = 2000;
  double total = 0;
  const int seeds = 200;
  for (std::uint64_t seed = 0; seed < seeds; ++seed) {
    total += 2.0 * connectivity_time(gen_process(n, seed)) / (n * std::log(n));
  }
  const double mean = total / seeds;
  EXPECT_GE(mean, 0.9);
  EXPECT_LE(mean, 1.1);
}

TEST(Snapshot, BoundsAndNesting) {
  const EdgeSequence seq = gen_process(8, 4);
  EXPECT_EQ(snapshot(seq, 0).edge_count(), 0U);
  EXPECT_EQ(snapshot(seq, seq.order.size()), Graph::complete(8));
  EXPECT_ERROR_KIND(snapshot(seq, seq.order.size() + 1), ErrorKind::kIndexOutOfRange);
  for (std::size_t m = 1; m <= seq.order.size(); ++m) {
    const Graph small = snapshot(seq, m - 1);
    const Graph big = snapshot(seq, m);
    for (const Edge& e : small.edges()) ASSERT_TRUE(big.has_edge(e.first, e.second));
  }
}

}  // namespace
}  // namespace acq
