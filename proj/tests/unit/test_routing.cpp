#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "acq/engine.hpp"
#include "acq/rng.hpp"
#include "acq/strategies.hpp"
#include "expect_error.hpp"
#include "fixtures.hpp"

namespace acq {
namespace {

std::size_t max_distance(const Graph& tree, std::span<const Vertex> from,
                         std::span<const Vertex> to) {
  const auto adj = tree.adjacency();
  std::size_t best = 0;
  for (Vertex s : from) {
    std::vector<int> dist(tree.n(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : adj[queue[i]]) {
        if (dist[w] < 0) {
          dist[w] = dist[queue[i]] + 1;
          queue.push_back(w);
        }
      }
    }
    for (Vertex t : to) best = std::max<std::size_t>(best, dist[t]);
  }
  return best;
}

TEST(RouteOnTree, SameSetsNeedNoRounds) {
  const Graph t = Graph::path(6);
  const std::vector<Vertex> s{1, 4};
  EXPECT_TRUE(route_on_tree(t, s, s).empty());
}

TEST(RouteOnTree, PathWalkTakesExactlyDistanceRounds) {
  for (Vertex d = 1; d < 10; ++d) {
    const Graph t = Graph::path(10);
    const std::vector<Vertex> s{0};
    const std::vector<Vertex> target{d};
    const auto rounds = route_on_tree(t, s, target);
    EXPECT_EQ(rounds.size(), d);
    for (const auto& m : rounds) EXPECT_EQ(m.size(), 1U);
    SimState state(Hypergraph(t), 2);
    for (const auto& m : rounds) state.apply(m);
    EXPECT_EQ(state.position_of(0), d);
  }
}

TEST(RouteOnTree, RandomBoundAndExactDestination) {
  Rng rng(5);
  for (int c = 0; c < 500; ++c) {
    const std::size_t n = 2 + rng.uniform_below(99);
    const Graph tree = testing::random_tree(n, rng);
    const std::size_t size = 1 + rng.uniform_below(std::min<std::size_t>(10, n));
    auto ids = testing::shuffled_ids(n, rng);
    const std::vector<Vertex> sources(ids.begin(), ids.begin() + size);
    ids = testing::shuffled_ids(n, rng);
    const std::vector<Vertex> targets(ids.begin(), ids.begin() + size);
    const auto rounds = route_on_tree(tree, sources, targets);
    const std::size_t l = max_distance(tree, sources, targets);
    ASSERT_LE(rounds.size(), kRouteFactor * (l + 2 * (size - 1)) + kRouteSlack);
    SimState state(Hypergraph(tree), 2);
    for (const auto& m : rounds) state.apply(m);
    std::set<Vertex> landed;
    for (Vertex a : sources) landed.insert(state.position_of(a));
    ASSERT_EQ(landed, std::set<Vertex>(targets.begin(), targets.end()));
  }
}

TEST(RouteOnTree, Errors) {
  const std::vector<Vertex> one{0};
  const std::vector<Vertex> two{1, 2};
  EXPECT_ERROR_KIND(route_on_tree(Graph::path(4), one, two), ErrorKind::kSizeMismatch);
  EXPECT_ERROR_KIND(route_on_tree(Graph::cycle(4), one, one), ErrorKind::kNotATree);
  EXPECT_ERROR_KIND(route_on_tree(Graph(4, {{0, 1}, {2, 3}}), one, one), ErrorKind::kNotATree);
}

TEST(RouteOnLoosePath, IdentityAndReversal) {
  const LoosePath p({0, 1, 2, 3, 4}, 3);
  const std::vector<std::size_t> id{0, 1, 2, 3, 4};
  EXPECT_TRUE(route_on_loose_path(p, id).empty());
  const LoosePath two({0, 1}, 2);
  const std::vector<std::size_t> rev{1, 0};
  EXPECT_EQ(route_on_loose_path(two, rev).size(), 1U);
}

TEST(RouteOnLoosePath, RejectsNonBijection) {
  const LoosePath p({0, 1, 2}, 2);
  const std::vector<std::size_t> dup{0, 0, 1};
  const std::vector<std::size_t> short_target{0, 1};
  EXPECT_ERROR_KIND(route_on_loose_path(p, dup), ErrorKind::kInvalidTarget);
  EXPECT_ERROR_KIND(route_on_loose_path(p, short_target), ErrorKind::kInvalidTarget);
}

TEST(RouteOnLoosePath, RandomPermutations) {
  Rng rng(11);
  for (std::size_t len = 3; len <= 301; len += 14) {
    const LoosePath p = testing::random_loose_path(len, 3, len);
    const Hypergraph h = testing::path_hypergraph(p, len);
    std::vector<std::size_t> target(len);
    std::iota(target.begin(), target.end(), 0);
    rng.shuffle(std::span(target));
    const auto rounds = route_on_loose_path(p, target);
    EXPECT_LE(static_cast<double>(rounds.size()), kPathRouteFactor * len);
    SimState s(h, 2);
    for (const auto& m : rounds) s.apply(m);
    for (std::size_t i = 0; i < len; ++i) {
      ASSERT_EQ(s.position_of(p.ordering()[i]), p.ordering()[target[i]]);
    }
  }
}

}  // namespace
}  // namespace acq
