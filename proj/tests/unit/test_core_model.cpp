#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "acq/types.hpp"
#include "expect_error.hpp"

namespace acq {
namespace {

TEST(KSubsetRank, FirstAndLastPairs) {
  const std::vector<Vertex> first{0, 1};
  const std::vector<Vertex> last{2, 3};
  EXPECT_EQ(rank_k_subset(first, 4, 2), 0U);
  EXPECT_EQ(rank_k_subset(last, 4, 2), 5U);
}

TEST(KSubsetRank, Roundtrip) {
  const std::vector<Vertex> s{1, 2, 4};
  EXPECT_EQ(unrank_k_subset(rank_k_subset(s, 6, 3), 6, 3), s);
}

TEST(KSubsetRank, ExhaustiveBijectionIsLexicographic) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(4, n); ++k) {
      const KSubsetIndex index(n, k);
      ASSERT_EQ(index.size(), binomial(n, k));
      std::vector<Vertex> prev;
      for (std::uint64_t rank = 0; rank < index.size(); ++rank) {
        const auto subset = index.unrank(rank);
        ASSERT_EQ(subset.size(), k);
        ASSERT_TRUE(std::is_sorted(subset.begin(), subset.end()));
        ASSERT_EQ(index.rank(subset), rank);
        ASSERT_EQ(index.rank_unchecked(subset), rank);
        if (rank > 0) {
          ASSERT_TRUE(prev < subset);
        }
        prev = subset;
      }
    }
  }
}

TEST(KSubsetRank, RejectsMalformedSubsets) {
  const std::vector<Vertex> unsorted{2, 1};
  const std::vector<Vertex> out_of_range{1, 4};
  const std::vector<Vertex> wrong_size{1};
  const std::vector<Vertex> repeated{1, 1};
  EXPECT_ERROR_KIND(rank_k_subset(unsorted, 4, 2), ErrorKind::kInvalidSubset);
  EXPECT_ERROR_KIND(rank_k_subset(out_of_range, 4, 2), ErrorKind::kInvalidSubset);
  EXPECT_ERROR_KIND(rank_k_subset(wrong_size, 4, 2), ErrorKind::kInvalidSubset);
  EXPECT_ERROR_KIND(rank_k_subset(repeated, 4, 2), ErrorKind::kInvalidSubset);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6U);
  EXPECT_EQ(binomial(30, 3), 4060U);
  EXPECT_EQ(binomial(5, 0), 1U);
  EXPECT_EQ(binomial(3, 5), 0U);
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_ERROR_KIND(Graph(3, {{1, 1}}), ErrorKind::kInvalidStructure);
  EXPECT_ERROR_KIND(Graph(3, {{0, 3}}), ErrorKind::kInvalidStructure);
}

TEST(Graph, CanonicalisesEdges) {
  const Graph g(3, {{2, 1}, {1, 2}, {0, 1}});
  ASSERT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(Graph, NamedFamilies) {
  EXPECT_EQ(Graph::complete(5).edge_count(), 10U);
  EXPECT_EQ(Graph::path(5).edge_count(), 4U);
  EXPECT_EQ(Graph::cycle(5).edge_count(), 5U);
  EXPECT_EQ(Graph::star(3).n(), 4U);
  EXPECT_TRUE(Graph::star(3).is_connected());
  EXPECT_FALSE(Graph(3, {{0, 1}}).is_connected());
}

TEST(Hypergraph, SortsAndDeduplicates) {
  const Hypergraph h(5, 3, {{2, 1, 0}, {0, 1, 2}, {4, 3, 2}});
  ASSERT_EQ(h.edge_count(), 2U);
  const std::vector<Vertex> e0(h.edge(0).begin(), h.edge(0).end());
  EXPECT_EQ(e0, (std::vector<Vertex>{0, 1, 2}));
  const std::vector<Vertex> probe{2, 3, 4};
  EXPECT_TRUE(h.has_edge(probe));
}

TEST(Hypergraph, RejectsWrongSizeOrRepeats) {
  EXPECT_ERROR_KIND(Hypergraph(5, 3, {{0, 1}}), ErrorKind::kInvalidStructure);
  EXPECT_ERROR_KIND(Hypergraph(5, 3, {{0, 1, 1}}), ErrorKind::kInvalidStructure);
  EXPECT_ERROR_KIND(Hypergraph(5, 3, {{0, 1, 5}}), ErrorKind::kInvalidStructure);
}

TEST(UnderlyingGraph, SingleEdgeGivesTriangle) {
  const Graph g = underlying_graph(Hypergraph(3, 3, {{0, 1, 2}}));
  EXPECT_EQ(g, Graph::complete(3));
}

TEST(UnderlyingGraph, GraphRoundTrip) {
  const Graph c = Graph::cycle(6);
  EXPECT_EQ(underlying_graph(Hypergraph(c)), c);
}

TEST(UnderlyingGraph, TwoTrianglesSharingAVertex) {
  const Graph g = underlying_graph(Hypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(g.edge_count(), 6U);
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(LoosePath, EdgesFollowTheIndexFormula) {
  EXPECT_TRUE(loose_path_edges(LoosePath({0}, 3)).empty());
  const auto two = loose_path_edges(LoosePath({0, 1, 2, 3, 4}, 3));
  EXPECT_EQ(two, (std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3, 4}}));
  const auto four = loose_path_edges(LoosePath({0, 1, 2, 3, 4, 5, 6, 7, 8}, 3));
  ASSERT_EQ(four.size(), 4U);
  for (std::size_t i = 0; i + 1 < four.size(); ++i) {
    std::vector<Vertex> common;
    std::set_intersection(four[i].begin(), four[i].end(), four[i + 1].begin(),
                          four[i + 1].end(), std::back_inserter(common));
    EXPECT_EQ(common.size(), 1U);
  }
}

TEST(LoosePath, RejectsBadLengthAndRepeats) {
  EXPECT_ERROR_KIND(LoosePath({0, 1, 2, 3}, 3), ErrorKind::kInvalidStructure);
  EXPECT_ERROR_KIND(LoosePath({0, 1, 0}, 3), ErrorKind::kInvalidStructure);
}

TEST(LoosePath, WindowInOneEdge) {
  const LoosePath p({0, 1, 2, 3, 4}, 3);
  EXPECT_TRUE(p.window_in_one_edge(0, 2));
  EXPECT_TRUE(p.window_in_one_edge(2, 4));
  EXPECT_FALSE(p.window_in_one_edge(1, 3));
}

TEST(GoodTree, ValidTreeAndImpliedEdges) {
  GoodTree t;
  t.n = 6;
  t.spine = {0, 1, 2};
  t.heavy = {{1, 3}};
  t.light = {{4, 3}, {5, 0}};
  EXPECT_NO_THROW(validate_good_tree(t));
  const Graph g = t.tree();
  EXPECT_EQ(g.edge_count(), 5U);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 4));
  EXPECT_TRUE(g.is_connected());
}

TEST(GoodTree, RejectsBrokenInvariants) {
  GoodTree t;
  t.n = 4;
  t.spine = {0, 1};
  t.heavy = {{0, 2}};
  t.light = {{3, 9}};
  EXPECT_ERROR_KIND(validate_good_tree(t), ErrorKind::kInvalidTree);
  t.light = {{2, 0}};
  EXPECT_ERROR_KIND(validate_good_tree(t), ErrorKind::kInvalidTree);
  t.light = {{3, 2}};
  t.heavy = {{5, 2}};
  EXPECT_ERROR_KIND(validate_good_tree(t), ErrorKind::kInvalidTree);
}

TEST(GoodTree, HostMustContainImpliedEdges) {
  GoodTree t;
  t.n = 3;
  t.spine = {0, 1};
  t.light = {{2, 0}};
  const Graph host(3, {{0, 1}, {1, 2}});
  EXPECT_ERROR_KIND(validate_good_tree(t, &host), ErrorKind::kInvalidTree);
}

TEST(GoodTree, PendantHangsOffALightVertex) {
  GoodTree t;
  t.n = 4;
  t.spine = {0, 1};
  t.light = {{2, 0}};
  t.pendant = {{3, 2}};
  EXPECT_NO_THROW(validate_good_tree(t));
  t.pendant = {{3, 1}};
  EXPECT_ERROR_KIND(validate_good_tree(t), ErrorKind::kInvalidTree);
}

TEST(Matching, Validity) {
  EXPECT_TRUE((Matching{{{0, 1}, {2, 3}}}).is_valid(4));
  EXPECT_FALSE((Matching{{{0, 1}, {1, 2}}}).is_valid(4));
  EXPECT_FALSE((Matching{{{0, 4}}}).is_valid(4));
  EXPECT_FALSE((Matching{{{2, 2}}}).is_valid(4));
}

}  // namespace
}  // namespace acq
