#include <gtest/gtest.h>

#include "chromadisc/characterize.hpp"
#include "chromadisc/families.hpp"
#include "oracle.hpp"

using namespace chromadisc;

TEST(Multipartite, Examples) {
  EXPECT_TRUE(is_complete_multipartite(families::complete(5)));
  EXPECT_TRUE(is_complete_multipartite(families::cycle(4)));
  EXPECT_TRUE(is_complete_multipartite(families::star(5)));
  EXPECT_TRUE(is_complete_multipartite(Graph(3)));
  EXPECT_TRUE(is_complete_multipartite(Graph(0)));
  EXPECT_FALSE(is_complete_multipartite(families::path(4)));
  EXPECT_FALSE(is_complete_multipartite(disjoint_union(families::complete(2), Graph(1))));
}

TEST(PawFree, Examples) {
  EXPECT_FALSE(is_paw_free(families::paw()));
  EXPECT_TRUE(is_paw_free(families::complete(5)));
  EXPECT_TRUE(is_paw_free(families::cycle(5)));
  EXPECT_FALSE(is_paw_free(families::gr_gadget(4)));
}

TEST(OddHole, Examples) {
  EXPECT_TRUE(has_odd_hole(families::cycle(5)));
  EXPECT_TRUE(has_odd_hole(families::cycle(7)));
  EXPECT_FALSE(has_odd_hole(families::cycle(6)));
  EXPECT_FALSE(has_odd_hole(families::complete(6)));
  EXPECT_TRUE(has_odd_hole(families::mycielski_k(4)));
  EXPECT_FALSE(has_odd_hole(families::cycle(3)));
}

TEST(Perfect, Examples) {
  EXPECT_FALSE(is_perfect_small(families::cycle(5)));
  EXPECT_FALSE(is_perfect_small(complement(families::cycle(7))));
  EXPECT_TRUE(is_perfect_small(families::cycle(6)));
  EXPECT_TRUE(is_perfect_small(families::paw()));
  EXPECT_THROW(is_perfect_small(Graph(13)), GraphError);
  EXPECT_TRUE(is_perfect_small(Graph(13), 13));
}

TEST(Recognizers, MatchOracleOnAllGraphsUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t code = 0; code < families::labeled_count(n); ++code) {
      Graph g = families::labeled(n, code);
      ASSERT_EQ(is_complete_multipartite(g), oracle::complete_multipartite(g));
      ASSERT_EQ(complement_is_union_of_cliques(g), has_no_induced_k1_k2(g));
      ASSERT_EQ(is_paw_free(g), !oracle::has_paw(g));
      ASSERT_EQ(is_perfect_small(g), oracle::perfect(g)) << "n=" << n << " code=" << code;
      bool expected = true;
      for (Mask comp : oracle::component_masks(g)) {
        InducedSubgraph h = induced_subgraph(g, VertexSet(comp));
        expected = expected && (oracle::bipartite(g, comp) ||
                                oracle::complete_multipartite(h.graph));
      }
      ASSERT_EQ(phi_hat_zero_characterization(g), expected);
    }
  }
}

TEST(Perfect, OddHoleSearchOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = families::gnp(8, 0.45, seed);
    EXPECT_EQ(is_perfect_small(g), oracle::perfect(g)) << "seed " << seed;
  }
}
