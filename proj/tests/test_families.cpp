#include <gtest/gtest.h>

#include "chromadisc/families.hpp"
#include "chromadisc/graph_io.hpp"
#include "chromadisc/invariants.hpp"
#include "oracle.hpp"

using namespace chromadisc;
using namespace chromadisc::families;

TEST(Families, BasicShapes) {
  EXPECT_EQ(complete(5).edge_count(), 10);
  EXPECT_EQ(cycle(5).edge_count(), 5);
  EXPECT_EQ(path(4).edge_count(), 3);
  EXPECT_EQ(path(0).order(), 0);
  EXPECT_EQ(star(4).degree(0), 3);
  EXPECT_EQ(paw().edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
  EXPECT_EQ(empty(3).edge_count(), 0);
  EXPECT_EQ(cliques(std::vector<int>{2, 4}).edge_count(), 7);
  EXPECT_THROW(cycle(2), GraphError);
  EXPECT_THROW(cliques(std::vector<int>{0}), GraphError);
}

TEST(Mycielski, SizesAndChromaticNumber) {
  const int expected_order[] = {0, 0, 2, 5, 11, 23, 47};
  for (int k = 2; k <= 6; ++k) {
    Graph g = mycielski_k(k);
    EXPECT_EQ(g.order(), expected_order[k]);
    EXPECT_TRUE(is_triangle_free(g));
    if (k <= 5) EXPECT_EQ(chromatic_number(g).value, k);
  }
  Graph m3 = mycielski_k(3);  // a relabeled C5
  EXPECT_EQ(m3.edge_count(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(m3.degree(v), 2);
  EXPECT_TRUE(is_connected(m3));
  EXPECT_EQ(mycielski_k(4).edge_count(), 20);
  EXPECT_THROW(mycielski_k(1), GraphError);
  EXPECT_THROW(mycielski_k(7), GraphError);
  EXPECT_THROW(mycielski(complete(33)), GraphError);
}

TEST(Mycielski, Layout) {
  Graph m = mycielski(path(2));
  // v0-v1, u0-v1, u1-v0, w-u0, w-u1
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}}));
}

TEST(TightFamilies, ChromaticNumber) {
  for (auto [c, p] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    Graph g = tight_phi(c, p);
    EXPECT_EQ(g.order(), c + p * p);
    EXPECT_EQ(chromatic_number(g).value, c);
  }
  for (auto [c, p] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 2}}) {
    Graph g = tight_phi_hat(c, p);
    EXPECT_EQ(g.order(), c - p - 1 + (p + 1) * (p + 1));
    EXPECT_EQ(chromatic_number(g).value, c);
  }
  EXPECT_EQ(tight_phi_hat(5, 2).order(), 11);
  EXPECT_THROW(tight_phi(3, 3), GraphError);
  EXPECT_THROW(tight_phi_hat(3, 2), GraphError);
}

TEST(Gadgets, GtLayout) {
  Graph g = gt_gadget(4);
  EXPECT_EQ(g.order(), 16);
  EXPECT_EQ(chromatic_number(g).value, 4);
  EXPECT_EQ(clique_number(g), 4);
  // Copy 1 is 7..9, joined to clique vertex 1 only.
  EXPECT_TRUE(g.adjacent(7, 1));
  EXPECT_FALSE(g.adjacent(7, 0));
  EXPECT_TRUE(g.adjacent(7, 9));
  EXPECT_FALSE(g.adjacent(7, 10));
}

TEST(Gadgets, GrLayout) {
  Graph g = gr_gadget(4);
  EXPECT_EQ(g.order(), 8);
  EXPECT_FALSE(g.adjacent(4, 0));
  EXPECT_TRUE(g.adjacent(4, 1));
  EXPECT_FALSE(g.adjacent(4, 5));
  EXPECT_THROW(gr_gadget(3), GraphError);
}

TEST(Gadgets, NpHardLayout) {
  Graph g = nphard_gadget(path(3));
  EXPECT_EQ(g.order(), 9);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_FALSE(g.adjacent(0, 5));
  EXPECT_TRUE(g.adjacent(2, 8));
  EXPECT_EQ(clique_number(g), 6);
  EXPECT_EQ(nphard_gadget(cycle(5)).order(), 15);
  EXPECT_THROW(nphard_gadget(Graph(2)), GraphError);
  EXPECT_THROW(nphard_gadget(Graph(1)), GraphError);
}

TEST(Gnp, DeterministicAndPlausible) {
  Graph a = gnp(10, 0.5, 42);
  Graph b = gnp(10, 0.5, 42);
  EXPECT_EQ(write_graph6(a), write_graph6(b));
  EXPECT_GE(a.edge_count(), 10);
  EXPECT_LE(a.edge_count(), 35);
  EXPECT_NE(write_graph6(gnp(10, 0.5, 43)), write_graph6(a));
  EXPECT_EQ(gnp(10, 0.0, 1).edge_count(), 0);
  EXPECT_EQ(gnp(10, 1.0, 1).edge_count(), 45);
  // Smaller n gives the induced prefix: pairs are keyed by (i, j), not by order.
  EXPECT_EQ(induced_subgraph(gnp(12, 0.3, 5), VertexSet::all(8)).graph, gnp(8, 0.3, 5));
  EXPECT_THROW(gnp(10, 1.5, 1), GraphError);
}

TEST(Gnp, FixedReferenceValue) {
  // Pinned so that seeded corpora stay stable across releases.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Labeled, Enumeration) {
  EXPECT_EQ(labeled_count(0), 1U);
  EXPECT_EQ(labeled_count(6), 32768U);
  EXPECT_EQ(labeled(3, 0b111), complete(3));
  EXPECT_EQ(labeled(3, 0b001).edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(labeled(3, 0b010).edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_THROW(labeled(3, 8), GraphError);
  EXPECT_THROW(labeled_count(12), GraphError);
}

TEST(Build, SpecsAndClaims) {
  Instance c9 = build("cycle:9");
  EXPECT_EQ(c9.graph, cycle(9));
  EXPECT_EQ(c9.claims.size(), 3U);
  Instance nested = build("nphard:path:3");
  EXPECT_EQ(nested.graph.order(), 9);
  Instance g = build("gnp:10,0.5,42");
  EXPECT_EQ(g.graph, gnp(10, 0.5, 42));
  EXPECT_TRUE(g.claims.empty());
  EXPECT_EQ(build("paw").graph, paw());
  EXPECT_EQ(build("tight-phi:4,2").graph.order(), 8);
  EXPECT_EQ(build("cliques:4,4").claims.size(), 3U);
}

TEST(Build, RejectsBadSpecs) {
  EXPECT_THROW(build("bogus"), GraphError);
  EXPECT_THROW(build("cycle"), GraphError);
  EXPECT_THROW(build("cycle:x"), GraphError);
  EXPECT_THROW(build("cycle:5,6"), GraphError);
  EXPECT_THROW(build("paw:3"), GraphError);
  EXPECT_THROW(build("gnp:10,abc,1"), GraphError);
  EXPECT_THROW(build("gnp:10,0.5,-1"), GraphError);
  EXPECT_THROW(build("nphard:"), GraphError);
}

TEST(Build, NamesAreBuildable) {
  for (const auto& name : names()) {
    EXPECT_FALSE(name.empty());
  }
  EXPECT_EQ(names().size(), 14U);
}
