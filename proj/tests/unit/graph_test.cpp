#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramsat/canonical.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/graph.hpp"
#include "ramsat/union_find.hpp"

using namespace ramsat;

TEST(Graph, CycleAndCompleteBasics) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5u);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);
  EXPECT_TRUE(c5.adjacent(0, 4));
  EXPECT_FALSE(c5.adjacent(0, 2));

  const Graph k4 = complete_graph(4);
  EXPECT_TRUE(k4.is_complete());
  EXPECT_EQ(k4.edge_count(), 6u);
  EXPECT_TRUE(complement(k4).is_empty());
}

TEST(Graph, RejectsBadVerticesAndOrders) {
  EXPECT_THROW(Graph(0), InvalidArgument);
  EXPECT_THROW(Graph(Graph::kMaxVertices + 1), InvalidArgument);
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), InvalidArgument);
  EXPECT_THROW(b.add_edge(0, 3), InvalidArgument);
  EXPECT_THROW(b.add_edge(-1, 2), InvalidArgument);
}

TEST(Graph, ComplementIsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 70, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.edge_count() + complement(g).edge_count(),
              static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2);
  }
}

TEST(Graph, NeighbourhoodSetsExcludeThePair) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.common_neighbours(0, 2).to_vector(), std::vector<int>{1});
  EXPECT_EQ(c5.common_non_neighbours(0, 1).to_vector(), std::vector<int>{3});
  EXPECT_EQ(c5.neighbourhood(0).to_vector(), (std::vector<int>{1, 4}));
}

TEST(Graph, RelabelRequiresPermutation) {
  const Graph p3 = path_graph(3);
  const std::vector<int> pi{2, 0, 1};
  const Graph r = p3.relabeled(pi);
  EXPECT_TRUE(r.adjacent(2, 0));
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_FALSE(r.adjacent(2, 1));
  const std::vector<int> bad{0, 0, 1};
  EXPECT_THROW(p3.relabeled(bad), InvalidArgument);
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(write_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(Graph(3)), "B?");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6("Dhc\n"), cycle_graph(5));
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete_graph(4));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 20;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
  for (int n : {62, 63, 100, 300}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string text = write_graph6(g);
    if (n > 62) {
      EXPECT_EQ(text[0], '~');
    }
    EXPECT_EQ(parse_graph6(text), g);
  }
}

TEST(Graph6, MalformedInputIsRejected) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D"), ParseError);         // truncated
  EXPECT_THROW(parse_graph6("Dhcc"), ParseError);      // trailing byte
  EXPECT_THROW(parse_graph6("D h"), ParseError);       // byte below 63
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_THROW(parse_graph6("Bx"), ParseError);        // nonzero padding bits
  EXPECT_THROW(parse_graph6("~~??????"), ParseError);  // 36-bit header form
  EXPECT_THROW(parse_graph6("garbage"), ParseError);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    const auto pi = oracle::random_permutation(n, rng);
    const Graph h = g.relabeled(pi);
    const auto cg = canonical_form(g), ch = canonical_form(h);
    ASSERT_EQ(cg.canon_bytes, ch.canon_bytes) << write_graph6(g);
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
    EXPECT_EQ(upper_triangle_bytes(g.relabeled(cg.perm)), cg.canon_bytes);
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 4;
    const Graph a = oracle::random_graph(n, 0.5, rng), b = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(isomorphic(a, b), oracle::isomorphic(a, b)) << write_graph6(a) << ' ' << write_graph6(b);
  }
}

TEST(Canonical, RegularGraphs) {
  // Two non-isomorphic 3-regular graphs on 6 vertices: K_{3,3} and the prism.
  const Edge k33e[] = {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}};
  const Edge prism_e[] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  EXPECT_FALSE(isomorphic(from_edge_list(6, k33e), from_edge_list(6, prism_e)));
  EXPECT_TRUE(isomorphic(cycle_graph(7), cycle_graph(7).relabeled(std::vector<int>{3, 5, 0, 6, 1, 4, 2})));
}

TEST(UnionFind, MergesAndCounts) {
  UnionFind uf(6);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(2, 3));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(1, 3));
  EXPECT_EQ(uf.find(0), uf.find(2));
  EXPECT_NE(uf.find(4), uf.find(5));
  EXPECT_EQ(uf.component_size(3), 4u);
  EXPECT_EQ(uf.component_size(5), 1u);
}
