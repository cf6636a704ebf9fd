#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ramsat/canonical.hpp"
#include "ramsat/constructions.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/maxclique.hpp"

using namespace ramsat;

TEST(MaxClique, SmallNamedGraphs) {
  EXPECT_EQ(clique_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(clique_number(complete_graph(4)), 4);
  EXPECT_EQ(independence_number(Graph(3)), 3);
  EXPECT_EQ(clique_number(Graph(1)), 1);
  EXPECT_EQ(independence_number(circulant(CirculantSpec::make(13, {1, 5}))), 4);
}

TEST(MaxClique, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 10;
    const Graph g = oracle::random_graph(n, density(rng), rng);
    const int w = clique_number(g);
    ASSERT_EQ(w, oracle::clique_number(g)) << write_graph6(g);
    EXPECT_EQ(independence_number(g), oracle::independence_number(g)) << write_graph6(g);
    EXPECT_EQ(independence_number(g), clique_number(complement(g)));
    const auto c = maximum_clique(g);
    EXPECT_EQ(static_cast<int>(c.size()), w);
    EXPECT_TRUE(is_clique(g, c));
    EXPECT_TRUE(is_independent_set(g, maximum_independent_set(g)));
    EXPECT_TRUE(has_clique(g, w));
    if (w < n) {
      EXPECT_FALSE(has_clique(g, w + 1));
    }
  }
}

TEST(MaxClique, LargerRandomGraphsAgreeAcrossRelations) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(60, 0.5, rng);
    EXPECT_EQ(independence_number(g), clique_number(complement(g)));
  }
}

TEST(MaxClique, EdgeAdditionIsMonotone) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(12, 0.4, rng);
    const auto gaps = g.non_edges();
    if (gaps.empty()) continue;
    const auto [u, v] = gaps[trial % gaps.size()];
    const int before = clique_number(g);
    const int after = clique_number(g.with_edge(u, v));
    EXPECT_GE(after, before);
    EXPECT_LE(after, before + 1);
  }
}

TEST(MaxClique, SubsetRestriction) {
  const Graph p29 = paley(29);
  EXPECT_EQ(clique_number(p29), 4);
  // Common neighbourhood of an adjacent pair in a Paley graph holds no 3-clique for p = 29.
  const VertexSet common = p29.common_neighbours(0, 1);
  EXPECT_FALSE(has_clique(p29, 3, &common));
  EXPECT_TRUE(has_clique(p29, 2, &common));
  const auto found = find_clique(p29, 4);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(is_clique(p29, *found));

  VertexSet tiny(29);
  tiny.insert(0);
  tiny.insert(1);
  EXPECT_FALSE(find_clique(p29, 3, &tiny).has_value());
  EXPECT_THROW(has_clique(p29, 0), InvalidArgument);
  EXPECT_THROW(has_clique(p29, 30), InvalidArgument);
}

TEST(MaxClique, IndependentSetsWithinSubset) {
  const Graph c7 = cycle_graph(7);
  const VertexSet all = VertexSet::full(7);
  EXPECT_TRUE(has_independent_set(c7, 3, &all));
  EXPECT_FALSE(has_independent_set(c7, 4, &all));
  const auto s = find_independent_set(c7, 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_independent_set(c7, *s));
}

TEST(Circulant, SpecParsingAndValidation) {
  const auto spec = CirculantSpec::make(13, {5, 1, 5});
  EXPECT_EQ(spec.distances, (std::vector<int>{1, 5}));
  EXPECT_EQ(spec.to_string(), "C(13; 1,5)");
  EXPECT_EQ(CirculantSpec::parse("C(13; 1,5)"), spec);
  EXPECT_THROW(CirculantSpec::make(13, {7}), InvalidArgument);
  EXPECT_THROW(CirculantSpec::make(13, {0}), InvalidArgument);
  EXPECT_THROW(CirculantSpec::parse("C(13 1,5)"), std::exception);
  EXPECT_EQ(circular_norm(-3, 10), 3);
  EXPECT_EQ(circular_norm(7, 10), 3);
  EXPECT_TRUE(closed_range(4, 3).empty());
}

TEST(Circulant, RotationInvariance) {
  const Graph g = circulant(CirculantSpec::make(11, {1, 3}));
  EXPECT_TRUE(is_rotation_invariant(g));
  EXPECT_FALSE(is_rotation_invariant(path_graph(5)));
  for (int v = 0; v < 11; ++v) EXPECT_EQ(g.degree(v), 4);
}

TEST(Circulant, MultiplierIsomorphisms) {
  const Graph a = circulant(CirculantSpec::make(13, {2, 5, 6}));
  const Graph b = circulant(CirculantSpec::make(13, {1, 3, 4}));
  EXPECT_TRUE(oracle::multiplier_maps(b, a, 2));
  EXPECT_TRUE(isomorphic(a, b));

  const Construction r45 = construct_r4t(5);
  EXPECT_EQ(r45.spec, CirculantSpec::make(19, {3, 7, 8, 9}));
  const Graph target = circulant(CirculantSpec::make(19, {4, 5, 6, 8}));
  bool mapped = false;
  for (int m = 1; m < 19 && !mapped; ++m) mapped = oracle::multiplier_maps(r45.graph, target, m);
  EXPECT_TRUE(mapped);
  EXPECT_TRUE(isomorphic(r45.graph, target));
}

TEST(Constructions, FamilyShapes) {
  for (int t = 4; t <= 12; ++t) {
    const Construction c = construct_r4t(t);
    EXPECT_EQ(c.graph.order(), 6 * t - 11);
    EXPECT_EQ(c.spec.distances.front(), t - 2);
    EXPECT_EQ(c.spec.distances.back(), 3 * t - 6);
  }
  EXPECT_THROW(construct_r4t(3), InvalidArgument);
  const Construction c17 = construct_r3t(17);
  EXPECT_EQ(c17.graph.order(), 75);
  EXPECT_EQ(c17.spec, CirculantSpec::make(75, {13, 14, 18, 19, 20, 21, 23, 30}));
  EXPECT_THROW(construct_r3t(18), InvalidArgument);
  EXPECT_THROW(construct_r3t(15), InvalidArgument);
}

TEST(Paley, StructuralProperties) {
  EXPECT_EQ(quadratic_residues(13), (std::vector<int>{1, 3, 4, 9, 10, 12}));
  const Graph p13 = paley(13);
  for (int v = 0; v < 13; ++v) EXPECT_EQ(p13.degree(v), 6);
  EXPECT_TRUE(isomorphic(paley(29), complement(paley(29))));
  EXPECT_THROW(paley(7), InvalidArgument);
  EXPECT_THROW(paley(15), InvalidArgument);
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(1));
}

TEST(Paley, ScanSmallRowsSerialMatchesParallel) {
  for (int s = 3; s <= 5; ++s) {
    const auto par = paley_scan(s, 60);
    const auto ser = paley_scan_serial(s, 60);
    const auto full = paley_scan_serial(s, 60, PaleyCheck::kFull);
    ASSERT_TRUE(par && ser && full);
    EXPECT_EQ(par->p, ser->p);
    EXPECT_EQ(full->p, ser->p);
  }
  EXPECT_EQ(paley_scan(3, 60)->p, 5);
  EXPECT_EQ(paley_scan(4, 60)->p, 13);
  EXPECT_EQ(paley_scan(5, 60)->p, 29);
  EXPECT_FALSE(paley_scan(5, 28).has_value());
  EXPECT_FALSE(paley_is_doubly_saturated(5, 8));  // clique size beyond the order
}
