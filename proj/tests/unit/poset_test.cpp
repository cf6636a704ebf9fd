#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "ramsat/canonical.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/oracle.hpp"
#include "ramsat/poset.hpp"
#include "ramsat/saturation.hpp"

using namespace ramsat;

TEST(Poset, FiveVerticesThreeThree) {
  const auto classes = enumerate_good_classes(5, 3, 3);
  const ComponentSummary sum = build_poset(classes, 3, 3);
  EXPECT_EQ(sum.class_count, 1u);
  ASSERT_EQ(sum.singleton_classes.size(), 1u);
  EXPECT_TRUE(isomorphic(parse_graph6(sum.singleton_classes[0]), cycle_graph(5)));
  EXPECT_EQ(component_plot_csv(sum), "component_id,size,edge_count_histogram\n0,1,5:1\n");
}

TEST(Poset, SevenVerticesThreeFourHasNoSingletons) {
  const auto classes = enumerate_good_classes(7, 3, 4);
  ASSERT_FALSE(classes.empty());
  const ComponentSummary sum = build_poset(classes, 3, 4);
  EXPECT_TRUE(sum.singleton_classes.empty());
  EXPECT_EQ(std::accumulate(sum.component_sizes.begin(), sum.component_sizes.end(), std::size_t{0}), classes.size());
  EXPECT_TRUE(std::is_sorted(sum.component_sizes.rbegin(), sum.component_sizes.rend()));
  for (auto [lo, hi] : sum.covers) EXPECT_EQ(classes[hi].edge_count(), classes[lo].edge_count() + 1);
  EXPECT_EQ(build_poset(classes, 3, 4, PosetOptions{.parallel = false}).to_json(), sum.to_json());
}

TEST(Poset, SingletonsAreExactlyTheDoublySaturatedClasses) {
  for (int n = 5; n <= 8; ++n) {
    const auto classes = enumerate_good_classes(n, 3, 3 + (n > 5));
    const int t = 3 + (n > 5);
    const ComponentSummary sum = build_poset(classes, 3, t);
    std::size_t ds = 0;
    for (const auto& g : classes) ds += is_doubly_saturated(g, 3, t).doubly_saturated();
    EXPECT_EQ(sum.singleton_classes.size(), ds) << n;
  }
}

TEST(Poset, RejectsIncompleteOrDuplicateInput) {
  auto classes = enumerate_good_classes(6, 3, 4);
  ASSERT_GT(classes.size(), 2u);
  auto dup = classes;
  dup.push_back(classes[0].relabeled(std::vector<int>{5, 4, 3, 2, 1, 0}));
  EXPECT_THROW(build_poset(dup, 3, 4), InvalidArgument);
  // Dropping a class that some other class covers leaves a dangling addition.
  const ComponentSummary full = build_poset(classes, 3, 4);
  ASSERT_FALSE(full.covers.empty());
  auto missing = classes;
  missing.erase(missing.begin() + static_cast<long>(full.covers.front().second));
  EXPECT_THROW(build_poset(missing, 3, 4), InvalidArgument);
}

TEST(Poset, LoaderValidatesLines) {
  std::istringstream good("Dhc\n\nDhc\nDbg\n");  // C5, the same labelling again, then a relabelled C5
  EXPECT_EQ(load_good_classes(good, 3, 3).size(), 1u);
  std::istringstream mixed("Dhc\nC]\n");
  EXPECT_THROW(load_good_classes(mixed, 3, 3), ParseError);
  std::istringstream triangle("Bw\n");
  try {
    load_good_classes(triangle, 3, 3);
    FAIL() << "triangle accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
  std::istringstream garbage("Dhc\n!!\n");
  try {
    load_good_classes(garbage, 3, 3);
    FAIL() << "garbage accepted";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}
