#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsat/graph.hpp"

namespace ramsat {

/// Reads one graph6 per line, verifies each is R(s,t)-good and dedupes by canonical form.
/// Throws ParseError naming the line on malformed input, mixed orders, or a non-good graph
/// (with its clique / independent-set witness). Blank lines are skipped.
std::vector<Graph> load_good_classes(std::istream& graph6_lines, int s, int t);

struct PosetComponent {
  int id = 0;
  std::vector<std::size_t> members;  // indices into the class list
  /// edge count -> number of member classes with that many edges
  std::vector<std::pair<std::size_t, int>> edge_count_histogram;
};

struct ComponentSummary {
  int n = 0;
  int s = 0;
  int t = 0;
  std::size_t class_count = 0;
  std::vector<std::size_t> component_sizes;  // non-increasing
  std::vector<std::string> singleton_classes;  // graph6, ordered by canonical bytes
  std::size_t cover_edge_count = 0;
  std::vector<PosetComponent> components;    // ordered by size, then smallest member canon bytes
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) class indices

  nlohmann::json to_json() const;
};

struct PosetOptions {
  bool parallel = true;
};

/// Edge-addition cover relation over the given classes (all good, same n >= 3, pairwise
/// non-isomorphic), weakly connected components by union-find, and singleton components
/// cross-checked against the double-saturation verifier. An addition landing on a good
/// class missing from the input, duplicate classes, or a disagreement with the verifier
/// throw.
ComponentSummary build_poset(const std::vector<Graph>& classes, int s, int t, const PosetOptions& opts = {});

/// CSV "component_id,size,edge_count_histogram" with the histogram as "edges:count" pairs
/// separated by ';'. Header only for an empty summary.
std::string component_plot_csv(const ComponentSummary& summary);

}  // namespace ramsat
