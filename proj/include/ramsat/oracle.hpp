#pragma once

#include <cstdint>
#include <vector>

#include "ramsat/graph.hpp"

namespace ramsat {

/// Largest order the exhaustive enumerators accept: 2^C(8,2) = 2^28 labelled graphs.
inline constexpr int kOracleMaxOrder = 8;

/// Edge-bitmask representation for n <= 8: bit index follows lexicographic pair order
/// (0,1), (0,2), ..., (n-2,n-1).
using EdgeMask = std::uint32_t;

int pair_index(int n, int i, int j);
Graph graph_from_mask(int n, EdgeMask mask);
EdgeMask mask_from_graph(const Graph& g);

/// Definition-literal double-saturation test: checks goodness by enumerating every s- and
/// t-subset, then toggles every pair and re-checks goodness from scratch. Shares no code
/// with the branch-and-bound verifier. Requires n <= 8.
bool literal_doubly_saturated(const Graph& g, int s, int t);
bool literal_good(const Graph& g, int s, int t);

struct EnumerationOptions {
  bool parallel = true;
};

/// Every doubly saturated R(s,t)-good graph on n <= 8 vertices, one canonical
/// representative per isomorphism class, ordered by canonical bytes.
std::vector<Graph> brute_force_oracle(int n, int s, int t, const EnumerationOptions& opts = {});

/// Every R(s,t)-good graph on n <= 8 vertices, one canonical representative per class,
/// ordered by canonical bytes.
std::vector<Graph> enumerate_good_classes(int n, int s, int t, const EnumerationOptions& opts = {});

}  // namespace ramsat
