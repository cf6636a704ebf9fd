#pragma once

#include <cstdint>
#include <vector>

#include "ramsat/graph.hpp"

namespace ramsat {

/// perm[v] is the canonical label of vertex v. canon_bytes is a two-byte big-endian order
/// followed by the upper triangle of the relabelled adjacency matrix, row-major, packed
/// MSB-first. Equal canon_bytes <=> isomorphic graphs.
struct CanonicalLabeling {
  std::vector<int> perm;
  std::vector<std::uint8_t> canon_bytes;
};

struct CanonicalOptions {
  /// Search-tree node budget applied above the guaranteed size (n > 64).
  std::uint64_t node_budget_above_ceiling = 2'000'000;
};

inline constexpr int kCanonicalGuaranteedOrder = 64;

/// Individualisation-refinement canonical labelling: equitable partition refinement, branching
/// on the first smallest non-singleton cell, with pruning by discovered automorphisms.
/// For n > 64 the search is best-effort and throws LimitExceeded when the budget runs out.
CanonicalLabeling canonical_form(const Graph& g, const CanonicalOptions& opts = {});

/// Graph encoded by canon_bytes (i.e. g relabelled by the canonical permutation).
Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// Packs the upper triangle of g exactly as canon_bytes does (without relabelling).
std::vector<std::uint8_t> upper_triangle_bytes(const Graph& g);

}  // namespace ramsat
