#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsat/graph.hpp"

namespace ramsat {

enum class Verdict { kDoublySaturated, kNotGood, kNotMaximal, kNotMinimal, kDegenerate };

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view text);

/// Why a graph failed. Every kind is checkable against the graph by direct inspection:
///   kClique             - `vertices` is an s-clique
///   kIndependentSet     - `vertices` is an independent t-set
///   kUnsaturatedNonEdge - adding `pair` creates no s-clique
///   kUnsaturatedEdge    - removing `pair` creates no independent t-set
///   kComplete / kEmpty  - G or its complement is complete
///   kTooSmall           - n <= 2 (both degenerate at once)
struct Witness {
  enum class Kind { kClique, kIndependentSet, kUnsaturatedNonEdge, kUnsaturatedEdge, kComplete, kEmpty, kTooSmall };
  Kind kind = Kind::kClique;
  std::vector<int> vertices;
  std::optional<Edge> pair;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string_view to_string(Witness::Kind k);

struct GoodnessReport {
  bool good = false;
  std::optional<Witness> witness;
};

struct SaturationReport {
  Verdict verdict = Verdict::kDegenerate;
  std::optional<Witness> witness;

  bool doubly_saturated() const { return verdict == Verdict::kDoublySaturated; }
  friend bool operator==(const SaturationReport&, const SaturationReport&) = default;
};

struct VerifyOptions {
  /// When the labelled graph is rotation-invariant (circulant), search for cliques and
  /// independent sets through vertex 0 only. Exact by vertex-transitivity.
  bool use_rotation_symmetry = true;
  /// Evaluate per-pair saturation checks with OpenMP.
  bool parallel = true;
};

/// R(s,t)-goodness: no s-clique and no independent t-set. Requires s, t >= 3.
GoodnessReport is_good(const Graph& g, int s, int t, const VerifyOptions& opts = {});

/// Double-saturation verifier. Order: degeneracy, goodness, maximality (every non-edge has
/// an (s-2)-clique in its common neighbourhood), minimality (every edge has an independent
/// (t-2)-set among its common non-neighbours). The first failure is reported; among pairs
/// the lexicographically smallest failing pair wins regardless of scheduling.
SaturationReport is_doubly_saturated(const Graph& g, int s, int t, const VerifyOptions& opts = {});

/// Serial reference path: no symmetry reduction, no threads.
SaturationReport is_doubly_saturated_serial(const Graph& g, int s, int t);

/// Re-checks a failure witness against the graph from scratch.
bool witness_is_valid(const Graph& g, int s, int t, const SaturationReport& report);

/// Lower bound DS(s,t) >= 2s + 2t - 7.
int ds_lower_bound(int s, int t);

/// Checks the minimum-degree and no-dominating-vertex consequences that every doubly
/// saturated R(s,t)-good graph must satisfy. Returns a description of the first violated
/// property, or nullopt.
std::optional<std::string> certified_degree_violation(const Graph& g, int s, int t);

void check_regime(int s, int t);

}  // namespace ramsat
