#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsat/graph.hpp"

namespace ramsat {

/// Circulant graph description: vertex set Z/nZ, x ~ y iff ||x - y|| is in `distances`,
/// where ||x|| = min(x mod n, n - x mod n).
struct CirculantSpec {
  int n = 0;
  std::vector<int> distances;  // sorted, unique, each in [1, n/2]

  /// Sorts, dedups and validates. Throws InvalidArgument on a distance outside [1, n/2].
  static CirculantSpec make(int n, std::vector<int> distances);

  /// "C(n; d1,d2,...)"
  std::string to_string() const;
  static CirculantSpec parse(std::string_view text);

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

/// Inclusive integer range [lo, hi]; empty when lo > hi.
std::vector<int> closed_range(int lo, int hi);

/// Circular distance ||x|| on Z/nZ.
int circular_norm(long long x, int n);

Graph circulant(const CirculantSpec& spec);

/// True if the labelled graph is invariant under v -> v+1 (mod n).
bool is_rotation_invariant(const Graph& g);

struct Construction {
  CirculantSpec spec;
  Graph graph;
};

/// Infinite R(4,t) family: n = 6t - 11, distances {t-2} ∪ [2t-3, 3t-6]. Requires t >= 4.
Construction construct_r4t(int t);

/// Conjectured R(3,t) family for odd t >= 17: n = 5t - 10, distances
/// [t-4, t-3] ∪ [t+1, (3t-9)/2] ∪ {(3t-5)/2} ∪ {2t-4}.
Construction construct_r3t(int t);

bool is_prime(long long p);

/// Nonzero quadratic residues mod p, sorted.
std::vector<int> quadratic_residues(int p);

/// Paley graph of prime order p ≡ 1 (mod 4), p >= 5.
Graph paley(int p);
CirculantSpec paley_spec(int p);

struct PaleyScanRow {
  int s = 0;
  int p = 0;
};

enum class PaleyCheck {
  /// Clique checks through one edge and one non-edge, justified by arc-transitivity
  /// and self-complementarity of Paley graphs.
  kShortcut,
  /// Full double-saturation verifier on each candidate.
  kFull,
};

/// Verdict for paley(p) as a doubly saturated R(s,s)-good graph via the symmetric shortcut.
bool paley_is_doubly_saturated(int p, int s);

/// Smallest prime p <= p_max with paley(p) doubly saturated R(s,s)-good. Candidates are
/// evaluated in parallel; the answer is the minimum regardless of completion order.
std::optional<PaleyScanRow> paley_scan(int s, int p_max, PaleyCheck check = PaleyCheck::kShortcut);
/// Reference scan: strictly sequential, ascending, stops at the first hit.
std::optional<PaleyScanRow> paley_scan_serial(int s, int p_max,
                                              PaleyCheck check = PaleyCheck::kShortcut);

}  // namespace ramsat
