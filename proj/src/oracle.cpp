#include "ramsat/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "ramsat/canonical.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/saturation.hpp"

namespace ramsat {
namespace {

void check_order(int n) {
  if (n < 1 || n > kOracleMaxOrder)
    throw InvalidArgument("exhaustive enumeration supports 1 <= n <= " + std::to_string(kOracleMaxOrder) +
                          ", got " + std::to_string(n));
}

// Edge masks of the complete graph on every k-subset of [n].
std::vector<EdgeMask> subset_pair_masks(int n, int k) {
  std::vector<EdgeMask> out;
  if (k > n) return out;
  for (unsigned sub = 0; sub < (1U << n); ++sub) {
    if (std::popcount(sub) != k) continue;
    EdgeMask m = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((sub >> i & 1U) && (sub >> j & 1U)) m |= EdgeMask{1} << pair_index(n, i, j);
    out.push_back(m);
  }
  return out;
}

struct LiteralChecker {
  int n;
  int pairs;
  std::vector<EdgeMask> cliques;       // s-subsets
  std::vector<EdgeMask> independents;  // t-subsets

  LiteralChecker(int n_, int s, int t)
      : n(n_), pairs(n_ * (n_ - 1) / 2), cliques(subset_pair_masks(n_, s)), independents(subset_pair_masks(n_, t)) {}

  bool good(EdgeMask g) const {
    for (EdgeMask c : cliques)
      if ((g & c) == c) return false;
    for (EdgeMask i : independents)
      if ((g & i) == 0) return false;
    return true;
  }

  bool doubly_saturated(EdgeMask g) const {
    const EdgeMask full = pairs == 32 ? ~EdgeMask{0} : (EdgeMask{1} << pairs) - 1;
    if (n <= 2 || g == 0 || g == full) return false;
    if (!good(g)) return false;
    for (int b = 0; b < pairs; ++b)
      if (good(g ^ (EdgeMask{1} << b))) return false;
    return true;
  }
};

std::vector<Graph> dedupe(int n, std::vector<EdgeMask> masks) {
  std::map<std::vector<std::uint8_t>, Graph> classes;
  for (EdgeMask m : masks) {
    const Graph g = graph_from_mask(n, m);
    CanonicalLabeling c = canonical_form(g);
    if (!classes.contains(c.canon_bytes)) classes.emplace(std::move(c.canon_bytes), g.relabeled(c.perm));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [bytes, g] : classes) out.push_back(std::move(g));
  return out;
}

template <class Pred>
std::vector<EdgeMask> collect(int n, const Pred& keep, bool parallel) {
  const int pairs = n * (n - 1) / 2;
  const long long total = 1LL << pairs;
  std::vector<EdgeMask> out;
  if (!parallel) {
    for (long long m = 0; m < total; ++m)
      if (keep(static_cast<EdgeMask>(m))) out.push_back(static_cast<EdgeMask>(m));
    return out;
  }
#pragma omp parallel
  {
    std::vector<EdgeMask> local;
#pragma omp for schedule(static) nowait
    for (long long m = 0; m < total; ++m)
      if (keep(static_cast<EdgeMask>(m))) local.push_back(static_cast<EdgeMask>(m));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::ranges::sort(out);
  return out;
}

}  // namespace

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Graph graph_from_mask(int n, EdgeMask mask) {
  check_order(n);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask >> pair_index(n, i, j) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

EdgeMask mask_from_graph(const Graph& g) {
  check_order(g.order());
  EdgeMask m = 0;
  for (auto [i, j] : g.edges()) m |= EdgeMask{1} << pair_index(g.order(), i, j);
  return m;
}

bool literal_good(const Graph& g, int s, int t) {
  check_regime(s, t);
  return LiteralChecker(g.order(), s, t).good(mask_from_graph(g));
}

bool literal_doubly_saturated(const Graph& g, int s, int t) {
  check_regime(s, t);
  return LiteralChecker(g.order(), s, t).doubly_saturated(mask_from_graph(g));
}

std::vector<Graph> brute_force_oracle(int n, int s, int t, const EnumerationOptions& opts) {
  check_regime(s, t);
  check_order(n);
  const LiteralChecker checker(n, s, t);
  return dedupe(n, collect(n, [&](EdgeMask m) { return checker.doubly_saturated(m); }, opts.parallel));
}

std::vector<Graph> enumerate_good_classes(int n, int s, int t, const EnumerationOptions& opts) {
  check_regime(s, t);
  check_order(n);
  const LiteralChecker checker(n, s, t);
  return dedupe(n, collect(n, [&](EdgeMask m) { return checker.good(m); }, opts.parallel));
}

}  // namespace ramsat
