#include "ramsat/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <climits>

#include "ramsat/constructions.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/maxclique.hpp"

namespace ramsat {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kDoublySaturated: return "DoublySaturated";
    case Verdict::kNotGood: return "NotGood";
    case Verdict::kNotMaximal: return "NotMaximal";
    case Verdict::kNotMinimal: return "NotMinimal";
    case Verdict::kDegenerate: return "Degenerate";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view text) {
  for (Verdict v : {Verdict::kDoublySaturated, Verdict::kNotGood, Verdict::kNotMaximal,
                    Verdict::kNotMinimal, Verdict::kDegenerate})
    if (to_string(v) == text) return v;
  throw ParseError("unknown verdict '" + std::string(text) + "'");
}

std::string_view to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::kClique: return "clique";
    case Witness::Kind::kIndependentSet: return "independent_set";
    case Witness::Kind::kUnsaturatedNonEdge: return "unsaturated_non_edge";
    case Witness::Kind::kUnsaturatedEdge: return "unsaturated_edge";
    case Witness::Kind::kComplete: return "complete";
    case Witness::Kind::kEmpty: return "empty";
    case Witness::Kind::kTooSmall: return "too_small";
  }
  return "?";
}

void check_regime(int s, int t) {
  if (s < 3 || t < 3)
    throw InvalidArgument("parameters must satisfy s, t >= 3 (got s = " + std::to_string(s) +
                          ", t = " + std::to_string(t) + ")");
}

int ds_lower_bound(int s, int t) {
  check_regime(s, t);
  return 2 * s + 2 * t - 7;
}

namespace {

std::optional<std::vector<int>> find_structure(const Graph& g, int k, Relation rel, bool use_symmetry) {
  if (k > g.order()) return std::nullopt;
  CliqueSearch search(g);
  if (use_symmetry && is_rotation_invariant(g)) {
    // Every k-set can be rotated to contain vertex 0.
    VertexSet through_zero = VertexSet::full(static_cast<std::size_t>(g.order()));
    if (rel == Relation::kAdjacent) {
      through_zero &= g.row(0);
    } else {
      through_zero.subtract(g.row(0));
      through_zero.erase(0);
    }
    if (k == 1) return std::vector<int>{0};
    auto rest = search.find({k - 1, &through_zero, rel});
    if (!rest) return std::nullopt;
    rest->insert(rest->begin(), 0);
    return rest;
  }
  return search.find({k, nullptr, rel});
}

std::optional<Edge> first_unsaturated(const std::vector<Edge>& pairs, const Graph& g, int k, Relation rel,
                                      bool parallel) {
  const long count = static_cast<long>(pairs.size());
  auto saturated = [&](const Edge& e) {
    const VertexSet pool = rel == Relation::kAdjacent ? g.common_neighbours(e.first, e.second)
                                                      : g.common_non_neighbours(e.first, e.second);
    if (static_cast<int>(pool.size()) < k) return false;
    return CliqueSearch(g).find({k, &pool, rel}).has_value();
  };
  if (!parallel) {
    for (const Edge& e : pairs)
      if (!saturated(e)) return e;
    return std::nullopt;
  }
  std::atomic<long> first_fail{LONG_MAX};
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    if (i > first_fail.load(std::memory_order_relaxed)) continue;
    if (!saturated(pairs[static_cast<std::size_t>(i)])) {
      long cur = first_fail.load();
      while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
      }
    }
  }
  if (first_fail.load() == LONG_MAX) return std::nullopt;
  return pairs[static_cast<std::size_t>(first_fail.load())];
}

SaturationReport verify(const Graph& g, int s, int t, const VerifyOptions& opts) {
  check_regime(s, t);
  if (g.order() <= 2) return {Verdict::kDegenerate, Witness{Witness::Kind::kTooSmall, {}, {}}};
  if (g.is_complete()) return {Verdict::kDegenerate, Witness{Witness::Kind::kComplete, {}, {}}};
  if (g.is_empty()) return {Verdict::kDegenerate, Witness{Witness::Kind::kEmpty, {}, {}}};

  GoodnessReport good = is_good(g, s, t, opts);
  if (!good.good) return {Verdict::kNotGood, good.witness};

  if (auto pair = first_unsaturated(g.non_edges(), g, s - 2, Relation::kAdjacent, opts.parallel))
    return {Verdict::kNotMaximal, Witness{Witness::Kind::kUnsaturatedNonEdge, {}, pair}};
  if (auto pair = first_unsaturated(g.edges(), g, t - 2, Relation::kNonAdjacent, opts.parallel))
    return {Verdict::kNotMinimal, Witness{Witness::Kind::kUnsaturatedEdge, {}, pair}};
  return {Verdict::kDoublySaturated, std::nullopt};
}

}  // namespace

GoodnessReport is_good(const Graph& g, int s, int t, const VerifyOptions& opts) {
  check_regime(s, t);
  if (auto c = find_structure(g, s, Relation::kAdjacent, opts.use_rotation_symmetry))
    return {false, Witness{Witness::Kind::kClique, std::move(*c), {}}};
  if (auto i = find_structure(g, t, Relation::kNonAdjacent, opts.use_rotation_symmetry))
    return {false, Witness{Witness::Kind::kIndependentSet, std::move(*i), {}}};
  return {true, std::nullopt};
}

SaturationReport is_doubly_saturated(const Graph& g, int s, int t, const VerifyOptions& opts) {
  return verify(g, s, t, opts);
}

SaturationReport is_doubly_saturated_serial(const Graph& g, int s, int t) {
  return verify(g, s, t, VerifyOptions{.use_rotation_symmetry = false, .parallel = false});
}

bool witness_is_valid(const Graph& g, int s, int t, const SaturationReport& report) {
  if (report.verdict == Verdict::kDoublySaturated) return !report.witness.has_value();
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  const int n = g.order();
  auto in_range = [&](const std::vector<int>& vs) {
    return std::ranges::all_of(vs, [&](int v) { return v >= 0 && v < n; });
  };
  switch (w.kind) {
    case Witness::Kind::kClique:
      return report.verdict == Verdict::kNotGood && static_cast<int>(w.vertices.size()) == s &&
             in_range(w.vertices) && is_clique(g, w.vertices);
    case Witness::Kind::kIndependentSet:
      return report.verdict == Verdict::kNotGood && static_cast<int>(w.vertices.size()) == t &&
             in_range(w.vertices) && is_independent_set(g, w.vertices);
    case Witness::Kind::kUnsaturatedNonEdge: {
      if (report.verdict != Verdict::kNotMaximal || !w.pair) return false;
      auto [u, v] = *w.pair;
      if (u < 0 || v >= n || u >= v || g.adjacent(u, v)) return false;
      return clique_number(g.with_edge(u, v)) < s;
    }
    case Witness::Kind::kUnsaturatedEdge: {
      if (report.verdict != Verdict::kNotMinimal || !w.pair) return false;
      auto [u, v] = *w.pair;
      if (u < 0 || v >= n || u >= v || !g.adjacent(u, v)) return false;
      return independence_number(g.without_edge(u, v)) < t;
    }
    case Witness::Kind::kComplete: return report.verdict == Verdict::kDegenerate && g.is_complete();
    case Witness::Kind::kEmpty: return report.verdict == Verdict::kDegenerate && g.is_empty();
    case Witness::Kind::kTooSmall: return report.verdict == Verdict::kDegenerate && n <= 2;
  }
  return false;
}

std::optional<std::string> certified_degree_violation(const Graph& g, int s, int t) {
  const DegreeProfile p = degree_profile(g);
  const DegreeProfile q = degree_profile(complement(g));
  const int n = g.order();
  if (p.min_degree < 2 * (s - 2))
    return "min degree " + std::to_string(p.min_degree) + " < 2(s-2) = " + std::to_string(2 * (s - 2));
  if (q.min_degree < 2 * (t - 2))
    return "complement min degree " + std::to_string(q.min_degree) + " < 2(t-2) = " + std::to_string(2 * (t - 2));
  if (p.max_degree > n - 2) return "graph has a dominating vertex";
  if (q.max_degree > n - 2) return "complement has a dominating vertex";
  return std::nullopt;
}

}  // namespace ramsat
