#include "ramsat/maxclique.hpp"

#include <algorithm>
#include <string>

#include "ramsat/errors.hpp"

namespace ramsat {
namespace {

// Compact re-indexed instance: local vertex i is `label[i]` in the source graph, and the
// local bit order is the branching order.
struct LocalInstance {
  int m = 0;
  std::size_t stride = 0;
  std::vector<int> label;
  std::vector<Word> adj;

  std::span<const Word> row(int i) const {
    return {adj.data() + static_cast<std::size_t>(i) * stride, stride};
  }
};

LocalInstance build_instance(const Graph& g, const VertexSet* subset, Relation relation) {
  std::vector<int> members;
  if (subset) {
    members = subset->to_vector();
    for (int v : members)
      if (v >= g.order()) throw InvalidArgument("clique subset refers to vertices outside the graph");
  } else {
    members.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) members[static_cast<std::size_t>(v)] = v;
  }
  const int m = static_cast<int>(members.size());
  const bool flip = relation == Relation::kNonAdjacent;
  auto related = [&](int a, int b) {
    return a != b && g.adjacent(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)]) != flip;
  };

  // Degeneracy ordering: peel minimum-degree vertices (lowest index on ties); the last
  // peeled vertex goes first in branching order.
  std::vector<int> degree(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (related(a, b)) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
      }
  std::vector<bool> removed(static_cast<std::size_t>(m), false);
  std::vector<int> peel;
  peel.reserve(static_cast<std::size_t>(m));
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int a = 0; a < m; ++a)
      if (!removed[static_cast<std::size_t>(a)] &&
          (best < 0 || degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(best)]))
        best = a;
    removed[static_cast<std::size_t>(best)] = true;
    peel.push_back(best);
    for (int b = 0; b < m; ++b)
      if (!removed[static_cast<std::size_t>(b)] && related(best, b)) --degree[static_cast<std::size_t>(b)];
  }
  std::ranges::reverse(peel);

  LocalInstance inst;
  inst.m = m;
  inst.stride = words_for(static_cast<std::size_t>(std::max(m, 1)));
  inst.label.resize(static_cast<std::size_t>(m));
  inst.adj.assign(inst.stride * static_cast<std::size_t>(std::max(m, 1)), 0);
  for (int i = 0; i < m; ++i) inst.label[static_cast<std::size_t>(i)] = members[static_cast<std::size_t>(peel[static_cast<std::size_t>(i)])];
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (related(peel[static_cast<std::size_t>(i)], peel[static_cast<std::size_t>(j)])) {
        bits::set({inst.adj.data() + static_cast<std::size_t>(i) * inst.stride, inst.stride}, static_cast<std::size_t>(j));
        bits::set({inst.adj.data() + static_cast<std::size_t>(j) * inst.stride, inst.stride}, static_cast<std::size_t>(i));
      }
  return inst;
}

class BranchAndBound {
 public:
  BranchAndBound(const LocalInstance& inst, CliqueStats& stats) : inst_(inst), stats_(stats) {
    const auto depth_cap = static_cast<std::size_t>(inst.m) + 2;
    candidates_.assign(depth_cap * inst.stride, 0);
    order_.resize(depth_cap);
    colour_.resize(depth_cap);
    scratch_u_.assign(inst.stride, 0);
    scratch_q_.assign(inst.stride, 0);
  }

  // decision: stop as soon as a clique of `target` vertices exists.
  // optimisation: raise `target` to best+1 whenever a larger clique is recorded.
  std::vector<int> run(int target, bool decision) {
    decision_ = decision;
    target_ = target;
    found_ = false;
    best_.clear();
    current_.clear();
    if (inst_.m == 0) return {};
    auto root = level(0);
    for (int i = 0; i < inst_.m; ++i) bits::set(root, static_cast<std::size_t>(i));
    expand(0);
    std::vector<int> out;
    for (int i : best_) out.push_back(inst_.label[static_cast<std::size_t>(i)]);
    std::ranges::sort(out);
    return out;
  }

  bool found() const { return found_; }

 private:
  std::span<Word> level(std::size_t depth) {
    return {candidates_.data() + depth * inst_.stride, inst_.stride};
  }

  // Greedy sequential colouring of P in bit order. Only vertices whose colour can still
  // reach the target are recorded; the rest can never be branched on profitably.
  void colour_classes(std::size_t depth, int min_colour) {
    auto& order = order_[depth];
    auto& colour = colour_[depth];
    order.clear();
    colour.clear();
    std::ranges::copy(level(depth), scratch_u_.begin());
    int c = 0;
    while (!bits::none(scratch_u_)) {
      ++c;
      std::ranges::copy(scratch_u_, scratch_q_.begin());
      std::size_t v = bits::next(scratch_q_, 0);
      while (v < static_cast<std::size_t>(inst_.m)) {
        bits::reset(scratch_u_, v);
        auto nv = inst_.row(static_cast<int>(v));
        for (std::size_t w = 0; w < inst_.stride; ++w) scratch_q_[w] &= ~nv[w];
        bits::reset(scratch_q_, v);
        if (c >= min_colour) {
          order.push_back(static_cast<int>(v));
          colour.push_back(c);
        }
        v = bits::next(scratch_q_, v + 1);
      }
    }
  }

  void record() {
    if (static_cast<int>(current_.size()) > static_cast<int>(best_.size())) best_ = current_;
    if (static_cast<int>(current_.size()) >= target_) {
      if (decision_) {
        found_ = true;
      } else {
        target_ = static_cast<int>(best_.size()) + 1;
      }
    }
  }

  void expand(std::size_t depth) {
    ++stats_.nodes;
    const int have = static_cast<int>(current_.size());
    colour_classes(depth, std::max(1, target_ - have));
    auto P = level(depth);
    auto next = level(depth + 1);
    const auto& order = order_[depth];
    const auto& colour = colour_[depth];
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (have + colour[idx] < target_) return;
      const int v = order[idx];
      current_.push_back(v);
      auto nv = inst_.row(v);
      bool any = false;
      for (std::size_t w = 0; w < inst_.stride; ++w) {
        next[w] = P[w] & nv[w];
        any |= next[w] != 0;
      }
      if (any && !(decision_ && have + 1 >= target_)) {
        expand(depth + 1);
      } else {
        record();
      }
      if (decision_ && found_) {
        if (best_.size() < current_.size()) best_ = current_;
        return;
      }
      current_.pop_back();
      bits::reset(P, static_cast<std::size_t>(v));
    }
  }

  const LocalInstance& inst_;
  CliqueStats& stats_;
  std::vector<Word> candidates_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<int>> colour_;
  std::vector<Word> scratch_u_;
  std::vector<Word> scratch_q_;
  std::vector<int> current_;
  std::vector<int> best_;
  int target_ = 1;
  bool decision_ = false;
  bool found_ = false;
};

}  // namespace

std::vector<int> CliqueSearch::maximum(const VertexSet* subset, Relation relation) {
  const LocalInstance inst = build_instance(g_, subset, relation);
  BranchAndBound bb(inst, stats_);
  return bb.run(1, false);
}

std::optional<std::vector<int>> CliqueSearch::find(const CliqueQuery& query) {
  if (query.target_k < 1 || query.target_k > g_.order())
    throw InvalidArgument("clique size " + std::to_string(query.target_k) + " outside [1, " +
                          std::to_string(g_.order()) + "]");
  const LocalInstance inst = build_instance(g_, query.subset, query.relation);
  if (inst.m < query.target_k) return std::nullopt;
  BranchAndBound bb(inst, stats_);
  auto witness = bb.run(query.target_k, true);
  if (!bb.found()) return std::nullopt;
  return witness;
}

int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

std::vector<int> maximum_clique(const Graph& g) { return CliqueSearch(g).maximum(); }

int independence_number(const Graph& g) { return static_cast<int>(maximum_independent_set(g).size()); }

std::vector<int> maximum_independent_set(const Graph& g) {
  return CliqueSearch(g).maximum(nullptr, Relation::kNonAdjacent);
}

std::optional<std::vector<int>> find_clique(const Graph& g, int k, const VertexSet* subset) {
  return CliqueSearch(g).find({k, subset, Relation::kAdjacent});
}

bool has_clique(const Graph& g, int k, const VertexSet* subset) {
  return find_clique(g, k, subset).has_value();
}

std::optional<std::vector<int>> find_independent_set(const Graph& g, int k, const VertexSet* subset) {
  return CliqueSearch(g).find({k, subset, Relation::kNonAdjacent});
}

bool has_independent_set(const Graph& g, int k, const VertexSet* subset) {
  return find_independent_set(g, k, subset).has_value();
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || !g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) return false;
  return true;
}

}  // namespace ramsat
