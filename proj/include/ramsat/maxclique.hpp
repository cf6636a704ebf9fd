#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsat/bitset.hpp"
#include "ramsat/graph.hpp"

namespace ramsat {

/// Which relation the search treats as "adjacent": cliques of g, or cliques of its
/// complement (independent sets of g). The complement is never materialised.
enum class Relation { kAdjacent, kNonAdjacent };

struct CliqueQuery {
  int target_k = 1;
  /// Restrict the search to these vertices; the whole graph when absent.
  const VertexSet* subset = nullptr;
  Relation relation = Relation::kAdjacent;
};

struct CliqueStats {
  std::uint64_t nodes = 0;
};

/// Branch-and-bound with greedy colouring bounds over bitset rows (BBMC/MCS family).
/// Vertices are pre-ordered by degeneracy with ties to the lowest index, so results and
/// witnesses are reproducible.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  /// Largest clique (or independent set under kNonAdjacent) within `subset`.
  std::vector<int> maximum(const VertexSet* subset = nullptr,
                           Relation relation = Relation::kAdjacent);
  /// First clique of size query.target_k found, with early exit. Returns nullopt when
  /// none exists. Throws InvalidArgument if target_k is outside [1, n].
  std::optional<std::vector<int>> find(const CliqueQuery& query);

  const CliqueStats& stats() const { return stats_; }

 private:
  const Graph& g_;
  CliqueStats stats_;
};

int clique_number(const Graph& g);
std::vector<int> maximum_clique(const Graph& g);
int independence_number(const Graph& g);
std::vector<int> maximum_independent_set(const Graph& g);

bool has_clique(const Graph& g, int k, const VertexSet* subset = nullptr);
std::optional<std::vector<int>> find_clique(const Graph& g, int k, const VertexSet* subset = nullptr);
bool has_independent_set(const Graph& g, int k, const VertexSet* subset = nullptr);
std::optional<std::vector<int>> find_independent_set(const Graph& g, int k,
                                                     const VertexSet* subset = nullptr);

bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_independent_set(const Graph& g, const std::vector<int>& vertices);

}  // namespace ramsat
