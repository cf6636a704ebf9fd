#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsat/bitset.hpp"

namespace ramsat {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as packed adjacency rows.
///
/// Values are immutable once built; the mutators return new graphs. Row v holds the
/// neighbours of v, so common-neighbourhood and complement queries are word-parallel.
class Graph {
 public:
  static constexpr int kMaxVertices = 1024;

  Graph() = default;
  /// Empty graph I_n. Throws InvalidArgument unless 1 <= n <= kMaxVertices.
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t words_per_row() const { return stride_; }
  std::span<const Word> row(int v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }

  bool adjacent(int u, int v) const { return bits::test(row(u), static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(bits::count(row(v))); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  std::vector<Edge> non_edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Graph whose vertex pi[v] corresponds to vertex v of this graph.
  Graph relabeled(std::span<const int> pi) const;
  /// Induced subgraph on `vertices` (in the order given).
  Graph induced(std::span<const int> vertices) const;

  VertexSet neighbourhood(int v) const;
  /// N(u) ∩ N(v).
  VertexSet common_neighbours(int u, int v) const;
  /// Vertices other than u, v adjacent to neither.
  VertexSet common_non_neighbours(int u, int v) const;

  bool is_complete() const { return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2; }
  bool is_empty() const { return edge_count() == 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  void set_edge(int u, int v, bool on);
  void check_vertex(int v) const;
  std::span<Word> mutable_row(int v) {
    return {rows_.data() + static_cast<std::size_t>(v) * stride_, stride_};
  }

  int n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> rows_;
};

/// Mutable staging area for graphs assembled edge by edge (decoders, enumerators).
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(n) {}
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  Graph build() && { return std::move(g_); }
  const Graph& peek() const { return g_; }

 private:
  Graph g_;
};

/// Builds a graph from an edge list; duplicates collapse. Throws on self-loops or
/// out-of-range endpoints.
Graph from_edge_list(int n, std::span<const Edge> edges);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complement(const Graph& g);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> sorted_degrees;
};

/// Throws InvalidArgument for the default-constructed (n = 0) graph.
DegreeProfile degree_profile(const Graph& g);

/// graph6 encoding; short form for n <= 62, long form up to 258047.
std::string write_graph6(const Graph& g);
/// Parses one graph6 line (trailing newline / CR tolerated). Throws ParseError.
Graph parse_graph6(std::string_view line);

}  // namespace ramsat
