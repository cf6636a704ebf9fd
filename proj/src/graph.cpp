#include "ramsat/graph.hpp"

#include <algorithm>
#include <string>

#include "ramsat/errors.hpp"

namespace ramsat {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices)
    throw InvalidArgument("graph order must be in [1, " + std::to_string(kMaxVertices) +
                          "], got " + std::to_string(n));
  n_ = n;
  stride_ = words_for(static_cast<std::size_t>(n));
  rows_.assign(stride_ * static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n = " +
                          std::to_string(n_));
}

void Graph::set_edge(int u, int v, bool on) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  if (on) {
    bits::set(mutable_row(u), static_cast<std::size_t>(v));
    bits::set(mutable_row(v), static_cast<std::size_t>(u));
  } else {
    bits::reset(mutable_row(u), static_cast<std::size_t>(v));
    bits::reset(mutable_row(v), static_cast<std::size_t>(u));
  }
}

std::size_t Graph::edge_count() const { return bits::count(rows_) / 2; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    bits::for_each(row(u), [&](std::size_t v) {
      if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
    });
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.set_edge(u, v, true);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.set_edge(u, v, false);
  return g;
}

Graph Graph::relabeled(std::span<const int> pi) const {
  if (pi.size() != static_cast<std::size_t>(n_))
    throw InvalidArgument("permutation length does not match graph order");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int x : pi) {
    check_vertex(x);
    if (seen[static_cast<std::size_t>(x)]) throw InvalidArgument("relabeling is not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
  Graph g(n_);
  for (auto [u, v] : edges()) g.set_edge(pi[static_cast<std::size_t>(u)], pi[static_cast<std::size_t>(v)], true);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    check_vertex(vertices[a]);
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (adjacent(vertices[a], vertices[b])) g.set_edge(static_cast<int>(a), static_cast<int>(b), true);
  }
  return g;
}

VertexSet Graph::neighbourhood(int v) const {
  check_vertex(v);
  VertexSet s(static_cast<std::size_t>(n_));
  std::ranges::copy(row(v), s.words().begin());
  return s;
}

VertexSet Graph::common_neighbours(int u, int v) const {
  VertexSet s = neighbourhood(u);
  s &= row(v);
  return s;
}

VertexSet Graph::common_non_neighbours(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  VertexSet s = VertexSet::full(static_cast<std::size_t>(n_));
  s.subtract(row(u)).subtract(row(v));
  s.erase(static_cast<std::size_t>(u));
  s.erase(static_cast<std::size_t>(v));
  return s;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  g_.set_edge(u, v, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  g_.set_edge(u, v, false);
  return *this;
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

DegreeProfile degree_profile(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("degree profile of the null graph is undefined");
  DegreeProfile p;
  p.sorted_degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.sorted_degrees.push_back(g.degree(v));
  std::ranges::sort(p.sorted_degrees);
  p.min_degree = p.sorted_degrees.front();
  p.max_degree = p.sorted_degrees.back();
  return p;
}

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6LongMarker = 126;
constexpr int kG6MaxLong = 258047;

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw InvalidArgument("cannot write graph6 for the null graph");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back(static_cast<char>(kG6LongMarker));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
  return out;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError("graph6: empty input");
  for (char c : line) {
    const int b = static_cast<unsigned char>(c);
    if (b < kG6Bias || b > kG6LongMarker)
      throw ParseError("graph6: byte " + std::to_string(b) + " outside printable range 63..126");
  }
  std::size_t pos = 0;
  long n = static_cast<unsigned char>(line[pos++]) - kG6Bias;
  if (n == kG6LongMarker - kG6Bias) {
    if (line.size() < 4) throw ParseError("graph6: truncated long-form header");
    if (static_cast<unsigned char>(line[1]) == kG6LongMarker)
      throw ParseError("graph6: 8-byte header (n > 258047) is not supported");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | (static_cast<unsigned char>(line[pos++]) - kG6Bias);
    if (n < 63 || n > kG6MaxLong) throw ParseError("graph6: non-canonical long-form order");
  }
  if (n < 1) throw ParseError("graph6: order 0 is not supported");
  if (n > Graph::kMaxVertices)
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds the supported maximum");

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (line.size() - pos < need) throw ParseError("graph6: truncated adjacency payload");
  if (line.size() - pos > need) throw ParseError("graph6: trailing bytes after adjacency payload");

  GraphBuilder b(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[pos + k / 6]) - kG6Bias;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (pairs % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - kG6Bias;
    if (last & ((1 << (6 - pairs % 6)) - 1)) throw ParseError("graph6: non-zero padding bits");
  }
  return std::move(b).build();
}

}  // namespace ramsat
