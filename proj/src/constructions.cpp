#include "ramsat/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <sstream>

#include "ramsat/errors.hpp"
#include "ramsat/maxclique.hpp"
#include "ramsat/saturation.hpp"

namespace ramsat {

CirculantSpec CirculantSpec::make(int n, std::vector<int> distances) {
  if (n < 1 || n > Graph::kMaxVertices) throw InvalidArgument("circulant order out of range: " + std::to_string(n));
  std::ranges::sort(distances);
  auto dup = std::ranges::unique(distances);
  distances.erase(dup.begin(), dup.end());
  for (int d : distances)
    if (d < 1 || d > n / 2)
      throw InvalidArgument("distance " + std::to_string(d) + " outside [1, " + std::to_string(n / 2) +
                            "] for n = " + std::to_string(n));
  return CirculantSpec{n, std::move(distances)};
}

std::string CirculantSpec::to_string() const {
  std::string out = "C(" + std::to_string(n) + ";";
  for (std::size_t i = 0; i < distances.size(); ++i) {
    out += i == 0 ? " " : ",";
    out += std::to_string(distances[i]);
  }
  return out + ")";
}

CirculantSpec CirculantSpec::parse(std::string_view text) {
  auto fail = [&] { return ParseError("malformed circulant spec '" + std::string(text) + "'"); };
  std::string cleaned;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') cleaned.push_back(c);
  if (cleaned.size() < 4 || !cleaned.starts_with("C(") || cleaned.back() != ')') throw fail();
  std::string_view body(cleaned);
  body = body.substr(2, body.size() - 3);
  auto read_int = [&](std::string_view tok) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw fail();
    return v;
  };
  const auto semi = body.find(';');
  if (semi == std::string_view::npos) throw fail();
  const int n = read_int(body.substr(0, semi));
  std::vector<int> ds;
  std::string_view rest = body.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    ds.push_back(read_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw fail();
  }
  return make(n, std::move(ds));
}

std::vector<int> closed_range(int lo, int hi) {
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

int circular_norm(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(std::min(r, n - r));
}

Graph circulant(const CirculantSpec& spec) {
  const CirculantSpec checked = CirculantSpec::make(spec.n, spec.distances);
  std::vector<bool> in_set(static_cast<std::size_t>(checked.n / 2 + 1), false);
  for (int d : checked.distances) in_set[static_cast<std::size_t>(d)] = true;
  GraphBuilder b(checked.n);
  for (int x = 0; x < checked.n; ++x)
    for (int y = x + 1; y < checked.n; ++y)
      if (in_set[static_cast<std::size_t>(circular_norm(y - x, checked.n))]) b.add_edge(x, y);
  return std::move(b).build();
}

bool is_rotation_invariant(const Graph& g) {
  const int n = g.order();
  // Row 0 must be symmetric under d -> n - d, and every other pair follows row 0.
  for (int d = 1; d < n; ++d)
    if (g.adjacent(0, d) != g.adjacent(0, n - d)) return false;
  for (int v = 1; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (g.adjacent(v, u) != g.adjacent(0, (u - v) % n)) return false;
  return true;
}

Construction construct_r4t(int t) {
  if (t < 4) throw InvalidArgument("construct_r4t requires t >= 4, got " + std::to_string(t));
  const int m = t - 2;
  std::vector<int> ds{m};
  for (int d : closed_range(2 * m + 1, 3 * m)) ds.push_back(d);
  CirculantSpec spec = CirculantSpec::make(6 * m + 1, std::move(ds));
  Graph g = circulant(spec);
  return {std::move(spec), std::move(g)};
}

Construction construct_r3t(int t) {
  if (t % 2 == 0) throw InvalidArgument("construct_r3t requires odd t, got " + std::to_string(t));
  if (t < 17) throw InvalidArgument("construct_r3t requires t >= 17, got " + std::to_string(t));
  std::vector<int> ds = closed_range(t - 4, t - 3);
  for (int d : closed_range(t + 1, (3 * t - 9) / 2)) ds.push_back(d);
  ds.push_back((3 * t - 5) / 2);
  ds.push_back(2 * t - 4);
  CirculantSpec spec = CirculantSpec::make(5 * t - 10, std::move(ds));
  Graph g = circulant(spec);
  return {std::move(spec), std::move(g)};
}

bool is_prime(long long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

void check_paley_order(int p) {
  if (p < 5 || !is_prime(p)) throw InvalidArgument("Paley order must be a prime >= 5, got " + std::to_string(p));
  if (p % 4 != 1) throw InvalidArgument("Paley order must be 1 mod 4, got " + std::to_string(p));
}

}  // namespace

std::vector<int> quadratic_residues(int p) {
  std::vector<bool> is_qr(static_cast<std::size_t>(p), false);
  for (long long x = 1; x <= (p - 1) / 2; ++x) is_qr[static_cast<std::size_t>(x * x % p)] = true;
  std::vector<int> out;
  for (int r = 1; r < p; ++r)
    if (is_qr[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

CirculantSpec paley_spec(int p) {
  check_paley_order(p);
  std::vector<int> ds;
  for (int r : quadratic_residues(p)) ds.push_back(circular_norm(r, p));
  return CirculantSpec::make(p, std::move(ds));
}

Graph paley(int p) { return circulant(paley_spec(p)); }

bool paley_is_doubly_saturated(int p, int s) {
  if (s < 3) throw InvalidArgument("paley check requires s >= 3");
  const Graph g = paley(p);
  // Aut(paley(p)) is transitive on edges and on non-edges, and x -> r x (r a non-residue)
  // swaps them, so one edge and one non-edge represent every pair.
  const std::vector<int> qr = quadratic_residues(p);
  int non_residue = 2;
  while (std::ranges::binary_search(qr, non_residue)) ++non_residue;
  auto clique_in = [&](const VertexSet& pool) {
    return static_cast<int>(pool.size()) >= s - 2 && has_clique(g, s - 2, &pool);
  };
  if (clique_in(g.common_neighbours(0, 1))) return false;  // an s-clique exists
  return clique_in(g.common_neighbours(0, non_residue));
}

namespace {

bool paley_verdict(int p, int s, PaleyCheck check) {
  if (check == PaleyCheck::kShortcut) return paley_is_doubly_saturated(p, s);
  return is_doubly_saturated(paley(p), s, s).verdict == Verdict::kDoublySaturated;
}

std::vector<int> paley_candidates(int s, int p_max) {
  if (s < 3) throw InvalidArgument("paley_scan requires s >= 3, got " + std::to_string(s));
  if (p_max < 5) throw InvalidArgument("paley_scan requires p_max >= 5");
  std::vector<int> out;
  for (int p = 5; p <= p_max; p += 4)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

std::optional<PaleyScanRow> paley_scan_serial(int s, int p_max, PaleyCheck check) {
  for (int p : paley_candidates(s, p_max))
    if (paley_verdict(p, s, check)) return PaleyScanRow{s, p};
  return std::nullopt;
}

std::optional<PaleyScanRow> paley_scan(int s, int p_max, PaleyCheck check) {
  const std::vector<int> candidates = paley_candidates(s, p_max);
  const int count = static_cast<int>(candidates.size());
  int best = INT_MAX;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (int i = 0; i < count; ++i) {
    const int p = candidates[static_cast<std::size_t>(i)];
    if (p < best && paley_verdict(p, s, check)) best = std::min(best, p);
  }
  if (best == INT_MAX) return std::nullopt;
  return PaleyScanRow{s, best};
}

}  // namespace ramsat
