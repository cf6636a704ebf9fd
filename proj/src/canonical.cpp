#include "ramsat/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "ramsat/errors.hpp"
#include "ramsat/union_find.hpp"

namespace ramsat {
namespace {

using Cells = std::vector<std::vector<int>>;


class Canonicalizer {
 public:
  Canonicalizer(const Graph& g, const CanonicalOptions& opts) : g_(g), n_(g.order()), opts_(opts) {}

  CanonicalLabeling run() {
    Cells root{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(root[0].begin(), root[0].end(), 0);
    refine(root);
    std::vector<int> path;
    search(root, path);
    return {best_perm_, best_bytes_};
  }

 private:
  static constexpr int kNoJump = -1;

  // Equitable refinement. Cells split by neighbour count into the splitter, in ascending
  // count order; every decision depends only on the partition, never on vertex names.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
        VertexSet splitter(static_cast<std::size_t>(n_));
        for (int v : cells[w]) splitter.insert(static_cast<std::size_t>(v));
        Cells next;
        next.reserve(cells.size() + 4);
        for (auto& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(std::move(cell));
            continue;
          }
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) {
            int c = 0;
            auto r = g_.row(v);
            auto sw = splitter.words();
            for (std::size_t i = 0; i < r.size(); ++i) c += std::popcount(r[i] & sw[i]);
            keyed.emplace_back(c, v);
          }
          std::ranges::sort(keyed);
          if (keyed.front().first == keyed.back().first) {
            next.push_back(std::move(cell));
            continue;
          }
          changed = true;
          std::vector<int> part{keyed[0].second};
          for (std::size_t i = 1; i < keyed.size(); ++i) {
            if (keyed[i].first != keyed[i - 1].first) next.push_back(std::exchange(part, {}));
            part.push_back(keyed[i].second);
          }
          next.push_back(std::move(part));
        }
        cells = std::move(next);
      }
    }
  }

  std::vector<std::uint8_t> leaf_bytes(const std::vector<int>& inverse) const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) perm[static_cast<std::size_t>(inverse[static_cast<std::size_t>(pos)])] = pos;
    return upper_triangle_bytes(g_.relabeled(perm));
  }

  bool fixes(const std::vector<int>& gamma, const std::vector<int>& path) const {
    return std::ranges::all_of(path, [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    std::vector<int> inverse;
    inverse.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) inverse.push_back(c[0]);
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) perm[static_cast<std::size_t>(inverse[static_cast<std::size_t>(pos)])] = pos;
    auto bytes = leaf_bytes(inverse);

    if (first_bytes_.empty()) {
      first_bytes_ = bytes;
      first_inverse_ = inverse;
      first_path_ = path;
      best_bytes_ = std::move(bytes);
      best_perm_ = std::move(perm);
      best_inverse_ = inverse;
      return kNoJump;
    }
    auto automorphism_to = [&](const std::vector<int>& other_inverse) {
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v)
        gamma[static_cast<std::size_t>(v)] = other_inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
      return gamma;
    };
    if (bytes == first_bytes_) {
      automorphisms_.push_back(automorphism_to(first_inverse_));
      std::size_t k = 0;
      while (k < path.size() && k < first_path_.size() && path[k] == first_path_[k]) ++k;
      return static_cast<int>(k);
    }
    if (bytes == best_bytes_) {
      automorphisms_.push_back(automorphism_to(best_inverse_));
    } else if (bytes > best_bytes_) {
      best_bytes_ = std::move(bytes);
      best_perm_ = std::move(perm);
      best_inverse_ = std::move(inverse);
    }
    return kNoJump;
  }

  int search(const Cells& cells, std::vector<int>& path) {
    if (++nodes_ > opts_.node_budget_above_ceiling && n_ > kCanonicalGuaranteedOrder)
      throw LimitExceeded("canonical labelling exceeded its node budget at n = " + std::to_string(n_));
    if (cells.size() == static_cast<std::size_t>(n_)) return leaf(cells, path);

    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;

    const int depth = static_cast<int>(path.size());
    std::vector<int> explored;
    for (int v : cells[target]) {
      if (!explored.empty() && equivalent_to_explored(v, explored, path)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[i])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(child);
      path.push_back(v);
      const int jump = search(child, path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& path) const {
    UnionFind orbits(static_cast<std::size_t>(n_));
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      if (!fixes(gamma, path)) continue;
      any = true;
      for (int x = 0; x < n_; ++x) orbits.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(gamma[static_cast<std::size_t>(x)]));
    }
    if (!any) return false;
    const std::size_t root = orbits.find(static_cast<std::size_t>(v));
    return std::ranges::any_of(explored, [&](int u) { return orbits.find(static_cast<std::size_t>(u)) == root; });
  }

  const Graph& g_;
  int n_;
  CanonicalOptions opts_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> first_bytes_;
  std::vector<int> first_inverse_;
  std::vector<int> first_path_;
  std::vector<std::uint8_t> best_bytes_;
  std::vector<int> best_perm_;
  std::vector<int> best_inverse_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::vector<std::uint8_t> upper_triangle_bytes(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint8_t> out{static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n & 0xff)};
  std::uint8_t acc = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 8) {
        out.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return out;
}

CanonicalLabeling canonical_form(const Graph& g, const CanonicalOptions& opts) {
  if (g.order() < 1) throw InvalidArgument("canonical form of the null graph is undefined");
  return Canonicalizer(g, opts).run();
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_form(g).perm); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).canon_bytes == canonical_form(b).canon_bytes;
}

}  // namespace ramsat
