#include "ramsat/encoder.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ramsat/errors.hpp"
#include "ramsat/saturation.hpp"

namespace ramsat {

std::string_view to_string(ClauseGroup g) {
  switch (g) {
    case ClauseGroup::kGoodness: return "goodness";
    case ClauseGroup::kDegeneracy: return "degeneracy";
    case ClauseGroup::kMaximality: return "maximality";
    case ClauseGroup::kMinimality: return "minimality";
    case ClauseGroup::kCardinality: return "cardinality";
    case ClauseGroup::kLex: return "lex";
    case ClauseGroup::kBlocking: return "blocking";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// VarMap

namespace {

int pair_rank(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int witness_offset(int n, int i, int j, int k) {
  if (i > j) std::swap(i, j);
  if (k == i || k == j || k < 0 || k >= n) throw InvalidArgument("witness vertex coincides with the pair");
  const int pos = k - (k > i ? 1 : 0) - (k > j ? 1 : 0);
  return pair_rank(n, i, j) * (n - 2) + pos;
}

void check_pair(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw InvalidArgument("invalid vertex pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

nlohmann::json range_json(const VarRange& r) { return {{"first", r.first}, {"last", r.last}}; }
VarRange range_from(const nlohmann::json& j) { return {j.at("first").get<int>(), j.at("last").get<int>()}; }

}  // namespace

int VarMap::edge_var(int i, int j) const {
  check_pair(n, i, j);
  return edges.first + pair_rank(n, i, j);
}

int VarMap::max_witness_var(int i, int j, int k) const {
  check_pair(n, i, j);
  return max_witness.first + witness_offset(n, i, j, k);
}

int VarMap::min_witness_var(int i, int j, int k) const {
  check_pair(n, i, j);
  return min_witness.first + witness_offset(n, i, j, k);
}

nlohmann::json VarMap::to_json() const {
  nlohmann::json edge_list = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edge_list.push_back({i, j, edge_var(i, j)});
  return {{"version", 1},
          {"n", n},
          {"s", s},
          {"t", t},
          {"symmetry_break", symmetry_break},
          {"num_vars", num_vars},
          {"edges", range_json(edges)},
          {"max_witness", range_json(max_witness)},
          {"min_witness", range_json(min_witness)},
          {"counters", range_json(counters)},
          {"lex_aux", range_json(lex_aux)},
          {"witness_layout", "pair-major, lexicographic pairs, k ascending excluding the pair"},
          {"edge_vars", std::move(edge_list)}};
}

VarMap VarMap::from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported VarMap version");
    VarMap vm;
    vm.n = j.at("n").get<int>();
    vm.s = j.at("s").get<int>();
    vm.t = j.at("t").get<int>();
    vm.symmetry_break = j.at("symmetry_break").get<bool>();
    vm.num_vars = j.at("num_vars").get<int>();
    vm.edges = range_from(j.at("edges"));
    vm.max_witness = range_from(j.at("max_witness"));
    vm.min_witness = range_from(j.at("min_witness"));
    vm.counters = range_from(j.at("counters"));
    vm.lex_aux = range_from(j.at("lex_aux"));
    if (vm.n < 1 || vm.edges.size() != vm.n * (vm.n - 1) / 2) throw ParseError("VarMap edge range inconsistent with n");
    if (j.contains("edge_vars"))
      for (const auto& e : j.at("edge_vars"))
        if (vm.edge_var(e.at(0).get<int>(), e.at(1).get<int>()) != e.at(2).get<int>())
          throw ParseError("VarMap edge_vars disagree with the lexicographic layout");
    return vm;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed VarMap JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// CnfFormula

void CnfFormula::begin_group(ClauseGroup g) { blocks_.push_back({g, clauses_.size(), clauses_.size()}); }

void CnfFormula::add(Clause c) {
  if (c.empty()) throw InvalidArgument("empty clause");
  for (Literal l : c) {
    if (l == 0) throw InvalidArgument("literal 0 is not a variable");
    if (num_vars_ > 0 && std::abs(l) > num_vars_) throw InvalidArgument("literal beyond num_vars");
  }
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b)
      if (c[a] == -c[b]) throw InvalidArgument("tautological clause");
  clauses_.push_back(std::move(c));
  if (!blocks_.empty()) blocks_.back().end = clauses_.size();
}

std::size_t CnfFormula::count(ClauseGroup g) const {
  std::size_t c = 0;
  for (const auto& b : blocks_)
    if (b.group == g) c += b.end - b.begin;
  return c;
}

std::optional<std::size_t> CnfFormula::first_falsified(std::span<const std::int8_t> values) const {
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    bool sat = false;
    for (Literal l : clauses_[i]) {
      const auto v = static_cast<std::size_t>(std::abs(l));
      if (v < values.size() && values[v] == (l > 0 ? 1 : 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return i;
  }
  return std::nullopt;
}

bool CnfFormula::satisfied_by(std::span<const std::int8_t> values) const { return !first_falsified(values); }

// ---------------------------------------------------------------------------
// Cardinality and lex building blocks

CardinalityEncoding at_least_k(std::span<const Literal> vars, int k, VarAllocator& alloc) {
  const int m = static_cast<int>(vars.size());
  CardinalityEncoding out;
  if (k < 0) throw InvalidArgument("at_least_k: negative k");
  if (k > m) {
    out.clauses.push_back({});
    out.unsatisfiable = true;
    return out;
  }
  if (k == 0) return out;
  if (k == 1) {
    out.clauses.emplace_back(vars.begin(), vars.end());
    return out;
  }
  if (k == m) {
    for (Literal x : vars) out.clauses.push_back({x});
    return out;
  }
  // reg[i][j-1] <=> "at least j of vars[0..i] are true" (only the forward implication is
  // needed); the final register is asserted.
  std::vector<std::vector<int>> reg(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= std::min(i + 1, k); ++j) reg[static_cast<std::size_t>(i)].push_back(alloc.fresh());
  auto r = [&](int i, int j) { return reg[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]; };
  out.clauses.push_back({-r(0, 1), vars[0]});
  for (int i = 1; i < m; ++i) {
    const Literal x = vars[static_cast<std::size_t>(i)];
    for (int j = 1; j <= std::min(i + 1, k); ++j) {
      if (j <= i) {
        out.clauses.push_back({-r(i, j), r(i - 1, j), x});
      } else {
        out.clauses.push_back({-r(i, j), x});
      }
      if (j > 1) out.clauses.push_back({-r(i, j), r(i - 1, j - 1)});
    }
  }
  out.clauses.push_back({r(m - 1, k)});
  return out;
}

std::vector<Clause> lex_leq(std::span<const Literal> a, std::span<const Literal> b, VarAllocator& alloc) {
  if (a.size() != b.size()) throw InvalidArgument("lex_leq: length mismatch");
  if (a.empty()) throw InvalidArgument("lex_leq: empty sequences");
  std::vector<Clause> out;
  out.push_back({-a[0], b[0]});
  if (a.size() == 1) return out;
  const int y = alloc.fresh();
  out.push_back({-y, -a[0], b[0]});
  out.push_back({-y, a[0], -b[0]});
  out.push_back({y, a[0], b[0]});
  out.push_back({y, -a[0], -b[0]});
  for (Clause c : lex_leq(a.subspan(1), b.subspan(1), alloc)) {
    c.insert(c.begin(), -y);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > UINT64_MAX) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

// ---------------------------------------------------------------------------
// Double-saturation encoding

namespace {

// Every k-subset of [0, n) in lexicographic order.
template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void add_all(CnfFormula& f, std::vector<Clause>&& clauses) {
  for (auto& c : clauses) f.add(std::move(c));
}

}  // namespace

Encoding encode_ds(int n, int s, int t, const EncodeOptions& opts) {
  check_regime(s, t);
  if (n < std::max(s, t))
    throw InvalidArgument("encode_ds requires n >= max(s, t); got n = " + std::to_string(n));
  if (n > 255) throw InvalidArgument("encode_ds supports n <= 255");
  const auto cs = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s));
  const auto ct = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
  if (!cs || !ct || *cs + *ct > opts.clause_budget)
    throw LimitExceeded("goodness clauses C(n,s) + C(n,t) = " +
                        (cs && ct ? std::to_string(*cs + *ct) : std::string("> 2^64")) +
                        " exceed the clause budget of " + std::to_string(opts.clause_budget));

  Encoding enc;
  VarMap& vm = enc.vars;
  vm.n = n;
  vm.s = s;
  vm.t = t;
  vm.symmetry_break = opts.symmetry_break;
  const int pairs = n * (n - 1) / 2;
  const int witnesses = pairs * (n - 2);
  vm.edges = {1, pairs};
  vm.max_witness = {pairs + 1, pairs + witnesses};
  vm.min_witness = {pairs + witnesses + 1, pairs + 2 * witnesses};
  VarAllocator alloc(pairs + 2 * witnesses + 1);

  CnfFormula& f = enc.formula;
  auto e = [&](int i, int j) { return vm.edge_var(i, j); };

  f.begin_group(ClauseGroup::kGoodness);
  for_each_subset(n, s, [&](const std::vector<int>& sub) {
    Clause c;
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b) c.push_back(-e(sub[a], sub[b]));
    f.add(std::move(c));
  });
  for_each_subset(n, t, [&](const std::vector<int>& sub) {
    Clause c;
    for (std::size_t a = 0; a < sub.size(); ++a)
      for (std::size_t b = a + 1; b < sub.size(); ++b) c.push_back(e(sub[a], sub[b]));
    f.add(std::move(c));
  });

  f.begin_group(ClauseGroup::kDegeneracy);
  {
    Clause some_edge, some_non_edge;
    for (int v = vm.edges.first; v <= vm.edges.last; ++v) {
      some_edge.push_back(v);
      some_non_edge.push_back(-v);
    }
    f.add(std::move(some_edge));
    f.add(std::move(some_non_edge));
  }

  // Maximality: a non-edge {i,j} has s-2 witnesses, each adjacent to i and j, pairwise
  // adjacent. Minimality is the same with every edge polarity flipped.
  auto saturation_group = [&](ClauseGroup group, bool minimality) {
    f.begin_group(group);
    const int sign = minimality ? -1 : 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int gate = sign * e(i, j);
        auto w = [&](int k) { return minimality ? vm.min_witness_var(i, j, k) : vm.max_witness_var(i, j, k); };
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          f.add({gate, -w(k), sign * e(i, k)});
          f.add({gate, -w(k), sign * e(j, k)});
        }
        for (int k = 0; k < n; ++k)
          for (int k2 = k + 1; k2 < n; ++k2) {
            if (k == i || k == j || k2 == i || k2 == j) continue;
            f.add({gate, -w(k), -w(k2), sign * e(k, k2)});
          }
      }
  };
  saturation_group(ClauseGroup::kMaximality, false);
  saturation_group(ClauseGroup::kMinimality, true);

  f.begin_group(ClauseGroup::kCardinality);
  const int counters_first = alloc.peek();
  for (bool minimality : {false, true})
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<Literal> ws;
        for (int k = 0; k < n; ++k)
          if (k != i && k != j) ws.push_back(minimality ? vm.min_witness_var(i, j, k) : vm.max_witness_var(i, j, k));
        auto card = at_least_k(ws, minimality ? t - 2 : s - 2, alloc);
        add_all(f, std::move(card.clauses));
      }
  vm.counters = {counters_first, alloc.last_used()};

  const int lex_first = alloc.peek();
  if (opts.symmetry_break) {
    f.begin_group(ClauseGroup::kLex);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<Literal> row_i, row_j;
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          row_i.push_back(e(i, k));
          row_j.push_back(e(j, k));
        }
        if (row_i.empty()) continue;
        add_all(f, lex_leq(row_i, row_j, alloc));
      }
  }
  vm.lex_aux = {lex_first, alloc.last_used()};
  vm.num_vars = alloc.last_used();
  f.set_num_vars(vm.num_vars);
  return enc;
}

Graph decode_model(const VarMap& vm, std::span<const std::int8_t> values) {
  GraphBuilder b(vm.n);
  for (int i = 0; i < vm.n; ++i)
    for (int j = i + 1; j < vm.n; ++j) {
      const auto v = static_cast<std::size_t>(vm.edge_var(i, j));
      if (v >= values.size() || values[v] < 0)
        throw InvalidArgument("model leaves edge variable " + std::to_string(v) + " unassigned");
      if (values[v] == 1) b.add_edge(i, j);
    }
  return std::move(b).build();
}

Clause blocking_clause(const VarMap& vm, const Graph& g) {
  if (g.order() != vm.n) throw InvalidArgument("blocking clause: graph order does not match the encoding");
  Clause c;
  for (int i = 0; i < vm.n; ++i)
    for (int j = i + 1; j < vm.n; ++j) c.push_back(g.adjacent(i, j) ? -vm.edge_var(i, j) : vm.edge_var(i, j));
  return c;
}

// ---------------------------------------------------------------------------
// DIMACS

void write_dimacs(std::ostream& os, const CnfFormula& f, const VarMap* vm) {
  std::string buf;
  buf.reserve(1 << 16);
  auto flush = [&] {
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    buf.clear();
  };
  if (vm) {
    buf += kEncodingVersionLine;
    buf += '\n';
    nlohmann::json compact = vm->to_json();
    compact.erase("edge_vars");
    buf += "c varmap " + compact.dump() + "\n";
    for (int i = 0; i < vm->n; ++i)
      for (int j = i + 1; j < vm->n; ++j)
        buf += "c edge " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(vm->edge_var(i, j)) + "\n";
    for (bool minimality : {false, true})
      for (int i = 0; i < vm->n; ++i)
        for (int j = i + 1; j < vm->n; ++j)
          for (int k = 0; k < vm->n; ++k) {
            if (k == i || k == j) continue;
            const int v = minimality ? vm->min_witness_var(i, j, k) : vm->max_witness_var(i, j, k);
            buf += std::string(minimality ? "c pmin " : "c pmax ") + std::to_string(i) + " " + std::to_string(j) + " " +
                   std::to_string(k) + " " + std::to_string(v) + "\n";
            if (buf.size() > (1 << 15)) flush();
          }
    for (const auto& b : f.blocks())
      buf += "c group " + std::string(to_string(b.group)) + " " + std::to_string(b.begin) + " " +
             std::to_string(b.end) + "\n";
  }
  buf += "p cnf " + std::to_string(f.num_vars()) + " " + std::to_string(f.size()) + "\n";
  for (const Clause& c : f.clauses()) {
    for (Literal l : c) {
      buf += std::to_string(l);
      buf += ' ';
    }
    buf += "0\n";
    if (buf.size() > (1 << 15)) flush();
  }
  flush();
}

std::string to_dimacs(const CnfFormula& f, const VarMap* vm) {
  std::ostringstream os;
  write_dimacs(os, f, vm);
  return os.str();
}

ParsedDimacs parse_dimacs(std::istream& is) {
  ParsedDimacs out;
  std::string line;
  long declared_vars = -1;
  long declared_clauses = -1;
  Clause pending;
  std::size_t line_no = 0;
  std::vector<Clause> clauses;
  std::vector<ClauseBlock> groups;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') {
      if (line.starts_with("c varmap ")) {
        try {
          out.vars = VarMap::from_json(nlohmann::json::parse(line.substr(9)));
        } catch (const nlohmann::json::exception& e) {
          throw ParseError("DIMACS line " + std::to_string(line_no) + ": bad varmap comment: " + e.what());
        }
      } else if (line.starts_with("c group ")) {
        std::istringstream gs(line.substr(8));
        std::string name;
        ClauseBlock b{ClauseGroup::kGoodness, 0, 0};
        if (!(gs >> name >> b.begin >> b.end) || b.end < b.begin ||
            (!groups.empty() && b.begin < groups.back().end))
          throw ParseError("DIMACS line " + std::to_string(line_no) + ": malformed group comment");
        bool known = false;
        for (auto g : {ClauseGroup::kGoodness, ClauseGroup::kDegeneracy, ClauseGroup::kMaximality,
                       ClauseGroup::kMinimality, ClauseGroup::kCardinality, ClauseGroup::kLex, ClauseGroup::kBlocking})
          if (to_string(g) == name) {
            b.group = g;
            known = true;
          }
        if (!known) throw ParseError("DIMACS line " + std::to_string(line_no) + ": unknown clause group " + name);
        groups.push_back(b);
      }
      continue;
    }
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, cnf;
      if (!(hs >> p >> cnf >> declared_vars >> declared_clauses) || cnf != "cnf" || declared_vars < 0 ||
          declared_clauses < 0)
        throw ParseError("DIMACS line " + std::to_string(line_no) + ": malformed header");
      continue;
    }
    if (declared_vars < 0) throw ParseError("DIMACS line " + std::to_string(line_no) + ": clause before header");
    std::istringstream ls(line);
    long lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        clauses.push_back(std::exchange(pending, {}));
        continue;
      }
      if (std::labs(lit) > declared_vars)
        throw ParseError("DIMACS line " + std::to_string(line_no) + ": literal exceeds declared variables");
      pending.push_back(static_cast<Literal>(lit));
    }
    if (!ls.eof()) throw ParseError("DIMACS line " + std::to_string(line_no) + ": non-numeric token");
  }
  if (declared_vars < 0) throw ParseError("DIMACS: missing 'p cnf' header");
  if (!pending.empty()) throw ParseError("DIMACS: final clause is not 0-terminated");
  if (static_cast<long>(clauses.size()) != declared_clauses)
    throw ParseError("DIMACS: header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(clauses.size()));
  if (!groups.empty() && groups.back().end > clauses.size())
    throw ParseError("DIMACS: clause groups extend past the last clause");
  out.formula.set_num_vars(static_cast<int>(declared_vars));
  std::size_t next_group = 0;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    while (next_group < groups.size() && groups[next_group].begin == i) out.formula.begin_group(groups[next_group++].group);
    out.formula.add(std::move(clauses[i]));
  }
  while (next_group < groups.size()) out.formula.begin_group(groups[next_group++].group);
  return out;
}

}  // namespace ramsat
