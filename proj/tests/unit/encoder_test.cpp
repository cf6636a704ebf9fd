#include <gtest/gtest.h>

#include <bit>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ramsat/encoder.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/oracle.hpp"

using namespace ramsat;

namespace {

std::vector<Literal> first_vars(int m) {
  std::vector<Literal> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

bool lex_leq_reference(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return !a[i];
  return true;
}

}  // namespace

TEST(AtLeastK, ExhaustiveUpToSixVariables) {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 0; k <= m; ++k) {
      const auto vars = first_vars(m);
      VarAllocator alloc(m + 1);
      const CardinalityEncoding enc = at_least_k(vars, k, alloc);
      ASSERT_FALSE(enc.unsatisfiable);
      EXPECT_LE(enc.clauses.size(), static_cast<std::size_t>(3 * m * std::max(k, 1))) << m << ' ' << k;
      const int total = alloc.last_used();
      for (std::uint32_t x = 0; x < (1u << m); ++x) {
        std::vector<bool> values(static_cast<std::size_t>(total) + 1, false);
        for (int i = 0; i < m; ++i) values[static_cast<std::size_t>(i) + 1] = (x >> i) & 1;
        ASSERT_EQ(oracle::extendable(enc.clauses, values, m, total), std::popcount(x) >= k)
            << "m=" << m << " k=" << k << " x=" << x;
      }
    }
  }
}

TEST(AtLeastK, SpecialCases) {
  const auto vars = first_vars(5);
  VarAllocator alloc(6);
  EXPECT_TRUE(at_least_k(vars, 0, alloc).clauses.empty());
  const auto one = at_least_k(vars, 1, alloc);
  ASSERT_EQ(one.clauses.size(), 1u);
  EXPECT_EQ(one.clauses[0], vars);
  const auto all = at_least_k(vars, 5, alloc);
  EXPECT_EQ(all.clauses.size(), 5u);
  for (const auto& c : all.clauses) EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(alloc.peek(), 6);  // none of the special cases needs auxiliaries
  const auto over = at_least_k(vars, 6, alloc);
  EXPECT_TRUE(over.unsatisfiable);
  ASSERT_EQ(over.clauses.size(), 1u);
  EXPECT_TRUE(over.clauses[0].empty());
}

TEST(LexLeq, ExhaustiveUpToLengthFour) {
  for (int len = 1; len <= 4; ++len) {
    std::vector<Literal> a, b;
    for (int i = 0; i < len; ++i) {
      a.push_back(i + 1);
      b.push_back(len + i + 1);
    }
    VarAllocator alloc(2 * len + 1);
    const auto clauses = lex_leq(a, b, alloc);
    EXPECT_EQ(clauses.size(), static_cast<std::size_t>(5 * len - 4));
    EXPECT_EQ(alloc.last_used() - 2 * len, len - 1);
    const int total = alloc.last_used();
    for (std::uint32_t x = 0; x < (1u << (2 * len)); ++x) {
      std::vector<bool> values(static_cast<std::size_t>(total) + 1, false), av, bv;
      for (int i = 0; i < 2 * len; ++i) values[static_cast<std::size_t>(i) + 1] = (x >> i) & 1;
      for (int i = 0; i < len; ++i) {
        av.push_back(values[static_cast<std::size_t>(i) + 1]);
        bv.push_back(values[static_cast<std::size_t>(len + i) + 1]);
      }
      ASSERT_EQ(oracle::extendable(clauses, values, 2 * len, total), lex_leq_reference(av, bv)) << len << ' ' << x;
    }
  }
}

TEST(LexLeq, ClauseCountsAndErrors) {
  VarAllocator alloc(5);
  const std::vector<Literal> a1{1}, b1{2};
  const auto one = lex_leq(a1, b1, alloc);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Clause{-1, 2}));
  const std::vector<Literal> a2{1, 2}, b2{3, 4};
  EXPECT_EQ(lex_leq(a2, b2, alloc).size(), 6u);
  EXPECT_THROW(lex_leq(a2, b1, alloc), InvalidArgument);
}

TEST(Encode, GoodnessClauseCount) {
  const Encoding e = encode_ds(13, 3, 5);
  EXPECT_EQ(e.formula.count(ClauseGroup::kGoodness), 1573u);
  EXPECT_EQ(e.formula.count(ClauseGroup::kDegeneracy), 2u);
  EXPECT_EQ(e.vars.edges, (VarRange{1, 78}));
}

TEST(Encode, VariableLayoutIsDenseAndOrdered) {
  const Encoding e = encode_ds(7, 3, 4);
  const VarMap& vm = e.vars;
  EXPECT_EQ(vm.edges.first, 1);
  EXPECT_EQ(vm.max_witness.first, vm.edges.last + 1);
  EXPECT_EQ(vm.min_witness.first, vm.max_witness.last + 1);
  EXPECT_EQ(vm.counters.first, vm.min_witness.last + 1);
  EXPECT_EQ(vm.lex_aux.first, vm.counters.last + 1);
  EXPECT_EQ(vm.lex_aux.last, vm.num_vars);
  EXPECT_EQ(vm.max_witness.size(), 21 * 5);
  EXPECT_EQ(vm.edge_var(0, 1), 1);
  EXPECT_EQ(vm.edge_var(5, 6), 21);
  EXPECT_EQ(vm.max_witness_var(0, 1, 2), vm.max_witness.first);
  EXPECT_EQ(vm.min_witness_var(5, 6, 4), vm.min_witness.last);
  EXPECT_THROW(vm.max_witness_var(0, 1, 1), InvalidArgument);
  EXPECT_EQ(VarMap::from_json(vm.to_json()), vm);

  // Every clause of a group stays inside the ranges it is allowed to touch.
  for (const auto& block : e.formula.blocks()) {
    for (std::size_t c = block.begin; c < block.end; ++c) {
      for (Literal lit : e.formula.clauses()[c]) {
        const int v = std::abs(lit);
        ASSERT_TRUE(v >= 1 && v <= vm.num_vars);
        switch (block.group) {
          case ClauseGroup::kGoodness:
          case ClauseGroup::kDegeneracy: EXPECT_TRUE(vm.edges.contains(v)); break;
          case ClauseGroup::kMaximality: EXPECT_TRUE(vm.edges.contains(v) || vm.max_witness.contains(v)); break;
          case ClauseGroup::kMinimality: EXPECT_TRUE(vm.edges.contains(v) || vm.min_witness.contains(v)); break;
          case ClauseGroup::kCardinality:
            EXPECT_TRUE(vm.max_witness.contains(v) || vm.min_witness.contains(v) || vm.counters.contains(v));
            break;
          case ClauseGroup::kLex: EXPECT_TRUE(vm.edges.contains(v) || vm.lex_aux.contains(v)); break;
          case ClauseGroup::kBlocking: EXPECT_TRUE(vm.edges.contains(v)); break;
        }
      }
    }
  }
}

TEST(Encode, SymmetryBreakOnlyAddsLexGroup) {
  const Encoding on = encode_ds(6, 3, 3, EncodeOptions{.symmetry_break = true});
  const Encoding off = encode_ds(6, 3, 3, EncodeOptions{.symmetry_break = false});
  EXPECT_GT(on.formula.count(ClauseGroup::kLex), 0u);
  EXPECT_EQ(off.formula.count(ClauseGroup::kLex), 0u);
  EXPECT_EQ(on.formula.size() - on.formula.count(ClauseGroup::kLex), off.formula.size());
  EXPECT_TRUE(off.vars.lex_aux.empty());
}

TEST(Encode, WitnessClausesGrowAsFourthPower) {
  auto witness_clauses = [](int n) {
    const Encoding e = encode_ds(n, 4, 5, EncodeOptions{.symmetry_break = false});
    return static_cast<double>(e.formula.count(ClauseGroup::kMaximality) + e.formula.count(ClauseGroup::kMinimality));
  };
  const double ratio = witness_clauses(20) / witness_clauses(10);
  EXPECT_LE(ratio, 20.0);
  EXPECT_GE(ratio, 10.0);
}

TEST(Encode, RejectsBadParameters) {
  EXPECT_THROW(encode_ds(4, 3, 5), InvalidArgument);
  EXPECT_THROW(encode_ds(10, 2, 5), InvalidArgument);
  EXPECT_THROW(encode_ds(200, 3, 40), LimitExceeded);
  EXPECT_EQ(binomial(13, 5), 1287u);
  EXPECT_EQ(binomial(5, 7), 0u);
  EXPECT_FALSE(binomial(200, 100).has_value());
}

TEST(Encode, ModelOfDoublySaturatedGraphCanBeCompleted) {
  // Fixing the edge variables of C5 (and the witnesses it implies) leaves a satisfiable
  // formula; a non-saturated graph falsifies the goodness or saturation part.
  const Encoding e = encode_ds(5, 3, 3, EncodeOptions{.symmetry_break = false});
  const Graph c5 = cycle_graph(5);
  std::vector<std::int8_t> values(static_cast<std::size_t>(e.vars.num_vars) + 1, 0);
  for (auto [i, j] : c5.edges()) values[static_cast<std::size_t>(e.vars.edge_var(i, j))] = 1;
  EXPECT_EQ(decode_model(e.vars, values), c5);
  values[static_cast<std::size_t>(e.vars.edge_var(0, 2))] = 1;  // adds a triangle {0,1,2}
  EXPECT_TRUE(e.formula.first_falsified(values).has_value());
}

TEST(Decode, AllFalseAndAllTrue) {
  const Encoding e = encode_ds(6, 3, 3);
  std::vector<std::int8_t> values(static_cast<std::size_t>(e.vars.num_vars) + 1, 0);
  EXPECT_TRUE(decode_model(e.vars, values).is_empty());
  std::fill(values.begin(), values.end(), 1);
  EXPECT_TRUE(decode_model(e.vars, values).is_complete());
  values[3] = -1;
  EXPECT_THROW(decode_model(e.vars, values), InvalidArgument);
}

TEST(Decode, BlockingClauseExcludesOnlyThatGraph) {
  const Encoding e = encode_ds(5, 3, 3);
  const Graph c5 = cycle_graph(5);
  const Clause block = blocking_clause(e.vars, c5);
  EXPECT_EQ(block.size(), 10u);
  for (Literal lit : block) {
    const int v = std::abs(lit);
    EXPECT_TRUE(e.vars.edges.contains(v));
  }
}

TEST(Dimacs, HeaderMatchesContentAndRoundTrips) {
  const Encoding e = encode_ds(7, 3, 4);
  const std::string text = to_dimacs(e.formula, &e.vars);
  const Encoding again = encode_ds(7, 3, 4);
  EXPECT_EQ(text, to_dimacs(again.formula, &again.vars));
  EXPECT_EQ(text.rfind(std::string(kEncodingVersionLine), 0), 0u);

  std::istringstream lines(text);
  std::string line;
  int declared_vars = -1;
  std::size_t declared_clauses = 0, clause_lines = 0;
  int max_var = 0;
  while (std::getline(lines, line)) {
    if (line.starts_with("c")) continue;
    if (line.starts_with("p cnf")) {
      std::istringstream h(line.substr(5));
      h >> declared_vars >> declared_clauses;
      continue;
    }
    ++clause_lines;
    std::istringstream c(line);
    int lit = 0, last = 1;
    while (c >> lit) {
      max_var = std::max(max_var, std::abs(lit));
      last = lit;
    }
    EXPECT_EQ(last, 0);
  }
  EXPECT_EQ(declared_vars, e.formula.num_vars());
  EXPECT_EQ(declared_clauses, e.formula.size());
  EXPECT_EQ(clause_lines, declared_clauses);
  EXPECT_LE(max_var, declared_vars);

  std::istringstream is(text);
  const ParsedDimacs parsed = parse_dimacs(is);
  EXPECT_EQ(parsed.formula.clauses(), e.formula.clauses());
  ASSERT_TRUE(parsed.vars.has_value());
  EXPECT_EQ(*parsed.vars, e.vars);
  EXPECT_EQ(to_dimacs(parsed.formula, &*parsed.vars), text);
}

TEST(Dimacs, PlainInputAndErrors) {
  std::istringstream plain("c hello\np cnf 2 2\n1 -2 0\n2 0\n");
  const ParsedDimacs p = parse_dimacs(plain);
  EXPECT_EQ(p.formula.size(), 2u);
  EXPECT_FALSE(p.vars.has_value());
  std::istringstream bad("p cnf 1 1\n2 0\n");
  EXPECT_THROW(parse_dimacs(bad), ParseError);
  std::istringstream short_count("p cnf 2 3\n1 0\n");
  EXPECT_THROW(parse_dimacs(short_count), ParseError);
}

TEST(Formula, RejectsMalformedClauses) {
  CnfFormula f;
  f.set_num_vars(3);
  f.begin_group(ClauseGroup::kGoodness);
  EXPECT_THROW(f.add({}), InvalidArgument);
  EXPECT_THROW(f.add({1, -1}), InvalidArgument);
  EXPECT_THROW(f.add({4}), InvalidArgument);
  EXPECT_THROW(f.add({0}), InvalidArgument);
  f.add({1, 2});
  EXPECT_EQ(f.count(ClauseGroup::kGoodness), 1u);
}
