#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsat/graph.hpp"

namespace ramsat {

/// A DIMACS literal: +v or -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

enum class ClauseGroup { kGoodness, kDegeneracy, kMaximality, kMinimality, kCardinality, kLex, kBlocking };
std::string_view to_string(ClauseGroup g);

/// Inclusive range of variable ids; empty when last < first.
struct VarRange {
  int first = 1;
  int last = 0;
  bool empty() const { return last < first; }
  int size() const { return empty() ? 0 : last - first + 1; }
  bool contains(int v) const { return v >= first && v <= last; }
  friend bool operator==(const VarRange&, const VarRange&) = default;
};

/// Hands out fresh variable ids in increasing order.
class VarAllocator {
 public:
  explicit VarAllocator(int first_free = 1) : next_(first_free) {}
  int fresh() { return next_++; }
  int peek() const { return next_; }
  int last_used() const { return next_ - 1; }

 private:
  int next_;
};

/// Variable layout of an encoding. Vertices are 0-based. Ranges are dense and ordered:
/// edge variables (lexicographic pairs), maximality witnesses grouped by pair, minimality
/// witnesses grouped by pair, counter auxiliaries, lex auxiliaries.
struct VarMap {
  int n = 0;
  int s = 0;
  int t = 0;
  bool symmetry_break = false;
  VarRange edges;
  VarRange max_witness;
  VarRange min_witness;
  VarRange counters;
  VarRange lex_aux;
  int num_vars = 0;

  int edge_var(int i, int j) const;
  /// p_{{i,j},k}: k lies in the (s-2)-clique saturating non-edge {i,j}.
  int max_witness_var(int i, int j, int k) const;
  /// q_{{i,j},k}: k lies in the independent (t-2)-set saturating edge {i,j}.
  int min_witness_var(int i, int j, int k) const;

  nlohmann::json to_json() const;
  static VarMap from_json(const nlohmann::json& j);

  friend bool operator==(const VarMap&, const VarMap&) = default;
};

struct ClauseBlock {
  ClauseGroup group;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class CnfFormula {
 public:
  int num_vars() const { return num_vars_; }
  void set_num_vars(int v) { num_vars_ = v; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<ClauseBlock>& blocks() const { return blocks_; }
  std::size_t size() const { return clauses_.size(); }

  /// Adds a clause to the current group. Rejects empty and tautological clauses and
  /// literals beyond num_vars (once num_vars is fixed).
  void add(Clause c);
  void begin_group(ClauseGroup g);
  std::size_t count(ClauseGroup g) const;

  /// Evaluates the formula under a total assignment (index = variable id).
  bool satisfied_by(std::span<const std::int8_t> values) const;
  /// Index of the first clause falsified by `values`, if any.
  std::optional<std::size_t> first_falsified(std::span<const std::int8_t> values) const;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
  std::vector<ClauseBlock> blocks_;
};

/// Result of a cardinality request. `unsatisfiable` marks k > |vars|, in which case
/// `clauses` holds exactly one empty clause.
struct CardinalityEncoding {
  std::vector<Clause> clauses;
  bool unsatisfiable = false;
};

/// At least k of `vars` are true, as a sequential counter with registers
/// r(i,j) => "at least j of the first i literals". k = 0 emits nothing, k = 1 a single
/// disjunction, k = |vars| one unit clause per variable; otherwise at most 3*|vars|*k clauses.
CardinalityEncoding at_least_k(std::span<const Literal> vars, int k, VarAllocator& alloc);

/// a <=_lex b (false < true): (¬a1 ∨ b1), y <-> (a1 <-> b1), then the encoding of the
/// tails with every clause guarded by ¬y. Length L gives 5L-4 clauses and L-1 auxiliaries.
std::vector<Clause> lex_leq(std::span<const Literal> a, std::span<const Literal> b, VarAllocator& alloc);

struct EncodeOptions {
  bool symmetry_break = true;
  /// Refuse when the goodness clauses alone would exceed this.
  std::uint64_t clause_budget = 50'000'000;
};

struct Encoding {
  CnfFormula formula;
  VarMap vars;
};

/// CNF satisfiable iff a doubly saturated R(s,t)-good graph on n vertices exists.
Encoding encode_ds(int n, int s, int t, const EncodeOptions& opts = {});

/// Binomial coefficient, nullopt on 64-bit overflow.
std::optional<std::uint64_t> binomial(std::uint64_t n, std::uint64_t k);

/// Edge {i,j} present iff e_{i,j} is true. `values[v]` is 1 (true), 0 (false) or -1
/// (unassigned); index 0 is unused. Throws InvalidArgument on an unassigned edge variable.
Graph decode_model(const VarMap& vm, std::span<const std::int8_t> values);

/// Clause excluding exactly this labelled graph (negation of its edge assignment).
Clause blocking_clause(const VarMap& vm, const Graph& g);

inline constexpr std::string_view kEncodingVersionLine = "c ramsat-encoding 1";

/// DIMACS with a VarMap comment preamble ("c edge i j v", "c pmax i j k v", "c pmin i j k v").
void write_dimacs(std::ostream& os, const CnfFormula& f, const VarMap* vm = nullptr);
std::string to_dimacs(const CnfFormula& f, const VarMap* vm = nullptr);

struct ParsedDimacs {
  CnfFormula formula;
  std::optional<VarMap> vars;  // recovered from the preamble when present
};
/// Parses plain DIMACS CNF, recovering the VarMap from a ramsat preamble if present.
ParsedDimacs parse_dimacs(std::istream& is);

}  // namespace ramsat
