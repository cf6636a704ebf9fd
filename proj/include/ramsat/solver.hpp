#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsat/encoder.hpp"
#include "ramsat/graph.hpp"

namespace ramsat {

/// The solver binary could not be started, or produced output that is neither a verdict
/// nor an interruption.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The solver claimed SAT with a model that falsifies the formula, or a decoded model
/// failed certification. Implicates the encoder or the solver; never retried.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How to invoke an external DIMACS solver. `command` is an argv template; an argument
/// equal to or containing "{cnf}" is replaced by the formula path, otherwise the path is
/// appended. The solver must print a competition-style "s ..." line and "v ..." lines.
struct SolverConfig {
  std::vector<std::string> command;
  int time_limit_s = 600;
  std::filesystem::path workdir = std::filesystem::temp_directory_path();
  int parallel_jobs = 1;
  bool keep_files = false;

  /// Throws InvalidArgument unless command is non-empty and limits are positive.
  void validate() const;

  /// Keys: solver_cmd (string, split on whitespace), time_limit_s, parallel_jobs, workdir,
  /// keep_files. Accepts a JSON object or key=value lines ('#' comments).
  static SolverConfig parse(std::string_view text);
  static SolverConfig load(const std::filesystem::path& path);
  /// Uses $RAMSAT_SOLVER as solver_cmd; nullopt when unset or empty.
  static std::optional<SolverConfig> from_env();

  nlohmann::json to_json() const;
  /// SHA-256 over the canonical JSON of the fields that affect results.
  std::string digest() const;
};

enum class SolveStatus { kSat, kUnsat, kUnknown };
std::string_view to_string(SolveStatus s);

struct SolverResult {
  SolveStatus status = SolveStatus::kUnknown;
  /// values[v] in {0, 1, -1 (unassigned)} for v in 1..num_vars; present iff SAT.
  std::optional<std::vector<std::int8_t>> model;
  std::int64_t wall_time_ms = 0;
  std::string stdout_digest;
  /// "timeout", "crash: signal N", "solver reported UNKNOWN" when status is UNKNOWN.
  std::string unknown_reason;
};

/// Writes DIMACS, runs the solver with a wall-clock limit (process group killed on expiry),
/// parses the verdict and checks any model clause by clause.
SolverResult run_solver(const CnfFormula& f, const SolverConfig& cfg, const VarMap* vm = nullptr);

/// Parses competition-format solver output. Throws SolverError when no status line exists.
SolverResult parse_solver_output(std::string_view output, int num_vars);

std::string sha256_hex(std::string_view data);

struct FindResult {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Graph> graph;  // certified doubly saturated when present
  bool below_bound = false;    // answered UNSAT from DS(s,t) >= 2s+2t-7 without solving
  SolverResult solver;
  std::string dimacs_digest;
};

/// Solve the existence encoding (symmetry breaking on), decode, and certify the graph
/// with the verifier; a certification failure throws IntegrityError.
FindResult find_ds_graph(int n, int s, int t, const SolverConfig& cfg);

struct EnumerationResult {
  std::vector<Graph> classes;  // canonical representatives ordered by canonical bytes
  int labeled_models = 0;
  bool exhausted = false;      // the final solve returned UNSAT
  SolveStatus last_status = SolveStatus::kUnknown;
  std::string dimacs_digest;   // of the initial formula
};

/// Enumerate labelled models with blocking clauses over the edge variables until UNSAT or
/// max_models; every model is certified. Symmetry breaking is off by default so the labelled
/// count is meaningful; turning it on keeps at least one labelling per class and makes
/// class enumeration feasible when the labelled count is astronomical.
EnumerationResult enumerate_ds(int n, int s, int t, const SolverConfig& cfg, int max_models,
                               bool symmetry_break = false);

struct SearchStep {
  int n = 0;
  SolveStatus status = SolveStatus::kUnknown;
  std::int64_t wall_time_ms = 0;
  std::string stdout_digest;
  std::string dimacs_digest;
  std::optional<std::string> graph6;
};

struct SearchResult {
  std::vector<SearchStep> steps;
  std::optional<int> n_min;
  std::optional<Graph> graph;
  /// true when some smaller n came back UNKNOWN, so n_min is only an upper bound.
  bool conditional = false;
};

/// Ascending scan over n from ds_lower_bound(s,t) to n_max, up to cfg.parallel_jobs
/// instances in flight; stops at the first SAT.
SearchResult search_min_n(int s, int t, int n_max, const SolverConfig& cfg);

}  // namespace ramsat
