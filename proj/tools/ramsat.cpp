// ramsat: command-line front end for doubly saturated Ramsey-good graph search.
//
// Graphs travel between subcommands as graph6 lines on stdin/stdout, e.g.
//   ramsat construct r4t --t 9 | ramsat verify --s 4 --t 9
//   ramsat encode --n 13 --s 3 --t 5 -o f.cnf && ramsat solve f.cnf
//
// Exit status: 0 definitive answer, 2 some solver call came back UNKNOWN, 1 usage or
// input error.

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramsat/constructions.hpp"
#include "ramsat/encoder.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/oracle.hpp"
#include "ramsat/poset.hpp"
#include "ramsat/report.hpp"
#include "ramsat/saturation.hpp"
#include "ramsat/solver.hpp"

namespace {

using namespace ramsat;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

struct Globals {
  int jobs = 0;
  std::string config_path;
  std::string solver_cmd;
  int time_limit_s = 0;
  bool deterministic = false;
  std::string report_path;
  std::vector<std::string> argv;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SolverConfig solver_config(const Globals& g) {
  std::optional<SolverConfig> cfg;
  if (!g.config_path.empty()) cfg = SolverConfig::load(g.config_path);
  else cfg = SolverConfig::from_env();
  if (!g.solver_cmd.empty()) {
    if (!cfg) cfg = SolverConfig{};
    std::istringstream words(g.solver_cmd);
    cfg->command.assign(std::istream_iterator<std::string>(words), std::istream_iterator<std::string>());
  }
  if (!cfg) throw UsageError("no solver configured: pass --config, --solver or set RAMSAT_SOLVER");
  if (g.time_limit_s > 0) cfg->time_limit_s = g.time_limit_s;
  if (g.jobs > 0) cfg->parallel_jobs = g.jobs;
  cfg->validate();
  return *cfg;
}

void emit(const Globals& g, RunReport report, Clock::time_point start) {
  report.command = g.argv;
  if (!g.deterministic)
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  const std::string text = report.dump();
  if (g.report_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(g.report_path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + g.report_path);
  os << text;
}

std::vector<Graph> read_graph6_stream(std::istream& is) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot open " + path);
  return is;
}

json graph_list(const std::vector<Graph>& graphs) {
  json out = json::array();
  for (const auto& g : graphs) out.push_back(write_graph6(g));
  return out;
}

int status_exit(SolveStatus s) { return s == SolveStatus::kUnknown ? kExitUnknown : kExitOk; }

Graph certify_model(const VarMap& vm, const SolverResult& r) {
  Graph g = decode_model(vm, *r.model);
  const SaturationReport rep = is_doubly_saturated(g, vm.s, vm.t);
  if (!rep.doubly_saturated())
    throw IntegrityError("decoded graph " + write_graph6(g) + " is " + std::string(to_string(rep.verdict)));
  if (auto bad = certified_degree_violation(g, vm.s, vm.t)) throw IntegrityError("decoded graph violates " + *bad);
  return g;
}

// ---------------------------------------------------------------------------------------

int cmd_construct(const std::string& family, int t, int p, const std::string& spec_text, bool as_json) {
  Construction c;
  if (family == "r4t") {
    c = construct_r4t(t);
  } else if (family == "r3t") {
    c = construct_r3t(t);
  } else if (family == "paley") {
    c.spec = paley_spec(p);
    c.graph = paley(p);
  } else if (family == "circulant") {
    c.spec = CirculantSpec::parse(spec_text);
    c.graph = circulant(c.spec);
  } else {
    throw UsageError("unknown family '" + family + "' (expected r4t, r3t, paley or circulant)");
  }
  if (as_json) {
    std::cout << json{{"spec", to_json(c.spec)}, {"graph6", write_graph6(c.graph)}}.dump() << '\n';
  } else {
    std::cout << write_graph6(c.graph) << '\n';
  }
  return kExitOk;
}

int cmd_verify(int s, int t, const std::string& input, bool serial, bool no_symmetry) {
  check_regime(s, t);
  std::vector<Graph> graphs;
  if (input.empty() || input == "-") {
    graphs = read_graph6_stream(std::cin);
  } else {
    auto is = open_input(input);
    graphs = read_graph6_stream(is);
  }
  if (graphs.empty()) throw ParseError("no graph6 input");
  for (const auto& g : graphs) {
    const SaturationReport r = serial ? is_doubly_saturated_serial(g, s, t)
                                      : is_doubly_saturated(g, s, t, VerifyOptions{.use_rotation_symmetry = !no_symmetry});
    json j = to_json(r);
    j["graph6"] = write_graph6(g);
    j["n"] = g.order();
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_encode(int n, int s, int t, bool no_symmetry_break, const std::string& out_path, std::string varmap_path) {
  const Encoding enc = encode_ds(n, s, t, EncodeOptions{.symmetry_break = !no_symmetry_break});
  const std::string dimacs = to_dimacs(enc.formula, &enc.vars);
  if (out_path.empty() || out_path == "-") {
    std::cout << dimacs;
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw UsageError("cannot write " + out_path);
    os << dimacs;
    if (varmap_path.empty()) varmap_path = out_path + ".varmap.json";
  }
  if (!varmap_path.empty()) {
    std::ofstream vs(varmap_path, std::ios::binary);
    if (!vs) throw UsageError("cannot write " + varmap_path);
    vs << enc.vars.to_json().dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_solve(const Globals& g, const std::string& input, int n, int s, int t) {
  const auto start = Clock::now();
  const SolverConfig cfg = solver_config(g);
  RunReport report;
  report.config_digest = cfg.digest();
  if (n > 0) {
    const FindResult r = find_ds_graph(n, s, t, cfg);
    report.results = {{"n", n},
                      {"s", s},
                      {"t", t},
                      {"status", to_string(r.status)},
                      {"below_bound", r.below_bound},
                      {"dimacs_sha256", r.dimacs_digest},
                      {"stdout_sha256", r.solver.stdout_digest}};
    report.results["graph6"] = r.graph ? json(write_graph6(*r.graph)) : json(nullptr);
    if (r.status == SolveStatus::kUnknown) report.results["unknown_reason"] = r.solver.unknown_reason;
    emit(g, std::move(report), start);
    return status_exit(r.status);
  }

  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    auto is = open_input(input);
    text.assign(std::istreambuf_iterator<char>(is), {});
  }
  std::istringstream is(text);
  const ParsedDimacs parsed = parse_dimacs(is);
  const VarMap* vm = parsed.vars ? &*parsed.vars : nullptr;
  const SolverResult r = run_solver(parsed.formula, cfg, vm);
  report.results = {{"status", to_string(r.status)},
                    {"num_vars", parsed.formula.num_vars()},
                    {"num_clauses", parsed.formula.size()},
                    {"dimacs_sha256", sha256_hex(text)},
                    {"stdout_sha256", r.stdout_digest}};
  if (vm) {
    report.results["n"] = vm->n;
    report.results["s"] = vm->s;
    report.results["t"] = vm->t;
    report.results["graph6"] =
        r.status == SolveStatus::kSat ? json(write_graph6(certify_model(*vm, r))) : json(nullptr);
  }
  if (r.status == SolveStatus::kUnknown) report.results["unknown_reason"] = r.unknown_reason;
  emit(g, std::move(report), start);
  return status_exit(r.status);
}

int cmd_enumerate(const Globals& g, int n, int s, int t, int max_models, bool symmetry_break) {
  const auto start = Clock::now();
  const SolverConfig cfg = solver_config(g);
  const EnumerationResult r = enumerate_ds(n, s, t, cfg, max_models, symmetry_break);
  RunReport report;
  report.config_digest = cfg.digest();
  report.results = {{"n", n},
                    {"s", s},
                    {"t", t},
                    {"symmetry_break", symmetry_break},
                    {"labeled_models", r.labeled_models},
                    {"class_count", r.classes.size()},
                    {"classes", graph_list(r.classes)},
                    {"exhausted", r.exhausted},
                    {"last_status", to_string(r.last_status)},
                    {"dimacs_sha256", r.dimacs_digest}};
  emit(g, std::move(report), start);
  return r.last_status == SolveStatus::kUnknown ? kExitUnknown : kExitOk;
}

int cmd_search_min(const Globals& g, int s, int t, int n_max) {
  const auto start = Clock::now();
  const SolverConfig cfg = solver_config(g);
  const SearchResult r = search_min_n(s, t, n_max, cfg);
  RunReport report;
  report.config_digest = cfg.digest();
  report.results = to_json(r, !g.deterministic);
  report.results["s"] = s;
  report.results["t"] = t;
  report.results["n_max"] = n_max;
  emit(g, std::move(report), start);
  bool unknown = false;
  for (const auto& step : r.steps) unknown = unknown || step.status == SolveStatus::kUnknown;
  return unknown ? kExitUnknown : kExitOk;
}

int cmd_paley_scan(const Globals& g, const std::vector<int>& s_values, int p_max, bool full, bool serial) {
  const auto start = Clock::now();
  const PaleyCheck check = full ? PaleyCheck::kFull : PaleyCheck::kShortcut;
  json rows = json::array();
  for (int s : s_values) {
    const auto row = serial ? paley_scan_serial(s, p_max, check) : paley_scan(s, p_max, check);
    rows.push_back({{"s", s}, {"p", row ? json(row->p) : json(nullptr)}});
  }
  RunReport report;
  report.results = {{"p_max", p_max}, {"check", full ? "full" : "shortcut"}, {"rows", rows}};
  emit(g, std::move(report), start);
  return kExitOk;
}

int cmd_poset(const Globals& g, int s, int t, const std::string& input, int enumerate_n, const std::string& csv_path) {
  const auto start = Clock::now();
  std::vector<Graph> classes;
  if (enumerate_n > 0) {
    classes = enumerate_good_classes(enumerate_n, s, t);
  } else if (input.empty() || input == "-") {
    classes = load_good_classes(std::cin, s, t);
  } else {
    auto is = open_input(input);
    classes = load_good_classes(is, s, t);
  }
  const ComponentSummary summary = build_poset(classes, s, t);
  if (!csv_path.empty()) {
    std::ofstream os(csv_path, std::ios::binary);
    if (!os) throw UsageError("cannot write " + csv_path);
    os << component_plot_csv(summary);
  }
  RunReport report;
  report.results = summary.to_json();
  emit(g, std::move(report), start);
  return kExitOk;
}

int cmd_oracle(const Globals& g, int n, int s, int t, bool good_only) {
  const auto start = Clock::now();
  if (good_only) {
    for (const auto& c : enumerate_good_classes(n, s, t)) std::cout << write_graph6(c) << '\n';
    return kExitOk;
  }
  const std::vector<Graph> classes = brute_force_oracle(n, s, t);
  RunReport report;
  report.results = {{"n", n}, {"s", s}, {"t", t}, {"class_count", classes.size()}, {"classes", graph_list(classes)}};
  emit(g, std::move(report), start);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  g.argv.assign(argv + 1, argv + argc);

  CLI::App app{"Search and certification tools for doubly saturated Ramsey-good graphs", "ramsat"};
  app.set_version_flag("--version", std::string(RAMSAT_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs,-j", g.jobs, "Worker threads and concurrent solver runs")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config_path, "Solver config file (JSON or key=value)")->check(CLI::ExistingFile);
  app.add_option("--solver", g.solver_cmd, "Solver command; overrides config and RAMSAT_SOLVER");
  app.add_option("--time-limit", g.time_limit_s, "Per-call solver wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  app.add_flag("--deterministic", g.deterministic, "Omit wall-clock times from reports");
  app.add_option("--report", g.report_path, "Write the run report here instead of stdout");

  int n = 0, s = 0, t = 0, p = 0;
  std::string input, family, spec_text, out_path, varmap_path, csv_path;
  bool as_json = false, serial = false, no_symmetry = false, full = false, good_only = false;
  int max_models = 1000000, n_max = 0, p_max = 0, enumerate_n = 0;
  std::vector<int> s_values;

  auto* construct = app.add_subcommand("construct", "Emit a construction as graph6");
  construct->add_option("family", family, "r4t, r3t, paley or circulant")->required();
  construct->add_option("--t", t, "Parameter t for r4t / r3t");
  construct->add_option("--p", p, "Prime order for paley");
  construct->add_option("--spec", spec_text, "Circulant as \"C(n; d1,d2,...)\"");
  construct->add_flag("--json", as_json, "Print the spec and graph6 as JSON");

  auto* verify = app.add_subcommand("verify", "Check graph6 graphs for double saturation");
  verify->add_option("--s", s)->required();
  verify->add_option("--t", t)->required();
  verify->add_option("input", input, "graph6 file, one graph per line (default stdin)");
  verify->add_flag("--serial", serial, "Use the serial reference verifier");
  verify->add_flag("--no-symmetry", no_symmetry, "Disable the rotation-invariance reduction");

  auto* encode = app.add_subcommand("encode", "Write the DIMACS encoding");
  encode->add_option("--n", n)->required();
  encode->add_option("--s", s)->required();
  encode->add_option("--t", t)->required();
  encode->add_flag("--no-symmetry-break", no_symmetry, "Omit lexicographic symmetry breaking");
  encode->add_option("-o,--output", out_path, "DIMACS output file (default stdout)");
  encode->add_option("--varmap", varmap_path, "VarMap JSON sidecar (default <output>.varmap.json)");

  auto* solve = app.add_subcommand("solve", "Run the external solver on a DIMACS file or on (n,s,t)");
  solve->add_option("input", input, "DIMACS file (default stdin)");
  solve->add_option("--n", n);
  solve->add_option("--s", s);
  solve->add_option("--t", t);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate doubly saturated classes with blocking clauses");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--s", s)->required();
  enumerate->add_option("--t", t)->required();
  enumerate->add_option("--max-models", max_models)->check(CLI::PositiveNumber);
  bool enum_symmetry = false;
  enumerate->add_flag("--symmetry-break", enum_symmetry, "Keep only lex-leader labellings");

  auto* search = app.add_subcommand("search-min", "Smallest n admitting a doubly saturated graph");
  search->add_option("--s", s)->required();
  search->add_option("--t", t)->required();
  search->add_option("--n-max", n_max)->required();

  auto* scan = app.add_subcommand("paley-scan", "Smallest doubly saturated Paley graph per s");
  scan->add_option("--s", s_values, "One or more clique sizes")->required();
  scan->add_option("--p-max", p_max)->required();
  scan->add_flag("--full", full, "Use the full verifier instead of the symmetric shortcut");
  scan->add_flag("--serial", serial, "Sequential reference scan");

  auto* poset = app.add_subcommand("poset", "Edge-addition poset of good classes");
  poset->add_option("--s", s)->required();
  poset->add_option("--t", t)->required();
  poset->add_option("input", input, "graph6 file of good graphs (default stdin)");
  poset->add_option("--enumerate", enumerate_n, "Enumerate all good classes on this many vertices");
  poset->add_option("--csv", csv_path, "Write per-component rows as CSV");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference enumeration for n <= 8");
  oracle->add_option("--n", n)->required();
  oracle->add_option("--s", s)->required();
  oracle->add_option("--t", t)->required();
  oracle->add_flag("--good", good_only, "Print all good classes as graph6 instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
  if (g.jobs > 0) omp_set_num_threads(g.jobs);

  try {
    if (*construct) return cmd_construct(family, t, p, spec_text, as_json);
    if (*verify) return cmd_verify(s, t, input, serial, no_symmetry);
    if (*encode) return cmd_encode(n, s, t, no_symmetry, out_path, varmap_path);
    if (*solve) {
      if (n > 0 && (s == 0 || t == 0)) throw UsageError("solve --n also needs --s and --t");
      if (n > 0 && !input.empty()) throw UsageError("give either a DIMACS file or --n/--s/--t, not both");
      return cmd_solve(g, input, n, s, t);
    }
    if (*enumerate) return cmd_enumerate(g, n, s, t, max_models, enum_symmetry);
    if (*search) return cmd_search_min(g, s, t, n_max);
    if (*scan) return cmd_paley_scan(g, s_values, p_max, full, serial);
    if (*poset) return cmd_poset(g, s, t, input, enumerate_n, csv_path);
    if (*oracle) return cmd_oracle(g, n, s, t, good_only);
  } catch (const IntegrityError& e) {
    std::cerr << "ramsat: integrity failure: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "ramsat: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
