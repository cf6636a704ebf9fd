#include "ramsat/solver.hpp"

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <thread>

#include "ramsat/canonical.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/saturation.hpp"

extern char** environ;

namespace ramsat {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat: return "SAT";
    case SolveStatus::kUnsat: return "UNSAT";
    case SolveStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SolverConfig

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_positive(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') throw ParseError("config: " + key + " must be an integer");
  return static_cast<int>(v);
}

}  // namespace

void SolverConfig::validate() const {
  if (command.empty() || command.front().empty()) throw InvalidArgument("solver command is empty");
  if (time_limit_s <= 0) throw InvalidArgument("time_limit_s must be positive");
  if (parallel_jobs <= 0) throw InvalidArgument("parallel_jobs must be positive");
}

SolverConfig SolverConfig::parse(std::string_view text) {
  SolverConfig cfg;
  const std::string body = trim(text);
  if (body.starts_with("{")) {
    try {
      const auto j = nlohmann::json::parse(body);
      for (const auto& [key, value] : j.items()) {
        if (key == "solver_cmd") {
          cfg.command = value.is_array() ? value.get<std::vector<std::string>>() : split_words(value.get<std::string>());
        } else if (key == "time_limit_s") {
          cfg.time_limit_s = value.get<int>();
        } else if (key == "parallel_jobs") {
          cfg.parallel_jobs = value.get<int>();
        } else if (key == "workdir") {
          cfg.workdir = value.get<std::string>();
        } else if (key == "keep_files") {
          cfg.keep_files = value.get<bool>();
        } else {
          throw ParseError("config: unknown key '" + key + "'");
        }
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("config: malformed JSON: ") + e.what());
    }
  } else {
    std::istringstream is(body);
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
      ++line_no;
      const std::string l = trim(line.substr(0, line.find('#')));
      if (l.empty()) continue;
      const auto eq = l.find('=');
      if (eq == std::string::npos) throw ParseError("config line " + std::to_string(line_no) + ": expected key=value");
      const std::string key = trim(l.substr(0, eq));
      const std::string value = trim(l.substr(eq + 1));
      if (key == "solver_cmd") {
        cfg.command = split_words(value);
      } else if (key == "time_limit_s") {
        cfg.time_limit_s = parse_positive(key, value);
      } else if (key == "parallel_jobs") {
        cfg.parallel_jobs = parse_positive(key, value);
      } else if (key == "workdir") {
        cfg.workdir = value;
      } else if (key == "keep_files") {
        cfg.keep_files = value == "true" || value == "1";
      } else {
        throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
      }
    }
  }
  cfg.validate();
  return cfg;
}

SolverConfig SolverConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read solver config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<SolverConfig> SolverConfig::from_env() {
  const char* cmd = std::getenv("RAMSAT_SOLVER");
  if (!cmd || trim(cmd).empty()) return std::nullopt;
  SolverConfig cfg;
  cfg.command = split_words(cmd);
  return cfg;
}

nlohmann::json SolverConfig::to_json() const {
  return {{"solver_cmd", command}, {"time_limit_s", time_limit_s}, {"parallel_jobs", parallel_jobs}};
}

std::string SolverConfig::digest() const {
  return sha256_hex(nlohmann::json{{"solver_cmd", command}, {"time_limit_s", time_limit_s}}.dump());
}

// ---------------------------------------------------------------------------
// Running a solver

SolverResult parse_solver_output(std::string_view output, int num_vars) {
  SolverResult r;
  bool have_status = false;
  std::vector<std::int8_t> values(static_cast<std::size_t>(num_vars) + 1, -1);
  std::istringstream is{std::string(output)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.starts_with("s ")) {
      const std::string verdict = trim(line.substr(2));
      if (verdict == "SATISFIABLE") {
        r.status = SolveStatus::kSat;
      } else if (verdict == "UNSATISFIABLE") {
        r.status = SolveStatus::kUnsat;
      } else if (verdict == "UNKNOWN" || verdict == "INDETERMINATE") {
        r.status = SolveStatus::kUnknown;
        r.unknown_reason = "solver reported UNKNOWN";
      } else {
        throw SolverError("unrecognised solver status line: " + line);
      }
      have_status = true;
    } else if (line.starts_with("v ") || line == "v") {
      std::istringstream ls(line.substr(1));
      long lit = 0;
      while (ls >> lit) {
        if (lit == 0) break;
        const long var = std::labs(lit);
        if (var > num_vars) throw SolverError("solver assigned unknown variable " + std::to_string(var));
        values[static_cast<std::size_t>(var)] = lit > 0 ? 1 : 0;
      }
    }
  }
  if (!have_status) throw SolverError("solver output has no status line");
  if (r.status == SolveStatus::kSat) r.model = std::move(values);
  return r;
}

namespace {

std::atomic<int> g_run_counter{0};

struct ProcessOutcome {
  bool timed_out = false;
  bool launched = true;
  int wait_status = 0;
  std::int64_t wall_ms = 0;
};

ProcessOutcome run_process(const std::vector<std::string>& argv, const std::filesystem::path& out_path,
                           int time_limit_s) {
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, out_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, "/dev/null", O_WRONLY, 0);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  std::vector<char*> args;
  for (const auto& a : argv) args.push_back(const_cast<char*>(a.c_str()));
  args.push_back(nullptr);

  const auto start = std::chrono::steady_clock::now();
  pid_t pid = 0;
  const int rc = posix_spawnp(&pid, args[0], &actions, &attr, args.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  if (rc != 0) {
    if (rc == ENOENT || rc == EACCES) throw SolverError("solver executable not found: " + argv[0]);
    throw SolverError("cannot launch solver: " + std::string(std::strerror(rc)));
  }

  ProcessOutcome out;
  const auto deadline = start + std::chrono::seconds(time_limit_s);
  auto pause = std::chrono::milliseconds(1);
  while (true) {
    const pid_t w = waitpid(pid, &out.wait_status, WNOHANG);
    if (w == pid) break;
    if (w < 0 && errno != EINTR) throw SolverError("waitpid failed: " + std::string(std::strerror(errno)));
    if (std::chrono::steady_clock::now() >= deadline) {
      kill(-pid, SIGKILL);
      kill(pid, SIGKILL);
      while (waitpid(pid, &out.wait_status, 0) < 0 && errno == EINTR) {
      }
      out.timed_out = true;
      break;
    }
    std::this_thread::sleep_for(pause);
    pause = std::min(pause * 2, std::chrono::milliseconds(50));
  }
  out.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<std::string> solver_argv(const SolverConfig& cfg, const std::string& cnf_path) {
  std::vector<std::string> argv;
  bool substituted = false;
  for (std::string a : cfg.command) {
    for (auto pos = a.find("{cnf}"); pos != std::string::npos; pos = a.find("{cnf}")) {
      a.replace(pos, 5, cnf_path);
      substituted = true;
    }
    argv.push_back(std::move(a));
  }
  if (!substituted) argv.push_back(cnf_path);
  return argv;
}

SolverResult run_dimacs(const std::string& dimacs, const CnfFormula& f, const SolverConfig& cfg) {
  cfg.validate();
  if (f.size() == 0) throw InvalidArgument("refusing to solve an empty formula");
  std::filesystem::create_directories(cfg.workdir);
  const std::string stem = "ramsat-" + std::to_string(::getpid()) + "-" + std::to_string(g_run_counter++);
  const auto cnf_path = cfg.workdir / (stem + ".cnf");
  const auto out_path = cfg.workdir / (stem + ".out");
  {
    std::ofstream os(cnf_path, std::ios::binary);
    os << dimacs;
    if (!os) throw SolverError("cannot write " + cnf_path.string());
  }
  auto cleanup = [&] {
    if (cfg.keep_files) return;
    std::error_code ec;
    std::filesystem::remove(cnf_path, ec);
    std::filesystem::remove(out_path, ec);
  };

  ProcessOutcome proc;
  try {
    proc = run_process(solver_argv(cfg, cnf_path.string()), out_path, cfg.time_limit_s);
  } catch (...) {
    cleanup();
    throw;
  }
  std::string output;
  {
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    output = ss.str();
  }
  cleanup();

  SolverResult r;
  if (proc.timed_out) {
    r.unknown_reason = "timeout";
  } else if (WIFSIGNALED(proc.wait_status)) {
    r.unknown_reason = "crash: signal " + std::to_string(WTERMSIG(proc.wait_status));
  } else {
    if (WIFEXITED(proc.wait_status) && WEXITSTATUS(proc.wait_status) == 127 && output.empty())
      throw SolverError("solver executable not found: " + cfg.command.front());
    r = parse_solver_output(output, f.num_vars());
  }
  r.wall_time_ms = proc.wall_ms;
  r.stdout_digest = sha256_hex(output);
  if (r.status == SolveStatus::kSat) {
    if (auto bad = f.first_falsified(*r.model))
      throw IntegrityError("solver model falsifies clause " + std::to_string(*bad));
  }
  return r;
}

}  // namespace

SolverResult run_solver(const CnfFormula& f, const SolverConfig& cfg, const VarMap* vm) {
  return run_dimacs(to_dimacs(f, vm), f, cfg);
}

// ---------------------------------------------------------------------------
// Campaigns

namespace {

Graph certify(const VarMap& vm, const SolverResult& r) {
  Graph g = decode_model(vm, *r.model);
  const SaturationReport rep = is_doubly_saturated(g, vm.s, vm.t);
  if (!rep.doubly_saturated())
    throw IntegrityError("decoded model " + write_graph6(g) + " is not doubly saturated (" +
                         std::string(to_string(rep.verdict)) + ")");
  return g;
}

}  // namespace

FindResult find_ds_graph(int n, int s, int t, const SolverConfig& cfg) {
  FindResult out;
  if (n < ds_lower_bound(s, t)) {
    out.status = SolveStatus::kUnsat;
    out.below_bound = true;
    return out;
  }
  const Encoding enc = encode_ds(n, s, t, EncodeOptions{.symmetry_break = true});
  const std::string dimacs = to_dimacs(enc.formula, &enc.vars);
  out.dimacs_digest = sha256_hex(dimacs);
  out.solver = run_dimacs(dimacs, enc.formula, cfg);
  out.status = out.solver.status;
  if (out.status == SolveStatus::kSat) out.graph = certify(enc.vars, out.solver);
  return out;
}

EnumerationResult enumerate_ds(int n, int s, int t, const SolverConfig& cfg, int max_models, bool symmetry_break) {
  if (max_models < 1) throw InvalidArgument("max_models must be positive");
  EnumerationResult out;
  if (n < ds_lower_bound(s, t)) {
    out.exhausted = true;
    out.last_status = SolveStatus::kUnsat;
    return out;
  }
  Encoding enc = encode_ds(n, s, t, EncodeOptions{.symmetry_break = symmetry_break});
  out.dimacs_digest = sha256_hex(to_dimacs(enc.formula, &enc.vars));
  std::map<std::vector<std::uint8_t>, Graph> classes;
  enc.formula.begin_group(ClauseGroup::kBlocking);
  while (out.labeled_models < max_models) {
    const SolverResult r = run_solver(enc.formula, cfg, &enc.vars);
    out.last_status = r.status;
    if (r.status == SolveStatus::kUnsat) {
      out.exhausted = true;
      break;
    }
    if (r.status == SolveStatus::kUnknown) break;
    const Graph g = certify(enc.vars, r);
    ++out.labeled_models;
    CanonicalLabeling c = canonical_form(g);
    if (!classes.contains(c.canon_bytes)) classes.emplace(std::move(c.canon_bytes), g.relabeled(c.perm));
    enc.formula.add(blocking_clause(enc.vars, g));
  }
  for (auto& [bytes, g] : classes) out.classes.push_back(std::move(g));
  return out;
}

SearchResult search_min_n(int s, int t, int n_max, const SolverConfig& cfg) {
  const int lo = ds_lower_bound(s, t);
  if (n_max < lo)
    throw InvalidArgument("n_max = " + std::to_string(n_max) + " is below the lower bound " + std::to_string(lo));
  cfg.validate();
  SearchResult out;
  bool saw_unknown = false;
  for (int base = lo; base <= n_max; base += cfg.parallel_jobs) {
    const int top = std::min(n_max, base + cfg.parallel_jobs - 1);
    std::vector<std::future<FindResult>> jobs;
    for (int n = base; n <= top; ++n)
      jobs.push_back(std::async(cfg.parallel_jobs > 1 ? std::launch::async : std::launch::deferred,
                                [=, &cfg] { return find_ds_graph(n, s, t, cfg); }));
    for (int n = base; n <= top; ++n) {
      FindResult r = jobs[static_cast<std::size_t>(n - base)].get();
      SearchStep step{n, r.status, r.solver.wall_time_ms, r.solver.stdout_digest, r.dimacs_digest, std::nullopt};
      if (r.graph) step.graph6 = write_graph6(*r.graph);
      out.steps.push_back(step);
      if (r.status == SolveStatus::kUnknown) saw_unknown = true;
      if (r.status == SolveStatus::kSat) {
        out.n_min = n;
        out.graph = std::move(r.graph);
        out.conditional = saw_unknown;
        // Finish outstanding futures so no solver outlives the call.
        for (int rest = n + 1; rest <= top; ++rest) {
          auto& fut = jobs[static_cast<std::size_t>(rest - base)];
          if (cfg.parallel_jobs > 1) fut.wait();
        }
        return out;
      }
    }
  }
  out.conditional = saw_unknown;
  return out;
}

}  // namespace ramsat
