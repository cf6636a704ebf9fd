#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ramsat/canonical.hpp"
#include "ramsat/constructions.hpp"
#include "ramsat/errors.hpp"
#include "ramsat/oracle.hpp"
#include "ramsat/saturation.hpp"
#include "ramsat/solver.hpp"

using namespace ramsat;

namespace {

std::optional<SolverConfig> configured() {
  auto cfg = SolverConfig::from_env();
  if (cfg) cfg->time_limit_s = 120;
  return cfg;
}

#define REQUIRE_SOLVER(cfg)                                    \
  const auto cfg = configured();                               \
  if (!cfg) GTEST_SKIP() << "RAMSAT_SOLVER is not set"

}  // namespace

TEST(SolverConfigParsing, KeyValueAndJson) {
  const auto kv = SolverConfig::parse("# comment\nsolver_cmd = cadical -q\ntime_limit_s=30\nparallel_jobs=2\n");
  EXPECT_EQ(kv.command, (std::vector<std::string>{"cadical", "-q"}));
  EXPECT_EQ(kv.time_limit_s, 30);
  EXPECT_EQ(kv.parallel_jobs, 2);
  const auto js = SolverConfig::parse(R"({"solver_cmd": "cadical -q", "time_limit_s": 30, "parallel_jobs": 2})");
  EXPECT_EQ(js.command, kv.command);
  EXPECT_EQ(js.digest(), kv.digest());
  EXPECT_NE(SolverConfig::parse("solver_cmd=cadical\ntime_limit_s=31").digest(), kv.digest());
  EXPECT_ANY_THROW(SolverConfig::parse("time_limit_s=-1\nsolver_cmd=x"));
  EXPECT_THROW(SolverConfig::parse("bogus_key=1"), ParseError);
}

TEST(SolverOutput, ParsesCompetitionFormat) {
  const auto sat = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
  EXPECT_EQ(sat.status, SolveStatus::kSat);
  ASSERT_TRUE(sat.model.has_value());
  EXPECT_EQ((*sat.model)[1], 1);
  EXPECT_EQ((*sat.model)[2], 0);
  EXPECT_EQ((*sat.model)[3], 1);
  EXPECT_EQ(parse_solver_output("s UNSATISFIABLE\n", 3).status, SolveStatus::kUnsat);
  EXPECT_EQ(parse_solver_output("s UNKNOWN\n", 3).status, SolveStatus::kUnknown);
  EXPECT_THROW(parse_solver_output("nothing useful\n", 3), SolverError);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Solver, TrivialFormulas) {
  REQUIRE_SOLVER(cfg);
  CnfFormula f;
  f.set_num_vars(1);
  f.begin_group(ClauseGroup::kGoodness);
  f.add({1});
  const auto sat = run_solver(f, *cfg);
  EXPECT_EQ(sat.status, SolveStatus::kSat);
  EXPECT_EQ((*sat.model)[1], 1);
  f.add({-1});
  EXPECT_EQ(run_solver(f, *cfg).status, SolveStatus::kUnsat);
}

TEST(Solver, MissingBinaryIsAnError) {
  SolverConfig cfg;
  cfg.command = {"/nonexistent/solver-binary"};
  CnfFormula f;
  f.set_num_vars(1);
  f.begin_group(ClauseGroup::kGoodness);
  f.add({1});
  EXPECT_THROW(run_solver(f, cfg), SolverError);
}

TEST(Solver, TimeoutReportsUnknown) {
  SolverConfig cfg;
  cfg.command = {"sh", "-c", "sleep 30", "{cnf}"};
  cfg.time_limit_s = 1;
  CnfFormula f;
  f.set_num_vars(1);
  f.begin_group(ClauseGroup::kGoodness);
  f.add({1});
  const auto r = run_solver(f, cfg);
  EXPECT_EQ(r.status, SolveStatus::kUnknown);
  EXPECT_EQ(r.unknown_reason, "timeout");
  EXPECT_LT(r.wall_time_ms, 10000);
}

TEST(Solver, LyingSolverIsCaught) {
  SolverConfig cfg;
  cfg.command = {"sh", "-c", "printf 's SATISFIABLE\\nv -1 0\\n'", "{cnf}"};
  CnfFormula f;
  f.set_num_vars(1);
  f.begin_group(ClauseGroup::kGoodness);
  f.add({1});
  EXPECT_THROW(run_solver(f, cfg), IntegrityError);
}

TEST(Harness, FiveCycleEnumeration) {
  REQUIRE_SOLVER(cfg);
  const auto r = enumerate_ds(5, 3, 3, *cfg, 100);
  EXPECT_TRUE(r.exhausted);
  EXPECT_EQ(r.labeled_models, 12);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_TRUE(isomorphic(r.classes[0], cycle_graph(5)));
}

TEST(Harness, ThirteenVerticesThreeFive) {
  REQUIRE_SOLVER(cfg);
  const auto found = find_ds_graph(13, 3, 5, *cfg);
  ASSERT_EQ(found.status, SolveStatus::kSat);
  EXPECT_TRUE(isomorphic(*found.graph, circulant(CirculantSpec::make(13, {1, 5}))));
  // 13!/26 labelled models exist; lex-leader symmetry breaking keeps a handful.
  const auto all = enumerate_ds(13, 3, 5, *cfg, 100000, /*symmetry_break=*/true);
  EXPECT_TRUE(all.exhausted);
  ASSERT_EQ(all.classes.size(), 1u);
  EXPECT_TRUE(isomorphic(all.classes[0], circulant(CirculantSpec::make(13, {1, 5}))));
  EXPECT_EQ(enumerate_ds(8, 3, 4, *cfg, 100).classes.size(), 0u);
}

TEST(Harness, BelowBoundSkipsTheSolver) {
  SolverConfig cfg;
  cfg.command = {"/nonexistent/solver-binary"};
  const auto r = find_ds_graph(4, 3, 3, cfg);
  EXPECT_EQ(r.status, SolveStatus::kUnsat);
  EXPECT_TRUE(r.below_bound);
}

TEST(Harness, SearchMinimum) {
  REQUIRE_SOLVER(cfg);
  const auto r33 = search_min_n(3, 3, 8, *cfg);
  ASSERT_TRUE(r33.n_min.has_value());
  EXPECT_EQ(*r33.n_min, 5);
  const auto r35 = search_min_n(3, 5, 15, *cfg);
  ASSERT_TRUE(r35.n_min.has_value());
  EXPECT_EQ(*r35.n_min, 13);
  EXPECT_FALSE(r35.conditional);
  EXPECT_EQ(r35.steps.size(), 13u - ds_lower_bound(3, 5) + 1);
  const auto r34 = search_min_n(3, 4, 8, *cfg);
  EXPECT_FALSE(r34.n_min.has_value());
  for (const auto& step : r34.steps) EXPECT_EQ(step.status, SolveStatus::kUnsat);
}

TEST(Harness, EncodingAgreesWithOracle) {
  REQUIRE_SOLVER(cfg);
  for (auto [s, t] : {std::pair{3, 3}, std::pair{3, 4}}) {
    for (int n = std::max(4, t); n <= 7; ++n) {
      const bool expected = !brute_force_oracle(n, s, t).empty();
      for (bool sym : {true, false}) {
        const Encoding enc = encode_ds(n, s, t, EncodeOptions{.symmetry_break = sym});
        const auto r = run_solver(enc.formula, *cfg, &enc.vars);
        ASSERT_NE(r.status, SolveStatus::kUnknown);
        EXPECT_EQ(r.status == SolveStatus::kSat, expected) << n << ' ' << s << ' ' << t << ' ' << sym;
        if (r.status == SolveStatus::kSat) {
          const Graph g = decode_model(enc.vars, *r.model);
          EXPECT_TRUE(oracle::doubly_saturated(g, s, t));
          EXPECT_FALSE(certified_degree_violation(g, s, t).has_value());
        }
      }
    }
  }
}

TEST(Harness, LabelledModelCountMatchesOracle) {
  REQUIRE_SOLVER(cfg);
  // Every labelled DS graph on 5 vertices for (3,3) is a C5 labelling: 5!/10 = 12.
  int labelled = 0;
  for (EdgeMask m = 0; m < (EdgeMask{1} << 10); ++m)
    if (oracle::doubly_saturated(graph_from_mask(5, m), 3, 3)) ++labelled;
  EXPECT_EQ(labelled, 12);
  EXPECT_EQ(enumerate_ds(5, 3, 3, *cfg, 100).labeled_models, labelled);
}
