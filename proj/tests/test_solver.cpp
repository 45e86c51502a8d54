#include <doctest.h>

#include "spcap/formulation.hpp"
#include "spcap/oracle.hpp"
#include "spcap/solver.hpp"
#include "test_util.hpp"

using namespace spcap;

namespace {

// one-variable model: max x subject to x <= 0.5
MipModel half_model() {
  MipModel m;
  m.T = 1;
  m.objective = Eigen::VectorXd::Ones(1);
  Row r;
  r.terms = {{0, 1.0}};
  r.rhs = 0.5;
  m.rows.push_back(r);
  return m;
}

}  // namespace

TEST_CASE("LP respects rows and fixings") {
  const MipModel m = half_model();
  const LpSolution sol = solve_lp(m);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(0.5));
  CHECK(sol.x(0) == doctest::Approx(0.5));
  CHECK(sol.work > 0.0);

  Fixings fix(1, 0);
  const LpSolution fixed = solve_lp(m, fix);
  REQUIRE(fixed.status == LpStatus::Optimal);
  CHECK(fixed.objective == doctest::Approx(0.0));
}

TEST_CASE("contradictory fixings and rows are infeasible") {
  MipModel m = half_model();
  Fixings fix(1, 1);  // x = 1 but x <= 0.5
  CHECK(solve_lp(m, fix).status == LpStatus::Infeasible);
}

TEST_CASE("relaxation dominates the integer optimum on the hand instance") {
  const Instance inst = testutil::tiny1();
  const MipModel m = build_bigM_model(inst);
  const LpSolution lp = solve_lp(m);
  REQUIRE(lp.status == LpStatus::Optimal);
  CHECK(lp.objective >= 10.0 - 1e-6);
  for (const auto& row : m.rows) CHECK(row_satisfied(row, lp.x, kLpTol));
}

TEST_CASE("branch and bound matches the oracle") {
  const Instance inst = testutil::tiny1();
  const MipResult res = solve_mip(build_bigM_model(inst));
  REQUIRE(res.status == MipStatus::Optimal);
  CHECK(res.objective == doctest::Approx(10.0));
  CHECK(res.best_bound == doctest::Approx(10.0));
  CHECK(res.x(0) == 1.0);
}

TEST_CASE("cutoff at the optimum exhausts the tree") {
  const Instance inst = testutil::tiny1();
  BnbConfig cfg;
  cfg.has_cutoff = true;
  cfg.cutoff = 10.0;
  const MipResult res = solve_mip(build_bigM_model(inst), cfg);
  CHECK(res.status == MipStatus::CutoffExhausted);
  CHECK(!res.has_incumbent);

  cfg.cutoff = 9.0;  // an improvement over 9 exists
  const MipResult res2 = solve_mip(build_bigM_model(inst), cfg);
  REQUIRE(res2.status == MipStatus::Optimal);
  CHECK(res2.objective == doctest::Approx(10.0));
}

TEST_CASE("work limit yields a time-out status, not an error") {
  const Instance inst = testutil::tiny_suite(7);
  BnbConfig cfg;
  cfg.work_limit = 1.0;  // exhausted right after the root
  const MipResult res = solve_mip(build_bigM_model(inst), cfg);
  CHECK(res.status == MipStatus::TimeLimit);
}

TEST_CASE("MIP agrees with the oracle on generated instances") {
  for (int i = 1; i <= 5; ++i) {
    const Instance inst = testutil::tiny_suite(i);
    const OracleResult oracle = brute_force_opt(inst);
    const MipResult mip = solve_mip(build_bigM_model(inst));
    REQUIRE(mip.status == MipStatus::Optimal);
    CHECK(mip.objective == doctest::Approx(oracle.objective).epsilon(1e-6));
  }
}

TEST_CASE("LP work accounting is deterministic") {
  const MipModel m = build_bigM_model(testutil::tiny_suite(2));
  const LpSolution a = solve_lp(m);
  const LpSolution b = solve_lp(m);
  CHECK(a.work == b.work);
  CHECK(a.iterations == b.iterations);
  CHECK(a.x == b.x);
}
