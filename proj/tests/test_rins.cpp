#include <doctest.h>

#include "spcap/bounds.hpp"
#include "spcap/oracle.hpp"
#include "spcap/rins.hpp"
#include "test_util.hpp"

using namespace spcap;

namespace {

// reference point with every coordinate strictly inside (eps, 1-eps):
// nothing gets fixed, the improvement step searches the full model
Eigen::VectorXd open_point(const MipModel& m) {
  return Eigen::VectorXd::Constant(m.num_vars(), 0.5);
}

}  // namespace

TEST_CASE("improvement is monotone and reaches the optimum from all-off") {
  for (int i = 1; i <= 4; ++i) {
    const Instance inst = testutil::tiny_suite(i);
    const SpcapModels models = build_models(inst);
    const CandidateSolution start = derive_full_solution(
        inst, std::vector<int>(inst.num_bases, 0),
        std::vector<std::vector<int>>(inst.num_terminals));
    const double start_value = objective_value(inst, start);
    const CandidateSolution out =
        mod_rins(inst, models, start, open_point(models.bigm));
    const double out_value = objective_value(inst, out);
    CHECK(out_value >= start_value);
    CHECK(check_feasibility(inst, out).empty());
    // with an open reference point the neighborhood is the whole model
    CHECK(out_value ==
          doctest::Approx(brute_force_opt(inst).objective).epsilon(1e-6));
  }
}

TEST_CASE("an optimal start comes back unchanged in value") {
  const Instance inst = testutil::tiny_suite(2);
  const SpcapModels models = build_models(inst);
  const OracleResult oracle = brute_force_opt(inst);
  const CandidateSolution out =
      mod_rins(inst, models, oracle.solution, open_point(models.bigm));
  CHECK(objective_value(inst, out) == doctest::Approx(oracle.objective));
}

TEST_CASE("agreement fixings respect the reference point") {
  const Instance inst = testutil::tiny1();
  const SpcapModels models = build_models(inst);
  const MipModel& m = models.bigm;
  // reference point that pins everything to the all-off start except x
  Eigen::VectorXd point = Eigen::VectorXd::Zero(m.num_vars());
  point(m.x(0)) = 0.5;
  const CandidateSolution start =
      derive_full_solution(inst, {0, 0}, {{}});
  const CandidateSolution out = mod_rins(inst, models, start, point);
  // every z and y agrees at zero and is fixed there: no improvement possible
  CHECK(objective_value(inst, out) == doctest::Approx(0.0));
}

TEST_CASE("invalid configurations are rejected") {
  const Instance inst = testutil::tiny1();
  const SpcapModels models = build_models(inst);
  const CandidateSolution start = derive_full_solution(inst, {0, 0}, {{}});
  RinsConfig cfg;
  cfg.epsilon = 0.5;  // must be < 0.5
  CHECK_THROWS_AS(
      mod_rins(inst, models, start, open_point(models.bigm), cfg),
      std::invalid_argument);
  CHECK_THROWS_AS(
      mod_rins(inst, models, start, Eigen::VectorXd::Zero(3)),  // wrong size
      std::invalid_argument);
}

TEST_CASE("work accumulates and is deterministic") {
  const Instance inst = testutil::tiny_suite(1);
  const SpcapModels models = build_models(inst);
  const CandidateSolution start = derive_full_solution(
      inst, std::vector<int>(inst.num_bases, 0),
      std::vector<std::vector<int>>(inst.num_terminals));
  double w1 = 0.0, w2 = 0.0;
  mod_rins(inst, models, start, open_point(models.bigm), {}, &w1);
  mod_rins(inst, models, start, open_point(models.bigm), {}, &w2);
  CHECK(w1 > 0.0);
  CHECK(w1 == w2);
}
