#include <doctest.h>

#include "spcap/bounds.hpp"
#include "spcap/oracle.hpp"
#include "test_util.hpp"

using namespace spcap;

TEST_CASE("model bundle shares one variable layout") {
  const Instance inst = testutil::tiny1();
  const SpcapModels models = build_models(inst);
  CHECK(models.bigm.num_vars() == models.bigm_gci.num_vars());
  CHECK(models.bigm.num_vars() == models.pi0.num_vars());
  // pi0 drops exactly the |T| SIR rows
  CHECK(models.pi0.rows.size() + inst.num_terminals ==
        models.bigm_gci.rows.size());
}

TEST_CASE("bounds sandwich the true optimum") {
  for (int i = 1; i <= 6; ++i) {
    const Instance inst = testutil::tiny_suite(i);
    const SpcapModels models = build_models(inst);
    const double opt = brute_force_opt(inst).objective;
    const BoundResult pi = pi_bound(inst, models);
    const BoundResult strong = strong_bm_bound(inst, models);
    const BoundResult bm = bm_bound(inst, models);
    REQUIRE(pi.status == LpStatus::Optimal);
    REQUIRE(strong.status == LpStatus::Optimal);
    REQUIRE(bm.status == LpStatus::Optimal);
    CHECK(opt <= pi.value + 1e-6);
    CHECK(opt <= strong.value + 1e-6);
    CHECK(opt <= bm.value + 1e-6);
    CHECK(strong.value <= bm.value + 1e-6);  // extra rows only tighten
  }
}

TEST_CASE("pi_bound is deterministic") {
  const Instance inst = testutil::tiny_suite(4);
  const SpcapModels models = build_models(inst);
  const BoundResult a = pi_bound(inst, models);
  const BoundResult b = pi_bound(inst, models);
  CHECK(a.value == b.value);
  CHECK(a.point == b.point);
  CHECK(a.work == b.work);
}

TEST_CASE("the bound point is an optimal point with power support") {
  const Instance inst = testutil::tiny_suite(2);
  const SpcapModels models = build_models(inst);
  const BoundResult pi = pi_bound(inst, models);
  REQUIRE(pi.status == LpStatus::Optimal);
  CHECK(models.bigm.objective.dot(pi.point) == doctest::Approx(pi.value));
  double zsum = 0.0;
  for (int b = 0; b < models.bigm.B; ++b)
    for (int l = 1; l <= models.bigm.L; ++l)
      zsum += pi.point(models.bigm.z(b, l));
  CHECK(zsum > 0.5);  // not the all-off vertex
}

TEST_CASE("fixings only tighten the strong bound") {
  const Instance inst = testutil::tiny_suite(3);
  const SpcapModels models = build_models(inst);
  const double free_value = strong_bm_bound(inst, models).value;
  Fixings fix(models.bigm.num_vars(), -1);
  fix[models.bigm.x(0)] = 0;
  const BoundResult fixed = strong_bm_bound(inst, models, fix);
  REQUIRE(fixed.status == LpStatus::Optimal);
  CHECK(fixed.value <= free_value + 1e-9);
}

TEST_CASE("contradictory GUB fixings are infeasible") {
  const Instance inst = testutil::tiny1();
  const SpcapModels models = build_models(inst);
  Fixings fix(models.bigm.num_vars(), -1);
  fix[models.bigm.z(0, 1)] = 1;
  fix[models.bigm.z(0, 2)] = 1;  // two levels at once
  CHECK(strong_bm_bound(inst, models, fix).status == LpStatus::Infeasible);
}
