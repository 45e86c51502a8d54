#include <doctest.h>

#include "spcap/oracle.hpp"
#include "test_util.hpp"

using namespace spcap;

TEST_CASE("oracle finds the hand optimum") {
  const Instance inst = testutil::tiny1();
  const OracleResult res = brute_force_opt(inst);
  CHECK(res.objective == doctest::Approx(10.0));
  // several single-base solutions tie at 10; any of them must serve the
  // terminal with a one-base cluster
  CHECK(res.solution.served[0]);
  CHECK(res.solution.cluster[0].size() == 1);
  CHECK(res.power_vectors == 9);  // (|L|+1)^|B| = 3^2
  CHECK(check_feasibility(inst, res.solution).empty());
}

TEST_CASE("oracle on an unservable instance leaves everything off") {
  const OracleResult res = brute_force_opt(testutil::tiny_unservable());
  CHECK(res.objective == doctest::Approx(0.0));
  CHECK(!res.solution.served[0]);
}

TEST_CASE("oracle objective matches objective_value on generated instances") {
  for (int i = 1; i <= 4; ++i) {
    const Instance inst = testutil::tiny_suite(i);
    const OracleResult res = brute_force_opt(inst);
    CHECK(res.objective ==
          doctest::Approx(objective_value(inst, res.solution)));
    CHECK(check_feasibility(inst, res.solution).empty());
  }
}

TEST_CASE("oracle refuses instances beyond its caps") {
  Instance inst = testutil::tiny1();
  inst.num_bases = 16;
  inst.atten = Eigen::MatrixXd::Constant(1, 16, 0.1);
  CHECK(validate_instance(inst).empty());
  CHECK_THROWS_AS(brute_force_opt(inst), OracleCapExceeded);

  OracleCaps caps;
  caps.max_power_vectors = 4;  // tiny1 needs 9
  CHECK_THROWS_AS(brute_force_opt(testutil::tiny1(), caps), OracleCapExceeded);
}
