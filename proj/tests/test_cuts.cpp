#include <doctest.h>

#include "spcap/bounds.hpp"
#include "spcap/cuts.hpp"
#include "spcap/formulation.hpp"
#include "spcap/solver.hpp"
#include "test_util.hpp"

using namespace spcap;

TEST_CASE("certification demands failure under full cooperation elsewhere") {
  const Instance easy = testutil::tiny1();
  // with base 1 cooperating at top power, base 0 capped anywhere still
  // leaves the terminal served, so no serving-only cut is certified
  CHECK(!cut_certified(easy, 0, {{0, 1}}));
  CHECK(!cut_certified(easy, 0, {{0, 2}}));

  const Instance hard = testutil::tiny_unservable();
  // SIR tops out at 18 < 30, every cap combination is certified
  CHECK(cut_certified(hard, 0, {{0, 2}, {1, 2}}));
  CHECK(cut_certified(hard, 0, {{0, 1}}));
}

TEST_CASE("the relaxed family is empty when every terminal is servable") {
  CHECK(enumerate_relaxed_gcis(testutil::tiny1()).empty());
}

TEST_CASE("unservable terminals get one top-cap cut per server") {
  const Instance hard = testutil::tiny_unservable();
  const auto cuts = enumerate_relaxed_gcis(hard);
  REQUIRE(cuts.size() == 2);  // one per base
  for (const auto& cut : cuts) {
    CHECK(cut.terminal == 0);
    REQUIRE(cut.serving.size() == 1);
    CHECK(cut.serving[0].second == 2);  // top cap
    CHECK(cut.interfering.empty());
    CHECK(is_valid_cut(hard, cut));
  }
}

TEST_CASE("cut rows have the documented shape") {
  const Instance hard = testutil::tiny_unservable();
  const MipModel m = build_bigM_model(hard);
  GubCoverCut cut;
  cut.terminal = 0;
  cut.serving = {{0, 2}, {1, 1}};
  REQUIRE(is_valid_cut(hard, cut));
  const Row row = cut_row(m, cut);
  CHECK(row.sense == RowSense::LE);
  CHECK(row.rhs == doctest::Approx(2.0));  // |serving| + |interfering|
  // x_t + v(0,0,1) + v(0,0,2) + v(0,1,1): caps bound the v sums
  CHECK(row.terms.size() == 4);
}

TEST_CASE("cut violation matches row activity minus rhs") {
  const Instance hard = testutil::tiny_unservable();
  const MipModel m = build_bigM_model(hard);
  GubCoverCut cut;
  cut.terminal = 0;
  cut.serving = {{0, 2}};
  Eigen::VectorXd point = Eigen::VectorXd::Zero(m.num_vars());
  CHECK(cut_violation(m, cut, point) == doctest::Approx(-1.0));
  point(m.x(0)) = 1.0;
  point(m.v(0, 0, 1)) = 1.0;
  point(m.v(0, 0, 2)) = 1.0;
  CHECK(cut_violation(m, cut, point) == doctest::Approx(2.0));
}

TEST_CASE("separation returns certified violated cuts sorted by violation") {
  const Instance hard = testutil::tiny_unservable();
  const MipModel m = build_bigM_model(hard);

  // integral all-zero point: nothing to cut
  CHECK(separate_gci(hard, m, Eigen::VectorXd::Zero(m.num_vars())).empty());

  // all-ones point: every serving-only cut is violated
  const auto cuts =
      separate_gci(hard, m, Eigen::VectorXd::Ones(m.num_vars()));
  REQUIRE(!cuts.empty());
  double prev = 1e30;
  for (const auto& cut : cuts) {
    CHECK(is_valid_cut(hard, cut));
    const double viol =
        cut_violation(m, cut, Eigen::VectorXd::Ones(m.num_vars()));
    CHECK(viol > 1e-6);
    CHECK(viol <= prev + 1e-12);  // sorted descending
    prev = viol;
  }
}

TEST_CASE("exhaustive validation rejects an unsound cut") {
  const Instance easy = testutil::tiny1();
  GubCoverCut cut;
  cut.terminal = 0;
  cut.serving = {{0, 2}};
  // base 0 at level 2 serves the terminal on its own, so forbidding that
  // combination cuts off a feasible solution
  CHECK(!is_valid_cut(easy, cut));
}

TEST_CASE("malformed cuts are rejected loudly") {
  const Instance inst = testutil::tiny1();
  GubCoverCut cut;
  cut.terminal = 5;  // out of range
  cut.serving = {{0, 1}};
  CHECK_THROWS_AS(is_valid_cut(inst, cut), std::invalid_argument);
  cut.terminal = 0;
  cut.serving = {{0, 3}};  // level beyond the ladder
  CHECK_THROWS_AS(is_valid_cut(inst, cut), std::invalid_argument);
  cut.serving = {{0, 0}};  // caps start at 1
  CHECK_THROWS_AS(is_valid_cut(inst, cut), std::invalid_argument);
  cut.serving = {{0, 1}, {0, 2}};  // duplicate base
  CHECK_THROWS_AS(is_valid_cut(inst, cut), std::invalid_argument);
  cut.serving.clear();  // nothing forbidden
  CHECK_THROWS_AS(is_valid_cut(inst, cut), std::invalid_argument);
}

TEST_CASE("cut_to_string is stable and readable") {
  GubCoverCut cut;
  cut.terminal = 3;
  cut.serving = {{0, 2}, {1, 1}};
  const std::string s = cut_to_string(cut);
  CHECK(s.find("GCI 3") != std::string::npos);
  CHECK(s.find("0:2") != std::string::npos);
  CHECK(s.find("1:1") != std::string::npos);
}
