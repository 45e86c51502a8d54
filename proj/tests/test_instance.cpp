#include <doctest.h>

#include "spcap/instance.hpp"
#include "test_util.hpp"

using namespace spcap;

TEST_CASE("generator is deterministic and produces valid instances") {
  GenConfig cfg;
  cfg.num_terminals = 7;
  cfg.num_bases = 3;
  cfg.num_levels = 2;
  cfg.seed = 42;
  const Instance a = generate_instance(cfg);
  const Instance b = generate_instance(cfg);
  CHECK(validate_instance(a).empty());
  CHECK(a.num_terminals == 7);
  CHECK(a.num_bases == 3);
  CHECK(a.num_levels() == 2);
  CHECK(a.atten == b.atten);
  CHECK(a.delta == b.delta);
  CHECK(a.levels == b.levels);

  cfg.seed = 43;
  const Instance c = generate_instance(cfg);
  CHECK(a.atten != c.atten);
}

TEST_CASE("generator rejects bad configs") {
  GenConfig cfg;
  cfg.num_terminals = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg = GenConfig{};
  cfg.noise = 0.0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
  cfg = GenConfig{};
  cfg.num_levels = 0;
  CHECK_THROWS_AS(generate_instance(cfg), std::invalid_argument);
}

TEST_CASE("text round-trip is the identity") {
  const Instance inst = testutil::tiny_suite(5);
  const Instance back = load_instance(save_instance(inst));
  CHECK(back.num_terminals == inst.num_terminals);
  CHECK(back.num_bases == inst.num_bases);
  CHECK(back.levels == inst.levels);
  CHECK(back.noise == inst.noise);
  CHECK(back.atten == inst.atten);
  CHECK(back.delta == inst.delta);
  CHECK(back.revenue == inst.revenue);
  CHECK(back.coop_cost == inst.coop_cost);
  CHECK(save_instance(back) == save_instance(inst));
}

TEST_CASE("loader rejects malformed input") {
  CHECK_THROWS_AS(load_instance(""), ParseError);
  CHECK_THROWS_AS(load_instance("garbage\n"), ParseError);
  std::string text = save_instance(testutil::tiny1());
  text.resize(text.size() / 2);  // truncated file
  CHECK_THROWS_AS(load_instance(text), ParseError);
}

TEST_CASE("validate_instance reports broken invariants") {
  Instance inst = testutil::tiny1();
  CHECK(validate_instance(inst).empty());
  inst.noise = -1.0;
  CHECK(!validate_instance(inst).empty());

  inst = testutil::tiny1();
  inst.levels = {2.0, 1.0};  // not ascending
  CHECK(!validate_instance(inst).empty());

  inst = testutil::tiny1();
  inst.atten(0, 0) = 1.5;  // out of [0,1]
  CHECK(!validate_instance(inst).empty());
}

TEST_CASE("power_of maps level indices to the ladder") {
  const Instance inst = testutil::tiny1();
  CHECK(inst.power_of(0) == 0.0);
  CHECK(inst.power_of(1) == 1.0);
  CHECK(inst.power_of(2) == 2.0);
  CHECK(inst.p_max() == 2.0);
}
