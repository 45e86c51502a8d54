#include <doctest.h>

#include "spcap/report.hpp"
#include "test_util.hpp"

using namespace spcap;

namespace {

RunReport sample_report() {
  RunReport r;
  r.id = "run-01";
  r.num_terminals = 6;
  r.num_bases = 3;
  r.served_aco = 4;
  r.served_hybrid = 5;
  r.coverage_pct = 500.0 / 6.0;
  r.max_cluster = 2;
  r.objective = 3.8000000000000003;
  r.bound = 7.2;
  r.elapsed_seconds = 0.012345;
  return r;
}

}  // namespace

TEST_CASE("service counters") {
  const Instance inst = testutil::tiny1();
  CandidateSolution sol = derive_full_solution(inst, {2, 0}, {{0}});
  CHECK(served_count(sol) == 1);
  CHECK(max_cluster_size(sol) == 1);
  sol = derive_full_solution(inst, {0, 0}, {{0, 1}});
  CHECK(served_count(sol) == 0);
  // unserved clusters do not count towards the maximum
  CHECK(max_cluster_size(sol) == 0);
}

TEST_CASE("CSV round-trip is exact") {
  const std::vector<RunReport> rows = {sample_report()};
  const std::vector<RunReport> back = from_csv(to_csv(rows));
  REQUIRE(back.size() == 1);
  CHECK(back[0].id == rows[0].id);
  CHECK(back[0].num_terminals == rows[0].num_terminals);
  CHECK(back[0].coverage_pct == rows[0].coverage_pct);
  CHECK(back[0].objective == rows[0].objective);
  CHECK(back[0].bound == rows[0].bound);
  CHECK(back[0].elapsed_seconds == rows[0].elapsed_seconds);
  CHECK(to_csv(back) == to_csv(rows));
}

TEST_CASE("CSV parsing rejects malformed input") {
  CHECK_THROWS_AS(from_csv(""), ParseError);
  CHECK_THROWS_AS(from_csv("wrong,header\n"), ParseError);
  const std::string good = to_csv({sample_report()});
  CHECK_THROWS_AS(from_csv(good + "a,b\n"), ParseError);
  RunReport bad = sample_report();
  bad.id = "has,comma";
  CHECK_THROWS_AS(to_csv({bad}), ParseError);
}

TEST_CASE("table rendering carries the benchmark columns") {
  const std::string table = render_table({sample_report()});
  CHECK(table.find("|T*| (ACO)") != std::string::npos);
  CHECK(table.find("|T*| (ACO+RINS)") != std::string::npos);
  CHECK(table.find("Max size cluster") != std::string::npos);
  CHECK(table.find("run-01") != std::string::npos);
  CHECK(table.find("3.8000") != std::string::npos);
}

TEST_CASE("report of a hybrid run uses the deterministic clock") {
  const Instance inst = testutil::tiny1();
  HybridParams params;
  params.loops = 2;
  const HybridResult res = run_hybrid(inst, params);
  const RunReport rep = make_report("t1", inst, res);
  CHECK(rep.elapsed_seconds == res.work / kWorkUnitsPerSecond);
  CHECK(rep.objective == res.best_value);
  CHECK(rep.bound == res.bound_value);
  CHECK(rep.served_hybrid == served_count(res.best));
  // the run log is well formed CSV
  const std::string log = run_log_csv(res.log);
  CHECK(log.rfind("iteration,ant,", 0) == 0);
}
