#pragma once

#include <string>
#include <vector>

#include "spcap/aco.hpp"
#include "spcap/formulation.hpp"
#include "spcap/instance.hpp"

namespace spcap {

// One row of the benchmark summary: service counts before and after the
// improvement step, coverage, the largest serving cluster, and the solver
// telemetry of the run.
struct RunReport {
  std::string id;
  int num_terminals = 0;
  int num_bases = 0;
  int served_aco = 0;     // |T*| of the best constructed solution
  int served_hybrid = 0;  // |T*| of the final solution
  double coverage_pct = 0.0;
  int max_cluster = 0;    // largest serving cluster of the final solution
  double objective = 0.0;
  double bound = 0.0;
  double elapsed_seconds = 0.0;  // deterministic effort clock
};

int served_count(const CandidateSolution& sol);
int max_cluster_size(const CandidateSolution& sol);

RunReport make_report(std::string id, const Instance& inst,
                      const HybridResult& result);

// CSV round-trip; numbers carry enough digits for exact recovery.
std::string report_csv_header();
std::string to_csv_row(const RunReport& report);
RunReport from_csv_row(const std::string& line);  // throws ParseError
std::string to_csv(const std::vector<RunReport>& reports);
std::vector<RunReport> from_csv(const std::string& text);

// Aligned plain-text table of the same rows.
std::string render_table(const std::vector<RunReport>& reports);

// Per-ant trace of a run in CSV form.
std::string run_log_csv(const std::vector<HybridLogRow>& log);

}  // namespace spcap
