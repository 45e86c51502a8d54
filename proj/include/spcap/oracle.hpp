#pragma once

#include <cstdint>

#include "spcap/formulation.hpp"
#include "spcap/instance.hpp"

namespace spcap {

struct OracleCaps {
  std::int64_t max_power_vectors = 1'000'000;  // (|L|+1)^|B| must not exceed
  int max_bases = 15;
};

struct OracleResult {
  double objective = 0.0;
  CandidateSolution solution;
  std::int64_t power_vectors = 0;  // count enumerated
};

struct OracleCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exhaustive ground-truth optimum. Enumerates every power vector; for a
// fixed power vector the SIR of terminal t depends only on t's own cluster,
// so each terminal independently picks the best serving subset of the
// powered-on bases (an off base adds no signal and only costs cooperation
// fees, so leaving it out of every cluster is optimal).
OracleResult brute_force_opt(const Instance& inst, const OracleCaps& caps = {});

}  // namespace spcap
