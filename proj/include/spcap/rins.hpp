#pragma once

#include "spcap/bounds.hpp"
#include "spcap/formulation.hpp"
#include "spcap/instance.hpp"

namespace spcap {

struct RinsConfig {
  double epsilon = 0.01;    // agreement tolerance against the LP point
  double time_limit = 10.0; // effort budget in deterministic seconds
};

// Neighborhood improvement around a heuristic solution: fix every variable
// on which the solution and the reference LP point agree (zero with LP value
// <= epsilon, one with LP value >= 1 - epsilon), then run the exact solver
// on the cut-strengthened model with the solution's objective as cutoff.
// Returns an improving solution if one is found in time, otherwise the input
// unchanged; the result is never worse than the input. `work` (optional)
// accumulates solver effort.
CandidateSolution mod_rins(const Instance& inst, const SpcapModels& models,
                           const CandidateSolution& start,
                           const Eigen::VectorXd& lp_point,
                           const RinsConfig& cfg = {}, double* work = nullptr);

CandidateSolution mod_rins(const Instance& inst, const CandidateSolution& start,
                           const Eigen::VectorXd& lp_point,
                           const RinsConfig& cfg = {});

}  // namespace spcap
