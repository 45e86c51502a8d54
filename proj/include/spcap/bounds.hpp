#pragma once

#include <vector>

#include "spcap/cuts.hpp"
#include "spcap/formulation.hpp"
#include "spcap/instance.hpp"
#include "spcap/solver.hpp"

namespace spcap {

// Models shared by the bounding procedures, the construction heuristic and
// the improvement step. All three share the variable layout of `bigm`.
//   bigm      - the plain big-M model
//   bigm_gci  - big-M rows plus the starting cut family
//   pi0       - bigm_gci with the SIR rows removed (power-indexed relaxation)
struct SpcapModels {
  MipModel bigm;
  std::vector<GubCoverCut> relaxed_gcis;
  MipModel bigm_gci;
  MipModel pi0;
};

SpcapModels build_models(const Instance& inst);

struct BoundResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;       // valid upper bound when Optimal
  Eigen::VectorXd point;    // LP optimum in the bigm variable layout
  int cut_count = 0;        // cut rows in the final model
  int iterations = 0;       // cutting-plane rounds (1 for one-shot bounds)
  double work = 0.0;        // solver effort units spent
};

struct PiBoundConfig {
  int max_rounds = 50;
  SeparationConfig separation;
};

// Power-indexed bound: LP over pi0 strengthened by separated cuts in a
// cutting-plane loop until no violated cut is found or the round limit hits.
BoundResult pi_bound(const Instance& inst, const SpcapModels& models,
                     const PiBoundConfig& cfg = {});
BoundResult pi_bound(const Instance& inst, const PiBoundConfig& cfg = {});

// Big-M relaxation bound, optionally under variable fixings.
BoundResult bm_bound(const Instance& inst, const SpcapModels& models,
                     const Fixings& fixings = {});

// Cut-strengthened big-M relaxation bound under fixings; the node bound
// used as construction attractiveness. Infeasible fixings yield status
// Infeasible, which callers treat as "exclude this move".
BoundResult strong_bm_bound(const Instance& inst, const SpcapModels& models,
                            const Fixings& fixings = {});
BoundResult strong_bm_bound(const Instance& inst, const Fixings& fixings = {});

}  // namespace spcap
