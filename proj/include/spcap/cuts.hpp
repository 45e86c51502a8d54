#pragma once

#include <string>
#include <vector>

#include "spcap/instance.hpp"
#include "spcap/model.hpp"

namespace spcap {

// One GUB cover inequality for terminal t:
//   x_t + sum_i sum_{l<=lambda_i} v_{t,b_i,l} + sum_i sum_{l>=q_i} z_{g_i,l}
//     <= |serving| + |interfering|
//
// The row forbids the combination "t served while every serving base sits in
// its cluster at a capped level (and every listed interferer emits at or
// above its floor)". Such a row is valid for the binary model only if t
// cannot be served under ANY completion of that combination; the worst case
// for the row is every unlisted base cooperating at top power, so validity
// is certified against that completion, not against the all-off one. A
// consequence is that interferer floors never produce rows that are not
// already implied by the serving-only row plus the GUB constraints, so the
// generators below emit serving-only rows; the interfering list is kept for
// hand-built rows and serialization.
struct GubCoverCut {
  int terminal = -1;
  std::vector<std::pair<int, int>> serving;      // (base, level cap >= 1)
  std::vector<std::pair<int, int>> interfering;  // (base, level floor >= 1)
};

// Linearized row of the cut in the model's variable space.
Row cut_row(const MipModel& model, const GubCoverCut& cut);

// LHS minus RHS of the cut row at a fractional point.
double cut_violation(const MipModel& model, const GubCoverCut& cut,
                     const Eigen::VectorXd& point);

// Sufficient validity certificate used by the generators: with the serving
// bases at exactly their caps and every other base cooperating at top power,
// t still fails the SIR test. Monotone in the caps.
bool cut_certified(const Instance& inst, int terminal,
                   const std::vector<std::pair<int, int>>& serving);

// Starting cut family: for every (terminal, server) pair the single
// undominated serving-only cut, i.e. the largest level cap that is still
// certified. Terminals that no single server can save even with full
// cooperation elsewhere yield a cut per server at the top cap.
std::vector<GubCoverCut> enumerate_relaxed_gcis(const Instance& inst);

struct SeparationConfig {
  int max_cluster_size = 2;  // |serving| enumeration cap
  int max_interferers = 2;   // accepted for call compatibility; floor rows
                             // are dominated and never emitted
  double tol_cut = 1e-6;     // minimum violation worth returning
};

// Bounded enumeration over serving sets and Pareto-maximal cap vectors;
// returns certified cuts violated by the point, sorted by violation.
std::vector<GubCoverCut> separate_gci(const Instance& inst,
                                      const MipModel& model,
                                      const Eigen::VectorXd& point,
                                      const SeparationConfig& cfg = {});

// Exhaustive validity check for tiny instances: every complete (z,y) with
// derived (x,v) must satisfy the cut row. Enumerates (|L|+1)^|B| power
// vectors times the terminal's cluster subsets; throws OracleCapExceeded
// beyond the documented caps and std::invalid_argument on malformed cuts.
bool is_valid_cut(const Instance& inst, const GubCoverCut& cut);

// Debug dump row: "GCI t | b1:l1 b2:l2 | g1:q1 ..."
std::string cut_to_string(const GubCoverCut& cut);

}  // namespace spcap
