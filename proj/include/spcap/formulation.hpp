#pragma once

#include <string>
#include <vector>

#include "spcap/instance.hpp"
#include "spcap/model.hpp"

namespace spcap {

// A complete assignment of power levels and serving clusters, with the
// service flags derived from the SIR test. power_level[b] is 0 (off) or a
// 1-based index into the instance's level ladder.
struct CandidateSolution {
  std::vector<int> power_level;        // size |B|, values 0..|L|
  std::vector<std::vector<int>> cluster;  // size |T|, sorted base ids
  std::vector<char> served;            // size |T|

  bool in_cluster(int t, int b) const;
};

// relative feasibility tolerance of the SIR inequality
inline constexpr double kFeasTol = 1e-9;

// SIR of terminal t under the given power levels and serving cluster:
// sum of useful received power over noise plus interfering power.
double sir_value(const Instance& inst, const std::vector<int>& power_level,
                 const std::vector<int>& cluster, int t);

// SIR inequality in linear form, with a small relative tolerance.
bool is_served(const Instance& inst, const std::vector<int>& power_level,
               const std::vector<int>& cluster, int t);

// Per-terminal big-M: delta_t * sum_b a_tb * P_max + delta_t * N. Wide enough
// to deactivate the SIR row for any power configuration.
double big_m_value(const Instance& inst, int t);

// The (big-M SPCAP) binary linear model: objective, SIR rows, GUB rows and
// linearization rows. |T| + |B||L| + |T||B| + |T||B||L| variables,
// |T| + |B| + 3|T||B||L| rows.
MipModel build_bigM_model(const Instance& inst);

// Completes (power, cluster) with the objective-maximizing service flags.
CandidateSolution derive_full_solution(const Instance& inst,
                                       std::vector<int> power_level,
                                       std::vector<std::vector<int>> cluster);

double objective_value(const Instance& inst, const CandidateSolution& sol);

// Independent re-verification, without reference to any model matrix: every
// served terminal must pass the SIR test and the structural invariants must
// hold. Violations are data, not errors.
std::vector<std::string> check_feasibility(const Instance& inst,
                                           const CandidateSolution& sol);

// Full (x,z,y,v) vector of a candidate solution in the model's index space.
Eigen::VectorXd to_variable_vector(const MipModel& model,
                                   const CandidateSolution& sol);

// Solution file round-trip: `P b level` per base, `C t b1 b2 ...` per served
// terminal, `OBJ value` footer.
std::string save_solution(const Instance& inst, const CandidateSolution& sol);
CandidateSolution load_solution(const Instance& inst, const std::string& text);

}  // namespace spcap
