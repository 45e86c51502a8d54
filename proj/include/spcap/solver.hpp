#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spcap/model.hpp"

namespace spcap {

// Variable fixings: one entry per model variable, -1 free, 0 or 1 fixed.
// An empty vector means no fixings.
using Fixings = std::vector<signed char>;

inline Fixings no_fixings() { return {}; }

enum class LpStatus { Optimal, Infeasible, Unbounded };

// tolerance on row and bound satisfaction of a reported LP optimum
inline constexpr double kLpTol = 1e-7;

// Deterministic effort accounting: every simplex solve charges
// iterations * (active rows + 10) units. Budgets expressed in these units
// make "time"-limited runs reproducible; the constant below calibrates the
// units to roughly one wall-clock second on commodity hardware.
inline constexpr double kWorkUnitsPerSecond = 2e6;

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Eigen::VectorXd x;  // full variable space, valid when Optimal
  long iterations = 0;
  double work = 0.0;  // effort units spent
};

// Continuous relaxation: variables in [0,1], fixings as equalities.
// Deterministic (Dantzig pricing with a Bland fallback after stalling).
LpSolution solve_lp(const MipModel& model, const Fixings& fixings = {});

enum class MipStatus { Optimal, TimeLimit, CutoffExhausted, Infeasible };

struct BnbConfig {
  double time_limit = 1e30;  // wall-clock seconds, > 0
  double work_limit = 0.0;   // effort units, 0 = unlimited; deterministic
  bool has_cutoff = false;
  double cutoff = 0.0;    // incumbents must beat this by at least 1e-6
  double gap_tol = 1e-9;  // prune nodes with bound <= incumbent + gap_tol
  Fixings fixings;
};

struct MipResult {
  MipStatus status = MipStatus::Infeasible;
  bool has_incumbent = false;
  Eigen::VectorXd x;  // valid when has_incumbent
  double objective = 0.0;
  double best_bound = 0.0;
  long nodes = 0;
  double work = 0.0;  // effort units spent
};

// Branch-and-bound over the binary variables: best-bound node selection,
// branching on the most fractional variable (ties by lowest index).
// A time-out is a status, not an error.
MipResult solve_mip(const MipModel& model, const BnbConfig& config = {});

}  // namespace spcap
