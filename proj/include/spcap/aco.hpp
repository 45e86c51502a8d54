#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "spcap/bounds.hpp"
#include "spcap/formulation.hpp"
#include "spcap/instance.hpp"
#include "spcap/rng.hpp"

namespace spcap {

// -------------------------------------------------------------------------
// Pheromone trails. One value per elementary construction move:
//   power moves   - set base b to level l, l in 0..|L| (0 = off)
//   cluster moves - put base b In or Out of terminal t's cluster
// -------------------------------------------------------------------------
struct PheromoneTable {
  int T = 0, B = 0, L = 0;
  std::vector<double> tau;   // current trail values
  std::vector<double> tau0;  // initial values, the deposit scale

  int power_key(int b, int l) const { return b * (L + 1) + l; }
  int cluster_key(int t, int b, bool in) const {
    return B * (L + 1) + (t * B + b) * 2 + (in ? 0 : 1);
  }
  int size() const { return B * (L + 1) + T * B * 2; }
};

// Trails start at the reference LP point's degree of support for each move,
// clamped to [0, 1]: z values for power moves (off = 1 - their sum), y
// values for In and the complement for Out.
PheromoneTable init_pheromones(const Instance& inst, const MipModel& model,
                               const Eigen::VectorXd& lp_point);

// Probability of each candidate move: normalized convex combination
// alpha * tau + (1 - alpha) * eta. All-zero scores fall back to uniform.
// Callers pass eta already normalized to [0, 1].
Eigen::VectorXd move_probabilities(double alpha, const Eigen::VectorXd& tau,
                                   const Eigen::VectorXd& eta);

// Min-max normalization to [0, 1]; a constant vector maps to all ones.
Eigen::VectorXd normalize_minmax(const Eigen::VectorXd& raw);

// -------------------------------------------------------------------------
// Construction state: partial power assignment, then partial clusters.
// -------------------------------------------------------------------------
struct ConstructionState {
  std::vector<int> level;           // per base, -1 undecided, else 0..|L|
  std::vector<signed char> member;  // per (t*B+b), -1 undecided, 0 out, 1 in
};

struct PowerMove {
  int base = -1;
  int level = -1;  // 0..|L|
};
struct ClusterMove {
  int terminal = -1;
  int base = -1;
  bool in = false;
};

// Undecided bases times all levels.
std::vector<PowerMove> feasible_power_moves(const Instance& inst,
                                            const ConstructionState& state);

// In and Out for every undecided (terminal, base) slot.
std::vector<ClusterMove> feasible_cluster_moves(const Instance& inst,
                                                const ConstructionState& state);

// Translation of moves into model fixings over the shared variable layout.
void apply_power_move(const MipModel& model, Fixings& fixings,
                      const PowerMove& move);
void apply_cluster_move(const MipModel& model, Fixings& fixings,
                        const ClusterMove& move);

// Raw attractiveness of a state: the cut-strengthened relaxation bound
// under the state's fixings, -inf when the fixings are contradictory (the
// caller excludes such moves). `work` (optional) accumulates solver effort.
double attractiveness(const Instance& inst, const SpcapModels& models,
                      const Fixings& fixings, double* work = nullptr);

// Attractiveness backends: Exact scores each candidate move by its own
// bound LP; Cached solves one LP for the current state and reads the move's
// variable value off it.
enum class EtaMode { Exact, Cached };

struct HybridParams {
  double alpha = 0.5;     // pheromone weight in [0, 1]
  int ants = 0;           // per batch; 0 = ceil(|B| / 2)
  int moving_avg = 0;     // psi; 0 = ants
  int loops = 50;         // outer iterations
  double rins_epsilon = 0.01;
  double rins_time = 10.0;    // deterministic seconds per improvement call
  EtaMode eta_mode = EtaMode::Exact;
  std::uint64_t seed = 1;
  double time_budget = 1e30;  // deterministic seconds for the whole run
};

// One ant walk: power phase base by base, then cluster membership terminal
// by terminal (terminals in descending revenue, bases in descending
// attenuation, ties to the lower index). Records the move keys taken.
// `work` (optional) accumulates solver effort.
CandidateSolution construct_solution(const Instance& inst,
                                     const SpcapModels& models,
                                     const PheromoneTable& pheromones,
                                     const HybridParams& params, Rng& rng,
                                     std::vector<int>* moves_out = nullptr,
                                     double* work = nullptr);

// -------------------------------------------------------------------------
// Pheromone update
// -------------------------------------------------------------------------
struct AntRecord {
  double value = 0.0;      // objective of the ant's constructed solution
  std::vector<int> moves;  // move keys the ant used
};

struct MovingAverage {
  int width = 1;
  std::deque<double> values;

  void push(double v);
  double mean() const;  // 0 when empty
  bool empty() const { return values.empty(); }
};

// Relative-quality update: each move of ant k receives
//   tau0 * (1 - (bound - value_k) / (bound - avg))
// where avg is the moving average of recent ant values (bootstrap: the
// batch mean). Deposits are skipped when bound - avg is not positive, and
// trails are clamped at zero. The batch values are pushed into the average.
void update_pheromones(PheromoneTable& table,
                       const std::vector<AntRecord>& batch, double bound,
                       MovingAverage& avg);

// -------------------------------------------------------------------------
// Full hybrid run
// -------------------------------------------------------------------------
struct HybridLogRow {
  int iteration = 0;  // 1-based outer loop
  int ant = 0;        // 1-based within the loop
  double ant_value = 0.0;
  double rins_value = 0.0;
  double best_so_far = 0.0;
  double elapsed_seconds = 0.0;  // deterministic effort clock
};

struct HybridResult {
  CandidateSolution best;
  double best_value = 0.0;
  CandidateSolution best_ant;  // best constructed solution, pre-improvement
  double best_ant_value = 0.0;
  double bound_value = 0.0;    // upper bound used for the updates
  Eigen::VectorXd bound_point; // its LP point (reference for the trails)
  std::vector<HybridLogRow> log;
  int loops_run = 0;
  double work = 0.0;
};

// Bound computation, trail initialization, then `loops` batches of ants
// each followed by the improvement step and a pheromone update. Pass a
// precomputed bound to share it across runs on the same instance.
HybridResult run_hybrid(const Instance& inst, const HybridParams& params);
HybridResult run_hybrid(const Instance& inst, const SpcapModels& models,
                        const HybridParams& params,
                        const BoundResult* precomputed_bound = nullptr);

}  // namespace spcap
