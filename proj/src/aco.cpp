#include "spcap/aco.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "spcap/rins.hpp"
#include "spcap/solver.hpp"

namespace spcap {

namespace {

int sample(const Eigen::VectorXd& prob, Rng& rng) {
  const double r = rng.next_double();
  double acc = 0.0;
  for (int i = 0; i < prob.size(); ++i) {
    acc += prob(i);
    if (r < acc) return i;
  }
  return static_cast<int>(prob.size()) - 1;  // guard against rounding
}

void check_params(const HybridParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
    throw std::invalid_argument("hybrid: alpha must be in [0,1]");
  if (p.ants < 0 || p.moving_avg < 0 || p.loops < 1)
    throw std::invalid_argument("hybrid: bad ant/loop counts");
}

// apply a power move to the model fixings: base b emits at level l (0 = off)
void fix_power(const MipModel& model, Fixings& fix, int b, int l) {
  for (int k = 1; k <= model.L; ++k)
    fix[model.z(b, k)] = static_cast<signed char>(k == l ? 1 : 0);
}

// visit order of the cluster phase: terminals by descending revenue, bases
// by descending attenuation, ties to the lower index
std::vector<ClusterMove> cluster_order(const Instance& inst) {
  std::vector<int> terms(inst.num_terminals);
  std::iota(terms.begin(), terms.end(), 0);
  std::stable_sort(terms.begin(), terms.end(), [&](int a, int b) {
    return inst.revenue(a) > inst.revenue(b);
  });
  std::vector<ClusterMove> order;
  order.reserve(static_cast<size_t>(inst.num_terminals) * inst.num_bases);
  std::vector<int> bases(inst.num_bases);
  for (int t : terms) {
    std::iota(bases.begin(), bases.end(), 0);
    std::stable_sort(bases.begin(), bases.end(), [&](int a, int b) {
      return inst.atten(t, a) > inst.atten(t, b);
    });
    for (int b : bases) order.push_back({t, b, false});
  }
  return order;
}

}  // namespace

PheromoneTable init_pheromones(const Instance& inst, const MipModel& model,
                               const Eigen::VectorXd& lp_point) {
  PheromoneTable ph;
  ph.T = inst.num_terminals;
  ph.B = inst.num_bases;
  ph.L = inst.num_levels();
  ph.tau0.assign(ph.size(), 0.0);
  auto unit = [](double v) { return std::clamp(v, 0.0, 1.0); };
  for (int b = 0; b < ph.B; ++b) {
    double on = 0.0;
    for (int l = 1; l <= ph.L; ++l) {
      const double zv = lp_point(model.z(b, l));
      ph.tau0[ph.power_key(b, l)] = unit(zv);
      on += zv;
    }
    ph.tau0[ph.power_key(b, 0)] = unit(1.0 - on);
  }
  for (int t = 0; t < ph.T; ++t)
    for (int b = 0; b < ph.B; ++b) {
      const double yv = lp_point(model.y(t, b));
      ph.tau0[ph.cluster_key(t, b, true)] = unit(yv);
      ph.tau0[ph.cluster_key(t, b, false)] = unit(1.0 - yv);
    }
  ph.tau = ph.tau0;
  return ph;
}

Eigen::VectorXd normalize_minmax(const Eigen::VectorXd& raw) {
  if (raw.size() == 0) return raw;
  const double lo = raw.minCoeff();
  const double hi = raw.maxCoeff();
  if (hi - lo <= 1e-12) return Eigen::VectorXd::Ones(raw.size());
  return (raw.array() - lo) / (hi - lo);
}

Eigen::VectorXd move_probabilities(double alpha, const Eigen::VectorXd& tau,
                                   const Eigen::VectorXd& eta) {
  if (tau.size() != eta.size())
    throw std::invalid_argument("move_probabilities: size mismatch");
  Eigen::VectorXd score =
      (alpha * tau.array() + (1.0 - alpha) * eta.array()).max(0.0);
  const double top = score.maxCoeff();
  if (top <= 1e-15)
    return Eigen::VectorXd::Constant(score.size(), 1.0 / score.size());
  // every candidate here is feasible, so none may get probability zero;
  // flooring the score keeps a sliver of exploration on unfancied moves
  score = score.array().max(0.25 * top);
  return score / score.sum();
}

std::vector<PowerMove> feasible_power_moves(const Instance& inst,
                                            const ConstructionState& state) {
  std::vector<PowerMove> moves;
  for (int b = 0; b < inst.num_bases; ++b) {
    if (state.level[b] >= 0) continue;
    for (int l = 0; l <= inst.num_levels(); ++l) moves.push_back({b, l});
  }
  return moves;
}

std::vector<ClusterMove> feasible_cluster_moves(const Instance& inst,
                                                const ConstructionState& state) {
  std::vector<ClusterMove> moves;
  for (int t = 0; t < inst.num_terminals; ++t)
    for (int b = 0; b < inst.num_bases; ++b)
      if (state.member[static_cast<size_t>(t) * inst.num_bases + b] < 0) {
        moves.push_back({t, b, true});
        moves.push_back({t, b, false});
      }
  return moves;
}

void apply_power_move(const MipModel& model, Fixings& fixings,
                      const PowerMove& move) {
  fix_power(model, fixings, move.base, move.level);
}

void apply_cluster_move(const MipModel& model, Fixings& fixings,
                        const ClusterMove& move) {
  fixings[model.y(move.terminal, move.base)] =
      static_cast<signed char>(move.in ? 1 : 0);
}

double attractiveness(const Instance& inst, const SpcapModels& models,
                      const Fixings& fixings, double* work) {
  const BoundResult r = strong_bm_bound(inst, models, fixings);
  if (work) *work += r.work;
  return r.status == LpStatus::Optimal
             ? r.value
             : -std::numeric_limits<double>::infinity();
}

CandidateSolution construct_solution(const Instance& inst,
                                     const SpcapModels& models,
                                     const PheromoneTable& pheromones,
                                     const HybridParams& params, Rng& rng,
                                     std::vector<int>* moves_out,
                                     double* work) {
  check_params(params);
  const MipModel& model = models.bigm;
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  ConstructionState state;
  state.level.assign(B, -1);
  state.member.assign(static_cast<size_t>(inst.num_terminals) * B, -1);
  Fixings fix(model.num_vars(), -1);

  const bool want_eta = params.alpha < 1.0;
  auto bound_of = [&](const Fixings& f) {
    const BoundResult r = strong_bm_bound(inst, models, f);
    if (work) *work += r.work;
    return r;
  };

  // power phase: one base per step, moves over all undecided (base, level)
  for (int step = 0; step < B; ++step) {
    const auto moves = feasible_power_moves(inst, state);
    const int k = static_cast<int>(moves.size());
    Eigen::VectorXd tau(k), eta = Eigen::VectorXd::Zero(k);
    for (int i = 0; i < k; ++i)
      tau(i) = pheromones.tau[pheromones.power_key(moves[i].base, moves[i].level)];
    if (want_eta) {
      if (params.eta_mode == EtaMode::Exact) {
        Eigen::VectorXd raw(k);
        std::vector<char> ok(k, 0);
        double lo = 0.0;
        bool any = false;
        for (int i = 0; i < k; ++i) {
          Fixings f = fix;
          fix_power(model, f, moves[i].base, moves[i].level);
          const BoundResult r = bound_of(f);
          if (r.status == LpStatus::Optimal) {
            raw(i) = r.value;
            ok[i] = 1;
            lo = any ? std::min(lo, r.value) : r.value;
            any = true;
          }
        }
        if (any) {
          for (int i = 0; i < k; ++i)
            if (!ok[i]) raw(i) = lo;  // infeasible moves rank last
          eta = normalize_minmax(raw);
        }
      } else {
        const BoundResult r = bound_of(fix);
        if (r.status == LpStatus::Optimal) {
          Eigen::VectorXd raw(k);
          for (int i = 0; i < k; ++i) {
            const auto [b, l] = moves[i];
            if (l >= 1) {
              raw(i) = r.point(model.z(b, l));
            } else {
              double on = 0.0;
              for (int j = 1; j <= L; ++j) on += r.point(model.z(b, j));
              raw(i) = std::max(0.0, 1.0 - on);
            }
          }
          eta = normalize_minmax(raw);
        }
      }
    }
    const int pick = sample(move_probabilities(params.alpha, tau, eta), rng);
    const auto [b, l] = moves[pick];
    state.level[b] = l;
    fix_power(model, fix, b, l);
    if (moves_out) moves_out->push_back(pheromones.power_key(b, l));
  }

  // cluster phase: binary In/Out decision per (terminal, base) slot
  for (const ClusterMove& slot : cluster_order(inst)) {
    const int t = slot.terminal, b = slot.base;
    Eigen::VectorXd tau(2), eta = Eigen::VectorXd::Zero(2);
    tau(0) = pheromones.tau[pheromones.cluster_key(t, b, true)];
    tau(1) = pheromones.tau[pheromones.cluster_key(t, b, false)];
    if (want_eta) {
      Eigen::VectorXd raw(2);
      if (params.eta_mode == EtaMode::Exact) {
        bool all_ok = true;
        for (int i = 0; i < 2; ++i) {
          Fixings f = fix;
          f[model.y(t, b)] = static_cast<signed char>(i == 0 ? 1 : 0);
          const BoundResult r = bound_of(f);
          if (r.status == LpStatus::Optimal)
            raw(i) = r.value;
          else
            all_ok = false;
        }
        if (all_ok) eta = normalize_minmax(raw);
      } else {
        const BoundResult r = bound_of(fix);
        if (r.status == LpStatus::Optimal) {
          raw(0) = r.point(model.y(t, b));
          raw(1) = 1.0 - raw(0);
          eta = normalize_minmax(raw);
        }
      }
    }
    const int pick = sample(move_probabilities(params.alpha, tau, eta), rng);
    const bool in = pick == 0;
    state.member[static_cast<size_t>(t) * B + b] = in ? 1 : 0;
    fix[model.y(t, b)] = static_cast<signed char>(in ? 1 : 0);
    if (moves_out) moves_out->push_back(pheromones.cluster_key(t, b, in));
  }

  std::vector<std::vector<int>> cluster(inst.num_terminals);
  for (int t = 0; t < inst.num_terminals; ++t)
    for (int b = 0; b < B; ++b)
      if (state.member[static_cast<size_t>(t) * B + b] == 1)
        cluster[t].push_back(b);
  return derive_full_solution(inst, state.level, std::move(cluster));
}

void MovingAverage::push(double v) {
  values.push_back(v);
  while (static_cast<int>(values.size()) > width) values.pop_front();
}

double MovingAverage::mean() const {
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

void update_pheromones(PheromoneTable& table,
                       const std::vector<AntRecord>& batch, double bound,
                       MovingAverage& avg) {
  if (batch.empty()) return;
  double ref;
  if (avg.empty()) {
    ref = 0.0;
    for (const auto& ant : batch) ref += ant.value;
    ref /= static_cast<double>(batch.size());
  } else {
    ref = avg.mean();
  }
  const double denom = bound - ref;
  if (denom >= 1e-9) {
    for (const auto& ant : batch) {
      const double quality = 1.0 - (bound - ant.value) / denom;
      for (int key : ant.moves) {
        table.tau[key] += table.tau0[key] * quality;
        if (table.tau[key] < 0.0) table.tau[key] = 0.0;
      }
    }
  }
  for (const auto& ant : batch) avg.push(ant.value);
}

HybridResult run_hybrid(const Instance& inst, const SpcapModels& models,
                        const HybridParams& params,
                        const BoundResult* precomputed_bound) {
  check_params(params);
  const int ants = params.ants > 0 ? params.ants : (inst.num_bases + 1) / 2;
  const int psi = params.moving_avg > 0 ? params.moving_avg : ants;

  HybridResult res;
  BoundResult bound;
  if (precomputed_bound) {
    bound = *precomputed_bound;
  } else {
    bound = pi_bound(inst, models);
    res.work += bound.work;
  }
  if (bound.status != LpStatus::Optimal)
    throw std::runtime_error("run_hybrid: bound LP did not solve");
  res.bound_value = bound.value;
  res.bound_point = bound.point;

  PheromoneTable pheromones = init_pheromones(inst, models.bigm, bound.point);
  MovingAverage avg;
  avg.width = psi;

  // all-off baseline so the result is well defined under a tiny budget
  res.best = derive_full_solution(inst, std::vector<int>(inst.num_bases, 0),
                                  std::vector<std::vector<int>>(
                                      inst.num_terminals));
  res.best_value = objective_value(inst, res.best);
  res.best_ant = res.best;
  res.best_ant_value = res.best_value;

  const RinsConfig rins_cfg{params.rins_epsilon, params.rins_time};
  // Reference point for the improvement step. The relaxation optimum is
  // degenerate: z and v carry no objective weight and y only a negative one,
  // so any vertex pins them at extreme values and the agreement rule would
  // freeze the power profile and forbid cluster growth outright. Move those
  // coordinates off their bounds so epsilon controls the neighborhood width:
  // below 0.25 they all stay free and the step explores power and cluster
  // changes at will; at 0.3 and above the off-support variables get fixed
  // and the step reduces to a cheap completion of the ant's own support.
  Eigen::VectorXd rins_point = bound.point;
  {
    const MipModel& m = models.bigm;
    for (int b = 0; b < m.B; ++b)
      for (int l = 1; l <= m.L; ++l) rins_point(m.z(b, l)) = 0.25;
    for (int t = 0; t < m.T; ++t)
      for (int b = 0; b < m.B; ++b)
        for (int l = 1; l <= m.L; ++l) rins_point(m.v(t, b, l)) = 0.25;
    for (int t = 0; t < m.T; ++t)
      for (int b = 0; b < m.B; ++b) rins_point(m.y(t, b)) = 0.25;
  }
  auto elapsed = [&] { return res.work / kWorkUnitsPerSecond; };

  for (int loop = 1; loop <= params.loops; ++loop) {
    if (elapsed() > params.time_budget) break;
    std::vector<AntRecord> batch;
    for (int ant = 1; ant <= ants; ++ant) {
      if (elapsed() > params.time_budget) break;
      Rng rng(Rng::split(params.seed,
                         static_cast<std::uint64_t>(loop - 1) * ants + ant));
      AntRecord rec;
      const CandidateSolution walk = construct_solution(
          inst, models, pheromones, params, rng, &rec.moves, &res.work);
      rec.value = objective_value(inst, walk);
      if (rec.value > res.best_ant_value) {
        res.best_ant_value = rec.value;
        res.best_ant = walk;
      }
      const CandidateSolution improved =
          mod_rins(inst, models, walk, rins_point, rins_cfg, &res.work);
      const double improved_value = objective_value(inst, improved);
      if (improved_value > res.best_value) {
        res.best_value = improved_value;
        res.best = improved;
      }
      res.log.push_back({loop, ant, rec.value, improved_value, res.best_value,
                         elapsed()});
      batch.push_back(std::move(rec));
    }
    if (batch.empty()) break;
    update_pheromones(pheromones, batch, bound.value, avg);
    res.loops_run = loop;
  }
  return res;
}

HybridResult run_hybrid(const Instance& inst, const HybridParams& params) {
  return run_hybrid(inst, build_models(inst), params, nullptr);
}

}  // namespace spcap
