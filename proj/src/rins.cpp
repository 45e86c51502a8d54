#include "spcap/rins.hpp"

#include <stdexcept>

#include "spcap/solver.hpp"

namespace spcap {

CandidateSolution mod_rins(const Instance& inst, const SpcapModels& models,
                           const CandidateSolution& start,
                           const Eigen::VectorXd& lp_point,
                           const RinsConfig& cfg, double* work) {
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon < 0.5))
    throw std::invalid_argument("mod_rins: epsilon must be in [0, 0.5)");
  if (!(cfg.time_limit > 0.0))
    throw std::invalid_argument("mod_rins: time_limit must be > 0");
  const MipModel& model = models.bigm_gci;
  const int n = model.num_vars();
  if (lp_point.size() != n)
    throw std::invalid_argument("mod_rins: lp_point has wrong dimension");

  const Eigen::VectorXd s = to_variable_vector(model, start);
  BnbConfig bnb;
  bnb.fixings.assign(n, -1);
  for (int j = 0; j < n; ++j) {
    if (s(j) < 0.5 && lp_point(j) <= cfg.epsilon)
      bnb.fixings[j] = 0;
    else if (s(j) > 0.5 && lp_point(j) >= 1.0 - cfg.epsilon)
      bnb.fixings[j] = 1;
  }
  bnb.has_cutoff = true;
  bnb.cutoff = objective_value(inst, start);
  bnb.work_limit = cfg.time_limit * kWorkUnitsPerSecond;

  const MipResult mip = solve_mip(model, bnb);
  if (work) *work += mip.work;
  if (!mip.has_incumbent) return start;

  // read power levels and clusters off the incumbent, re-derive the flags
  std::vector<int> level(inst.num_bases, 0);
  for (int b = 0; b < inst.num_bases; ++b)
    for (int l = 1; l <= inst.num_levels(); ++l)
      if (mip.x(model.z(b, l)) > 0.5) level[b] = l;
  std::vector<std::vector<int>> cluster(inst.num_terminals);
  for (int t = 0; t < inst.num_terminals; ++t)
    for (int b = 0; b < inst.num_bases; ++b)
      if (mip.x(model.y(t, b)) > 0.5) cluster[t].push_back(b);
  CandidateSolution improved =
      derive_full_solution(inst, std::move(level), std::move(cluster));
  if (objective_value(inst, improved) <= bnb.cutoff) return start;
  return improved;
}

CandidateSolution mod_rins(const Instance& inst, const CandidateSolution& start,
                           const Eigen::VectorXd& lp_point,
                           const RinsConfig& cfg) {
  return mod_rins(inst, build_models(inst), start, lp_point, cfg, nullptr);
}

}  // namespace spcap
