#include "spcap/bounds.hpp"

#include <set>
#include <utility>

namespace spcap {

namespace {

// identity of a serving-only cut, for duplicate suppression in the loop
using CutKey = std::pair<int, std::vector<std::pair<int, int>>>;

CutKey key_of(const GubCoverCut& cut) { return {cut.terminal, cut.serving}; }

BoundResult from_lp(const LpSolution& lp, int cut_count, int iterations) {
  BoundResult res;
  res.status = lp.status;
  res.cut_count = cut_count;
  res.iterations = iterations;
  res.work = lp.work;
  if (lp.status == LpStatus::Optimal) {
    res.value = lp.objective;
    res.point = lp.x;
  }
  return res;
}

}  // namespace

SpcapModels build_models(const Instance& inst) {
  SpcapModels m;
  m.bigm = build_bigM_model(inst);
  m.relaxed_gcis = enumerate_relaxed_gcis(inst);

  m.bigm_gci = m.bigm;
  for (const auto& cut : m.relaxed_gcis)
    m.bigm_gci.rows.push_back(cut_row(m.bigm, cut));

  // pi0: everything except the SIR rows, which the builder emits as the
  // first |T| rows of the big-M model
  m.pi0 = m.bigm_gci;
  m.pi0.rows.erase(m.pi0.rows.begin(), m.pi0.rows.begin() + inst.num_terminals);
  return m;
}

BoundResult pi_bound(const Instance& inst, const SpcapModels& models,
                     const PiBoundConfig& cfg) {
  MipModel model = models.pi0;
  std::set<CutKey> known;
  for (const auto& cut : models.relaxed_gcis) known.insert(key_of(cut));
  int cut_count = static_cast<int>(models.relaxed_gcis.size());

  double work = 0.0;
  LpSolution lp;
  int round = 0;
  for (;;) {
    ++round;
    lp = solve_lp(model);
    work += lp.work;
    if (lp.status != LpStatus::Optimal) break;
    if (round >= cfg.max_rounds) break;
    const auto cuts = separate_gci(inst, models.bigm, lp.x, cfg.separation);
    int added = 0;
    for (const auto& cut : cuts) {
      if (!known.insert(key_of(cut)).second) continue;
      model.rows.push_back(cut_row(models.bigm, cut));
      ++cut_count;
      ++added;
    }
    if (added == 0) break;
  }
  BoundResult res = from_lp(lp, cut_count, round);
  res.work = work;

  // The optimum is highly degenerate: z carries no objective weight, so the
  // solver lands on an all-zero vertex. Among the optimal points, pick one
  // with maximal power support instead — the point seeds the construction
  // trails, and an all-off reference would freeze the power phase. x gets a
  // larger weight so support on z never comes at the price of pushing x off
  // its optimal level. (v stays out of the secondary objective: the trails
  // never read it, and lifting it drags every linearization row into the
  // active set for nothing.)
  if (res.status == LpStatus::Optimal) {
    MipModel second = model;
    Row opt_row;
    opt_row.sense = RowSense::GE;
    opt_row.rhs = res.value - 1e-7 * std::max(1.0, std::abs(res.value));
    for (int j = 0; j < model.num_vars(); ++j)
      if (model.objective(j) != 0.0)
        opt_row.terms.emplace_back(j, model.objective(j));
    second.rows.push_back(std::move(opt_row));
    second.objective.setZero();
    for (int t = 0; t < model.T; ++t) second.objective(model.x(t)) = 2.0;
    for (int b = 0; b < model.B; ++b)
      for (int l = 1; l <= model.L; ++l) second.objective(model.z(b, l)) = 1.0;
    const LpSolution wide = solve_lp(second);
    res.work += wide.work;
    if (wide.status == LpStatus::Optimal) res.point = wide.x;
  }
  return res;
}

BoundResult pi_bound(const Instance& inst, const PiBoundConfig& cfg) {
  return pi_bound(inst, build_models(inst), cfg);
}

BoundResult bm_bound(const Instance& inst, const SpcapModels& models,
                     const Fixings& fixings) {
  (void)inst;
  return from_lp(solve_lp(models.bigm, fixings), 0, 1);
}

BoundResult strong_bm_bound(const Instance& inst, const SpcapModels& models,
                            const Fixings& fixings) {
  (void)inst;
  return from_lp(solve_lp(models.bigm_gci, fixings),
                 static_cast<int>(models.relaxed_gcis.size()), 1);
}

BoundResult strong_bm_bound(const Instance& inst, const Fixings& fixings) {
  return strong_bm_bound(inst, build_models(inst), fixings);
}

}  // namespace spcap
