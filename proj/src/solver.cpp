#include "spcap/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace spcap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDjTol = 1e-9;    // reduced-cost tolerance
constexpr double kPivTol = 1e-9;   // minimum pivot magnitude
constexpr double kBoundEps = 1e-12;

struct WorkRow {
  std::vector<std::pair<int, double>> terms;
  double rhs = 0.0;
};

// ---------------------------------------------------------------------------
// Presolve: substitute fixed variables, drop redundant rows, turn singleton
// rows into bounds, and iterate to a fixpoint. All rows are normalized to <=.
// ---------------------------------------------------------------------------

struct Prepared {
  bool infeasible = false;
  Eigen::VectorXd lo, up;      // original variable space
  std::vector<WorkRow> rows;   // reduced rows over original indices
};

Prepared presolve(const MipModel& model, const Fixings& fixings) {
  const int n = model.num_vars();
  Prepared prep;
  prep.lo = Eigen::VectorXd::Zero(n);
  prep.up = Eigen::VectorXd::Ones(n);
  if (!fixings.empty()) {
    for (int j = 0; j < n && j < static_cast<int>(fixings.size()); ++j) {
      if (fixings[j] == 0) prep.up(j) = 0.0;
      if (fixings[j] == 1) prep.lo(j) = 1.0;
    }
  }

  // normalized copies of the model rows
  std::vector<WorkRow> base(model.rows.size());
  for (size_t i = 0; i < model.rows.size(); ++i) {
    const Row& r = model.rows[i];
    const double s = r.sense == RowSense::LE ? 1.0 : -1.0;
    base[i].rhs = s * r.rhs;
    base[i].terms.reserve(r.terms.size());
    for (const auto& [j, c] : r.terms) base[i].terms.push_back({j, s * c});
  }

  std::vector<char> alive(base.size(), 1);
  auto is_fixed = [&](int j) { return prep.up(j) - prep.lo(j) <= kBoundEps; };

  WorkRow red;
  for (int pass = 0; pass < 100; ++pass) {
    bool changed = false;
    for (size_t i = 0; i < base.size(); ++i) {
      if (!alive[i]) continue;
      red.terms.clear();
      red.rhs = base[i].rhs;
      double minact = 0.0, maxact = 0.0, maxabs = 0.0;
      for (const auto& [j, c] : base[i].terms) {
        if (is_fixed(j)) {
          red.rhs -= c * prep.lo(j);
        } else {
          red.terms.push_back({j, c});
          maxabs = std::max(maxabs, std::abs(c));
          if (c > 0) {
            minact += c * prep.lo(j);
            maxact += c * prep.up(j);
          } else {
            minact += c * prep.up(j);
            maxact += c * prep.lo(j);
          }
        }
      }
      const double scale = std::max({1.0, std::abs(red.rhs), maxabs});
      if (minact > red.rhs + 1e-7 * scale) {
        prep.infeasible = true;
        return prep;
      }
      if (maxact <= red.rhs + 1e-9 * scale) {
        alive[i] = 0;
        changed = true;
        continue;
      }
      if (red.terms.size() == 1) {
        const auto [j, c] = red.terms[0];
        const double nb = red.rhs / c;
        if (c > 0) {
          if (nb < prep.up(j) - kBoundEps) {
            prep.up(j) = nb;
            changed = true;
          }
        } else {
          if (nb > prep.lo(j) + kBoundEps) {
            prep.lo(j) = nb;
            changed = true;
          }
        }
        if (prep.lo(j) > prep.up(j) + 1e-9) {
          prep.infeasible = true;
          return prep;
        }
        if (prep.lo(j) > prep.up(j)) prep.lo(j) = prep.up(j);
        alive[i] = 0;
        changed = true;
      }
    }
    if (!changed) break;
  }

  for (size_t i = 0; i < base.size(); ++i) {
    if (!alive[i]) continue;
    WorkRow out;
    out.rhs = base[i].rhs;
    for (const auto& [j, c] : base[i].terms) {
      if (is_fixed(j))
        out.rhs -= c * prep.lo(j);
      else
        out.terms.push_back({j, c});
    }
    prep.rows.push_back(std::move(out));
  }
  return prep;
}

// ---------------------------------------------------------------------------
// Bounded-variable revised simplex with a dense basis inverse. Rows are <=
// with a slack in [0,inf); infeasible starting rows get an artificial column
// driven out in phase 1. Maximization.
// ---------------------------------------------------------------------------

struct CompactLp {
  int n = 0;
  Eigen::VectorXd lo, up, c;
  std::vector<WorkRow> rows;
};

class BoundedSimplex {
 public:
  BoundedSimplex(const CompactLp& lp, const std::vector<int>& active,
                 const Eigen::VectorXd& start)
      : lp_(lp) {
    m_ = static_cast<int>(active.size());
    n_ = lp.n;
    cols_.assign(n_ + m_, {});
    b_.resize(m_);
    rowscale_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const WorkRow& r = lp.rows[active[i]];
      double maxabs = 0.0;
      for (const auto& [j, c] : r.terms) maxabs = std::max(maxabs, std::abs(c));
      const double s = maxabs > 0 ? 1.0 / maxabs : 1.0;
      rowscale_[i] = s;
      for (const auto& [j, c] : r.terms) cols_[j].push_back({i, s * c});
      cols_[n_ + i].push_back({i, 1.0});  // slack
      b_(i) = s * r.rhs;
    }
    lo_.assign(n_ + m_, 0.0);
    up_.assign(n_ + m_, kInf);
    xval_.assign(n_ + m_, 0.0);
    state_.assign(n_ + m_, 1);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = lp.lo(j);
      up_[j] = lp.up(j);
      // start at the nearer bound of the warm point
      const bool at_up = start(j) > 0.5 * (lp.lo(j) + lp.up(j));
      xval_[j] = at_up ? lp.up(j) : lp.lo(j);
      state_[j] = at_up ? 2 : 1;
    }

    // residuals decide slack vs artificial basis
    Eigen::VectorXd act = Eigen::VectorXd::Zero(m_);
    for (int j = 0; j < n_; ++j) {
      if (xval_[j] == 0.0) continue;
      for (const auto& [i, c] : cols_[j]) act(i) += c * xval_[j];
    }
    basic_.resize(m_);
    std::vector<int> art_rows;
    for (int i = 0; i < m_; ++i) {
      const double r = b_(i) - act(i);
      if (r >= -1e-9) {
        basic_[i] = n_ + i;
      } else {
        art_rows.push_back(i);
      }
    }
    n_art_ = static_cast<int>(art_rows.size());
    for (int k = 0; k < n_art_; ++k) {
      const int i = art_rows[k];
      const int col = n_ + m_ + k;
      cols_.push_back({{i, -1.0}});
      lo_.push_back(0.0);
      up_.push_back(kInf);
      xval_.push_back(0.0);
      state_.push_back(1);
      basic_[i] = col;
    }
    ncols_ = static_cast<int>(cols_.size());
    for (int i = 0; i < m_; ++i) state_[basic_[i]] = 0;
    cost_.assign(ncols_, 0.0);
    refactor();
  }

  LpStatus solve(Eigen::VectorXd& x_out, long& iters) {
    LpStatus st = LpStatus::Optimal;
    if (n_art_ > 0) {
      for (int j = 0; j < ncols_; ++j)
        cost_[j] = j >= n_ + m_ ? -1.0 : 0.0;
      st = run_phase();
      if (st != LpStatus::Optimal) return st;
      double infeas = 0.0;
      for (int i = 0; i < m_; ++i)
        if (basic_[i] >= n_ + m_) infeas += std::max(0.0, xB_(i));
      for (int j = n_ + m_; j < ncols_; ++j)
        if (state_[j] == 2) infeas += xval_[j];
      if (infeas > 1e-7) return LpStatus::Infeasible;
      for (int j = n_ + m_; j < ncols_; ++j) up_[j] = 0.0;
    }
    for (int j = 0; j < ncols_; ++j) cost_[j] = j < n_ ? lp_.c(j) : 0.0;
    bland_ = false;
    degen_ = 0;
    st = run_phase();
    if (st != LpStatus::Optimal) return st;
    for (int i = 0; i < m_; ++i) xval_[basic_[i]] = xB_(i);
    x_out.resize(n_);
    for (int j = 0; j < n_; ++j)
      x_out(j) = std::clamp(xval_[j], lp_.lo(j), lp_.up(j));
    iters += iters_;
    return LpStatus::Optimal;
  }

  double work() const { return static_cast<double>(iters_) * (m_ + 10); }

 private:
  void refactor() {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m_, m_);
    for (int i = 0; i < m_; ++i)
      for (const auto& [r, c] : cols_[basic_[i]]) B(r, i) = c;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    Binv_ = lu.inverse();
    // recompute basic values from the nonbasic point; xB_(i) is the value
    // of basic_[i] since basis columns are ordered by row slot
    Eigen::VectorXd rhs = b_;
    for (int j = 0; j < ncols_; ++j) {
      if (state_[j] == 0 || xval_[j] == 0.0) continue;
      for (const auto& [i, c] : cols_[j]) rhs(i) -= c * xval_[j];
    }
    xB_ = Binv_ * rhs;
    since_refactor_ = 0;
  }

  LpStatus run_phase() {
    const long cap = 50000 + 200L * m_;
    for (;;) {
      if (iters_ >= cap)
        throw std::runtime_error("simplex: iteration limit exceeded");
      if (iters_ == cap / 2) {
        bland_ = true;
        refactor();
      }
      int q = -1;
      double best = 0.0;
      {
        Eigen::VectorXd cB(m_);
        for (int i = 0; i < m_; ++i) cB(i) = cost_[basic_[i]];
        y_ = Binv_.transpose() * cB;
        for (int j = 0; j < ncols_; ++j) {
          if (state_[j] == 0) continue;
          if (up_[j] - lo_[j] <= kBoundEps) continue;
          double d = cost_[j];
          for (const auto& [i, c] : cols_[j]) d -= c * y_(i);
          const bool eligible = (state_[j] == 1 && d > kDjTol) ||
                                (state_[j] == 2 && d < -kDjTol);
          if (!eligible) continue;
          if (bland_) {
            q = j;
            break;
          }
          const double score = std::abs(d);
          if (score > best + 1e-15) {
            best = score;
            q = j;
          }
        }
      }
      if (q < 0) return LpStatus::Optimal;
      ++iters_;

      Eigen::VectorXd w = Eigen::VectorXd::Zero(m_);
      for (const auto& [i, c] : cols_[q]) w += c * Binv_.col(i);
      const double dir = state_[q] == 1 ? 1.0 : -1.0;
      const double t_bound = up_[q] - lo_[q];

      double tmin = kInf;
      int leave = -1;
      signed char leave_state = 1;
      double leave_piv = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double wi = dir * w(i);
        const int bc = basic_[i];
        double t;
        signed char hit;
        if (wi > kPivTol) {
          t = (xB_(i) - lo_[bc]) / wi;
          hit = 1;
        } else if (wi < -kPivTol) {
          if (up_[bc] == kInf) continue;
          t = (up_[bc] - xB_(i)) / (-wi);
          hit = 2;
        } else {
          continue;
        }
        if (t < 0.0) t = 0.0;
        if (t < tmin - 1e-9) {
          tmin = t;
          leave = i;
          leave_state = hit;
          leave_piv = std::abs(w(i));
        } else if (t < tmin + 1e-9 && leave >= 0) {
          const double piv = std::abs(w(i));
          if (piv > leave_piv * (1.0 + 1e-9) ||
              (piv > leave_piv * (1.0 - 1e-9) && bc < basic_[leave])) {
            tmin = std::min(tmin, t);
            leave = i;
            leave_state = hit;
            leave_piv = piv;
          }
        }
      }

      if (t_bound <= tmin + 1e-12) {
        if (t_bound == kInf) return LpStatus::Unbounded;
        // bound flip, basis unchanged
        xB_ -= dir * t_bound * w;
        xval_[q] = state_[q] == 1 ? up_[q] : lo_[q];
        state_[q] = state_[q] == 1 ? 2 : 1;
        track_degeneracy(t_bound);
        continue;
      }
      if (leave < 0) return LpStatus::Unbounded;

      xB_ -= dir * tmin * w;
      const int lc = basic_[leave];
      xval_[lc] = leave_state == 1 ? lo_[lc] : up_[lc];
      state_[lc] = leave_state;
      const double enter_val =
          (dir > 0 ? lo_[q] : up_[q]) + dir * tmin;

      const double piv = w(leave);
      Binv_.row(leave) /= piv;
      Eigen::VectorXd wc = w;
      wc(leave) = 0.0;
      Binv_.noalias() -= wc * Binv_.row(leave);

      basic_[leave] = q;
      state_[q] = 0;
      xB_(leave) = enter_val;
      track_degeneracy(tmin);
      if (++since_refactor_ >= 300) refactor();
    }
  }

  void track_degeneracy(double step) {
    if (step < 1e-10) {
      if (++degen_ > 1000) bland_ = true;
    } else {
      degen_ = 0;
    }
  }

  const CompactLp& lp_;
  int m_ = 0, n_ = 0, ncols_ = 0, n_art_ = 0;
  std::vector<std::vector<std::pair<int, double>>> cols_;
  std::vector<double> lo_, up_, cost_, xval_, rowscale_;
  std::vector<signed char> state_;
  std::vector<int> basic_;
  Eigen::MatrixXd Binv_;
  Eigen::VectorXd xB_, b_, y_;
  long iters_ = 0;
  bool bland_ = false;
  int degen_ = 0;
  int since_refactor_ = 0;
};

// Lazy row activation: solve over the rows the current point violates, add
// newly violated rows, and repeat until the whole row set is satisfied.
LpStatus solve_compact(const CompactLp& lp, Eigen::VectorXd& x, long& iters,
                       double& work) {
  x.resize(lp.n);
  for (int j = 0; j < lp.n; ++j) x(j) = lp.c(j) > 0 ? lp.up(j) : lp.lo(j);

  std::vector<char> active(lp.rows.size(), 0);
  std::vector<int> active_list;
  for (int round = 0; round < 1000; ++round) {
    bool any = false;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
      if (active[i]) continue;
      const WorkRow& r = lp.rows[i];
      double act = 0.0, maxabs = 1.0;
      for (const auto& [j, c] : r.terms) {
        act += c * x(j);
        maxabs = std::max(maxabs, std::abs(c));
      }
      if (act > r.rhs + 1e-8 * std::max(maxabs, std::abs(r.rhs))) {
        active[i] = 1;
        active_list.push_back(static_cast<int>(i));
        any = true;
      }
    }
    if (!any) return LpStatus::Optimal;
    BoundedSimplex sx(lp, active_list, x);
    const LpStatus st = sx.solve(x, iters);
    work += sx.work();
    if (st != LpStatus::Optimal) return st;
  }
  throw std::runtime_error("solve_compact: row activation did not converge");
}

}  // namespace

LpSolution solve_lp(const MipModel& model, const Fixings& fixings) {
  LpSolution sol;
  const int n = model.num_vars();
  Prepared prep = presolve(model, fixings);
  if (prep.infeasible) {
    sol.status = LpStatus::Infeasible;
    return sol;
  }

  // compact the free variables
  std::vector<int> to_compact(n, -1);
  std::vector<int> to_orig;
  for (int j = 0; j < n; ++j) {
    if (prep.up(j) - prep.lo(j) > kBoundEps) {
      to_compact[j] = static_cast<int>(to_orig.size());
      to_orig.push_back(j);
    }
  }
  CompactLp lp;
  lp.n = static_cast<int>(to_orig.size());
  lp.lo.resize(lp.n);
  lp.up.resize(lp.n);
  lp.c.resize(lp.n);
  for (int k = 0; k < lp.n; ++k) {
    lp.lo(k) = prep.lo(to_orig[k]);
    lp.up(k) = prep.up(to_orig[k]);
    lp.c(k) = model.objective(to_orig[k]);
  }
  lp.rows.reserve(prep.rows.size());
  for (auto& r : prep.rows) {
    WorkRow cr;
    cr.rhs = r.rhs;
    cr.terms.reserve(r.terms.size());
    for (const auto& [j, c] : r.terms) cr.terms.push_back({to_compact[j], c});
    lp.rows.push_back(std::move(cr));
  }

  Eigen::VectorXd xc;
  sol.work += static_cast<double>(prep.rows.size()) + 10.0;  // base charge
  const LpStatus st = solve_compact(lp, xc, sol.iterations, sol.work);
  sol.status = st;
  if (st != LpStatus::Optimal) return sol;

  sol.x = prep.lo;  // fixed variables at their value
  for (int k = 0; k < lp.n; ++k) sol.x(to_orig[k]) = xc(k);
  sol.objective = model.objective.dot(sol.x);
  return sol;
}

// ---------------------------------------------------------------------------
// Branch and bound
// ---------------------------------------------------------------------------

namespace {

struct BnbNode {
  double bound = 0.0;  // parent LP bound (root: +inf until solved)
  long id = 0;
  Fixings fix;
};

struct NodeOrder {
  bool operator()(const BnbNode& a, const BnbNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;  // max-heap on bound
    return a.id > b.id;                                // then FIFO
  }
};

}  // namespace

MipResult solve_mip(const MipModel& model, const BnbConfig& config) {
  if (!(config.time_limit > 0))
    throw std::invalid_argument("solve_mip: time_limit must be > 0");
  const int n = model.num_vars();
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  MipResult res;
  res.best_bound = kInf;

  std::priority_queue<BnbNode, std::vector<BnbNode>, NodeOrder> open;
  BnbNode root;
  root.bound = kInf;
  root.fix = config.fixings;
  root.fix.resize(n, -1);
  open.push(std::move(root));
  long next_id = 1;
  bool timed_out = false;

  // the smallest objective any accepted incumbent may have
  auto floor_value = [&] {
    double f = -kInf;
    if (res.has_incumbent) f = std::max(f, res.objective + config.gap_tol);
    if (config.has_cutoff) f = std::max(f, config.cutoff + 1e-9);
    return f;
  };

  while (!open.empty()) {
    if (elapsed() > config.time_limit ||
        (config.work_limit > 0 && res.work > config.work_limit)) {
      timed_out = true;
      break;
    }
    BnbNode node = open.top();
    open.pop();
    if (node.bound <= floor_value()) continue;
    ++res.nodes;

    const LpSolution lp = solve_lp(model, node.fix);
    res.work += lp.work;
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status == LpStatus::Unbounded)
      throw std::runtime_error("solve_mip: relaxation unbounded");
    if (lp.objective <= floor_value()) continue;

    // integral within tolerance, and the rounded point must satisfy all rows
    int frac_var = -1;
    double frac_score = kInf;
    for (int j = 0; j < n; ++j) {
      const double f = std::abs(lp.x(j) - std::round(lp.x(j)));
      if (f > 1e-6) {
        const double score = std::abs(lp.x(j) - 0.5);
        if (score < frac_score - 1e-12) {
          frac_score = score;
          frac_var = j;
        }
      }
    }
    if (frac_var < 0) {
      Eigen::VectorXd xr = lp.x.array().round();
      bool ok = true;
      for (const auto& row : model.rows)
        if (!row_satisfied(row, xr, 1e-6)) {
          ok = false;
          break;
        }
      if (ok) {
        const double obj = model.objective.dot(xr);
        const bool beats_cutoff =
            !config.has_cutoff || obj >= config.cutoff + 1e-6;
        if (beats_cutoff && (!res.has_incumbent || obj > res.objective)) {
          res.has_incumbent = true;
          res.objective = obj;
          res.x = std::move(xr);
        }
        continue;
      }
      // fall through and branch on the first free variable if any
      for (int j = 0; j < n && frac_var < 0; ++j)
        if (node.fix[j] < 0) frac_var = j;
      if (frac_var < 0) continue;  // fully fixed yet numerically unusable
    }

    for (int val = 0; val <= 1; ++val) {
      BnbNode child;
      child.bound = lp.objective;
      child.id = next_id++;
      child.fix = node.fix;
      child.fix[frac_var] = static_cast<signed char>(val);
      open.push(std::move(child));
    }
  }

  if (timed_out) {
    res.status = MipStatus::TimeLimit;
    double bb = res.has_incumbent ? res.objective : -kInf;
    if (!open.empty()) bb = std::max(bb, open.top().bound);
    res.best_bound = bb;
    return res;
  }
  res.best_bound = res.has_incumbent
                       ? res.objective
                       : (config.has_cutoff ? config.cutoff : -kInf);
  if (res.has_incumbent)
    res.status = MipStatus::Optimal;
  else
    res.status = config.has_cutoff ? MipStatus::CutoffExhausted
                                   : MipStatus::Infeasible;
  return res;
}

}  // namespace spcap
