#include "spcap/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace spcap {

bool CandidateSolution::in_cluster(int t, int b) const {
  const auto& c = cluster[t];
  return std::binary_search(c.begin(), c.end(), b);
}

double sir_value(const Instance& inst, const std::vector<int>& power_level,
                 const std::vector<int>& cluster, int t) {
  double useful = 0.0, interf = 0.0;
  for (int b = 0; b < inst.num_bases; ++b) {
    const double p = inst.power_of(power_level[b]);
    const bool serving =
        std::binary_search(cluster.begin(), cluster.end(), b);
    (serving ? useful : interf) += inst.atten(t, b) * p;
  }
  return useful / (inst.noise + interf);
}

bool is_served(const Instance& inst, const std::vector<int>& power_level,
               const std::vector<int>& cluster, int t) {
  double useful = 0.0, interf = 0.0;
  for (int b = 0; b < inst.num_bases; ++b) {
    const double p = inst.power_of(power_level[b]);
    const bool serving =
        std::binary_search(cluster.begin(), cluster.end(), b);
    (serving ? useful : interf) += inst.atten(t, b) * p;
  }
  const double lhs = useful - inst.delta(t) * interf;
  const double rhs = inst.delta(t) * inst.noise;
  const double scale = std::max(1.0, std::abs(useful) + inst.delta(t) * (inst.noise + interf));
  return lhs >= rhs - kFeasTol * scale;
}

double big_m_value(const Instance& inst, int t) {
  return inst.delta(t) * inst.atten.row(t).sum() * inst.p_max() +
         inst.delta(t) * inst.noise;
}

MipModel build_bigM_model(const Instance& inst) {
  MipModel m;
  m.T = inst.num_terminals;
  m.B = inst.num_bases;
  m.L = inst.num_levels();
  const int n = m.num_vars();

  m.objective = Eigen::VectorXd::Zero(n);
  for (int t = 0; t < m.T; ++t) {
    // r_t x_t - c_t (sum_b y_tb - x_t)
    m.objective(m.x(t)) = inst.revenue(t) + inst.coop_cost(t);
    for (int b = 0; b < m.B; ++b) m.objective(m.y(t, b)) = -inst.coop_cost(t);
  }

  m.rows.reserve(m.T + m.B + 3 * m.T * m.B * m.L);

  // SIR rows: (1+delta_t) sum a P v - delta_t sum a P z - M_t x >= delta_t N - M_t
  for (int t = 0; t < m.T; ++t) {
    Row row;
    row.sense = RowSense::GE;
    const double M = big_m_value(inst, t);
    for (int b = 0; b < m.B; ++b) {
      const double a = inst.atten(t, b);
      if (a == 0.0) continue;
      for (int l = 1; l <= m.L; ++l) {
        const double ap = a * inst.levels[l - 1];
        row.terms.push_back({m.v(t, b, l), (1.0 + inst.delta(t)) * ap});
        row.terms.push_back({m.z(b, l), -inst.delta(t) * ap});
      }
    }
    row.terms.push_back({m.x(t), -M});
    row.rhs = inst.delta(t) * inst.noise - M;
    m.rows.push_back(std::move(row));
  }

  // GUB rows: each base emits at a single power level
  for (int b = 0; b < m.B; ++b) {
    Row row;
    row.sense = RowSense::LE;
    row.rhs = 1.0;
    for (int l = 1; l <= m.L; ++l) row.terms.push_back({m.z(b, l), 1.0});
    m.rows.push_back(std::move(row));
  }

  // linearization of v = z*y
  for (int t = 0; t < m.T; ++t)
    for (int b = 0; b < m.B; ++b)
      for (int l = 1; l <= m.L; ++l) {
        m.rows.push_back(
            {{{m.v(t, b, l), 1.0}, {m.z(b, l), -1.0}}, RowSense::LE, 0.0});
        m.rows.push_back(
            {{{m.v(t, b, l), 1.0}, {m.y(t, b), -1.0}}, RowSense::LE, 0.0});
        m.rows.push_back({{{m.v(t, b, l), 1.0},
                           {m.z(b, l), -1.0},
                           {m.y(t, b), -1.0}},
                          RowSense::GE,
                          -1.0});
      }
  return m;
}

CandidateSolution derive_full_solution(const Instance& inst,
                                       std::vector<int> power_level,
                                       std::vector<std::vector<int>> cluster) {
  CandidateSolution sol;
  sol.power_level = std::move(power_level);
  sol.cluster = std::move(cluster);
  for (auto& c : sol.cluster) std::sort(c.begin(), c.end());
  sol.served.resize(inst.num_terminals);
  for (int t = 0; t < inst.num_terminals; ++t)
    sol.served[t] = is_served(inst, sol.power_level, sol.cluster[t], t) ? 1 : 0;
  return sol;
}

double objective_value(const Instance& inst, const CandidateSolution& sol) {
  double obj = 0.0;
  for (int t = 0; t < inst.num_terminals; ++t) {
    const double x = sol.served[t] ? 1.0 : 0.0;
    obj += inst.revenue(t) * x -
           inst.coop_cost(t) * (static_cast<double>(sol.cluster[t].size()) - x);
  }
  return obj;
}

std::vector<std::string> check_feasibility(const Instance& inst,
                                           const CandidateSolution& sol) {
  std::vector<std::string> out;
  const int T = inst.num_terminals;
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  if (static_cast<int>(sol.power_level.size()) != B) {
    out.push_back("power_level: size must be |B|");
    return out;
  }
  if (static_cast<int>(sol.cluster.size()) != T ||
      static_cast<int>(sol.served.size()) != T) {
    out.push_back("cluster/served: size must be |T|");
    return out;
  }
  for (int b = 0; b < B; ++b)
    if (sol.power_level[b] < 0 || sol.power_level[b] > L)
      out.push_back("power_level[" + std::to_string(b) + "] out of range");
  for (int t = 0; t < T; ++t) {
    const auto& c = sol.cluster[t];
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= B) {
        out.push_back("cluster[" + std::to_string(t) + "] has unknown base");
        break;
      }
      if (i > 0 && c[i] <= c[i - 1]) {
        out.push_back("cluster[" + std::to_string(t) +
                      "] must be sorted and duplicate-free");
        break;
      }
    }
    if (sol.served[t] && !is_served(inst, sol.power_level, c, t))
      out.push_back("terminal " + std::to_string(t) +
                    " claimed served but fails the SIR inequality");
  }
  return out;
}

Eigen::VectorXd to_variable_vector(const MipModel& model,
                                   const CandidateSolution& sol) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(model.num_vars());
  for (int t = 0; t < model.T; ++t) {
    if (sol.served[t]) x(model.x(t)) = 1.0;
    for (int b : sol.cluster[t]) {
      x(model.y(t, b)) = 1.0;
      const int l = sol.power_level[b];
      if (l >= 1) x(model.v(t, b, l)) = 1.0;  // v = z * y
    }
  }
  for (int b = 0; b < model.B; ++b)
    if (sol.power_level[b] >= 1) x(model.z(b, sol.power_level[b])) = 1.0;
  return x;
}

std::string save_solution(const Instance& inst, const CandidateSolution& sol) {
  std::ostringstream os;
  for (int b = 0; b < inst.num_bases; ++b)
    os << "P " << b << " " << sol.power_level[b] << "\n";
  for (int t = 0; t < inst.num_terminals; ++t) {
    if (!sol.served[t]) continue;
    os << "C " << t;
    for (int b : sol.cluster[t]) os << " " << b;
    os << "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", objective_value(inst, sol));
  os << "OBJ " << buf << "\n";
  return os.str();
}

CandidateSolution load_solution(const Instance& inst, const std::string& text) {
  CandidateSolution sol;
  sol.power_level.assign(inst.num_bases, 0);
  sol.cluster.assign(inst.num_terminals, {});
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "P") {
      int b, l;
      if (!(ls >> b >> l) || b < 0 || b >= inst.num_bases)
        throw ParseError("solution line " + std::to_string(lineno) +
                         ": bad P line");
      sol.power_level[b] = l;
    } else if (tag == "C") {
      int t;
      if (!(ls >> t) || t < 0 || t >= inst.num_terminals)
        throw ParseError("solution line " + std::to_string(lineno) +
                         ": bad C line");
      int b;
      while (ls >> b) sol.cluster[t].push_back(b);
    } else if (tag == "OBJ") {
      // informational footer
    } else {
      throw ParseError("solution line " + std::to_string(lineno) +
                       ": unknown tag '" + tag + "'");
    }
  }
  return derive_full_solution(inst, std::move(sol.power_level),
                              std::move(sol.cluster));
}

}  // namespace spcap
