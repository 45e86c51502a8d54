#include "spcap/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spcap/formulation.hpp"
#include "spcap/oracle.hpp"

namespace spcap {

namespace {

void check_cut_shape(const Instance& inst, const GubCoverCut& cut) {
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  if (cut.terminal < 0 || cut.terminal >= inst.num_terminals)
    throw std::invalid_argument("cut: terminal out of range");
  if (cut.serving.empty() && cut.interfering.empty())
    throw std::invalid_argument("cut: both base lists empty");
  std::set<int> seen;
  for (const auto& [b, cap] : cut.serving) {
    if (b < 0 || b >= B) throw std::invalid_argument("cut: serving base out of range");
    if (cap < 1 || cap > L) throw std::invalid_argument("cut: level cap out of range");
    if (!seen.insert(b).second)
      throw std::invalid_argument("cut: base listed twice");
  }
  for (const auto& [g, q] : cut.interfering) {
    if (g < 0 || g >= B) throw std::invalid_argument("cut: interfering base out of range");
    if (q < 1 || q > L) throw std::invalid_argument("cut: level floor out of range");
    if (!seen.insert(g).second)
      throw std::invalid_argument("cut: base listed twice");
  }
}

}  // namespace

Row cut_row(const MipModel& model, const GubCoverCut& cut) {
  Row row;
  row.sense = RowSense::LE;
  row.rhs = static_cast<double>(cut.serving.size() + cut.interfering.size());
  row.terms.emplace_back(model.x(cut.terminal), 1.0);
  for (const auto& [b, cap] : cut.serving)
    for (int l = 1; l <= cap; ++l)
      row.terms.emplace_back(model.v(cut.terminal, b, l), 1.0);
  for (const auto& [g, q] : cut.interfering)
    for (int l = q; l <= model.L; ++l)
      row.terms.emplace_back(model.z(g, l), 1.0);
  return row;
}

double cut_violation(const MipModel& model, const GubCoverCut& cut,
                     const Eigen::VectorXd& point) {
  const Row row = cut_row(model, cut);
  return row_activity(row, point) - row.rhs;
}

bool cut_certified(const Instance& inst, int terminal,
                   const std::vector<std::pair<int, int>>& serving) {
  std::vector<int> level(inst.num_bases, inst.num_levels());
  for (const auto& [b, cap] : serving) level[b] = cap;
  std::vector<int> cluster(inst.num_bases);
  for (int b = 0; b < inst.num_bases; ++b) cluster[b] = b;
  return !is_served(inst, level, cluster, terminal);
}

std::vector<GubCoverCut> enumerate_relaxed_gcis(const Instance& inst) {
  std::vector<GubCoverCut> cuts;
  const int L = inst.num_levels();
  for (int t = 0; t < inst.num_terminals; ++t) {
    for (int b = 0; b < inst.num_bases; ++b) {
      int best_cap = 0;
      for (int cap = 1; cap <= L; ++cap) {
        if (cut_certified(inst, t, {{b, cap}}))
          best_cap = cap;
        else
          break;  // certification is monotone decreasing in the cap
      }
      if (best_cap > 0)
        cuts.push_back(GubCoverCut{t, {{b, best_cap}}, {}});
    }
  }
  return cuts;
}

std::vector<GubCoverCut> separate_gci(const Instance& inst,
                                      const MipModel& model,
                                      const Eigen::VectorXd& point,
                                      const SeparationConfig& cfg) {
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  const int max_size = std::min(cfg.max_cluster_size, B);
  if (max_size < 1) return {};

  struct Found {
    double violation;
    GubCoverCut cut;
  };
  std::vector<Found> found;

  // all base subsets up to max_size, by bitmask with popcount filter
  std::vector<std::vector<int>> subsets;
  for (std::uint32_t mask = 1; mask < (1u << B); ++mask) {
    const int pc = __builtin_popcount(mask);
    if (pc < 1 || pc > max_size) continue;
    std::vector<int> bases;
    for (int b = 0; b < B; ++b)
      if (mask & (1u << b)) bases.push_back(b);
    subsets.push_back(std::move(bases));
  }

  std::vector<int> caps;
  for (int t = 0; t < inst.num_terminals; ++t) {
    for (const auto& bases : subsets) {
      const int k = static_cast<int>(bases.size());
      // enumerate certified cap vectors, keep the Pareto-maximal ones
      std::vector<std::vector<int>> valid;
      caps.assign(k, 1);
      for (;;) {
        std::vector<std::pair<int, int>> serving;
        serving.reserve(k);
        for (int i = 0; i < k; ++i) serving.emplace_back(bases[i], caps[i]);
        if (cut_certified(inst, t, serving)) valid.push_back(caps);
        int i = 0;
        while (i < k && caps[i] == L) caps[i++] = 1;
        if (i == k) break;
        ++caps[i];
      }
      for (const auto& c : valid) {
        bool dominated = false;
        for (const auto& other : valid) {
          if (&other == &c) continue;
          bool geq = true, strict = false;
          for (int i = 0; i < k; ++i) {
            if (other[i] < c[i]) geq = false;
            if (other[i] > c[i]) strict = true;
          }
          if (geq && strict) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
        GubCoverCut cut;
        cut.terminal = t;
        for (int i = 0; i < k; ++i) cut.serving.emplace_back(bases[i], c[i]);
        const double viol = cut_violation(model, cut, point);
        if (viol > cfg.tol_cut) found.push_back({viol, std::move(cut)});
      }
    }
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const Found& a, const Found& b) {
                     if (a.violation != b.violation) return a.violation > b.violation;
                     if (a.cut.terminal != b.cut.terminal)
                       return a.cut.terminal < b.cut.terminal;
                     return a.cut.serving < b.cut.serving;
                   });
  std::vector<GubCoverCut> cuts;
  cuts.reserve(found.size());
  for (auto& f : found) cuts.push_back(std::move(f.cut));
  return cuts;
}

bool is_valid_cut(const Instance& inst, const GubCoverCut& cut) {
  check_cut_shape(inst, cut);
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  OracleCaps caps;
  if (B > caps.max_bases)
    throw OracleCapExceeded("is_valid_cut: too many bases");
  double combos = 1.0;
  for (int b = 0; b < B; ++b) combos *= (L + 1);
  if (combos > static_cast<double>(caps.max_power_vectors))
    throw OracleCapExceeded("is_valid_cut: too many power vectors");

  const int t = cut.terminal;
  std::vector<int> level(B, 0);
  for (;;) {
    // interferer floors that do not hold switch the cut off for this vector
    bool floors_hold = true;
    for (const auto& [g, q] : cut.interfering)
      if (level[g] < q) {
        floors_hold = false;
        break;
      }
    if (floors_hold) {
      std::vector<int> on;
      for (int b = 0; b < B; ++b)
        if (level[b] > 0) on.push_back(b);
      const int n_on = static_cast<int>(on.size());
      for (std::uint32_t mask = 0; mask < (1u << n_on); ++mask) {
        std::vector<int> cluster;
        for (int i = 0; i < n_on; ++i)
          if (mask & (1u << i)) cluster.push_back(on[i]);
        int lhs = is_served(inst, level, cluster, t) ? 1 : 0;
        for (const auto& [b, cap] : cut.serving) {
          const bool in =
              std::find(cluster.begin(), cluster.end(), b) != cluster.end();
          if (in && level[b] >= 1 && level[b] <= cap) ++lhs;
        }
        lhs += static_cast<int>(cut.interfering.size());
        if (lhs > static_cast<int>(cut.serving.size() + cut.interfering.size()))
          return false;
      }
    }
    int b = 0;
    while (b < B && level[b] == L) level[b++] = 0;
    if (b == B) break;
    ++level[b];
  }
  return true;
}

std::string cut_to_string(const GubCoverCut& cut) {
  std::ostringstream os;
  os << "GCI " << cut.terminal << " |";
  for (const auto& [b, cap] : cut.serving) os << ' ' << b << ':' << cap;
  os << " |";
  for (const auto& [g, q] : cut.interfering) os << ' ' << g << ':' << q;
  return os.str();
}

}  // namespace spcap
