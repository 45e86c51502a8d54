#include "spcap/oracle.hpp"

#include <cmath>

namespace spcap {

OracleResult brute_force_opt(const Instance& inst, const OracleCaps& caps) {
  const int B = inst.num_bases;
  const int T = inst.num_terminals;
  const int L = inst.num_levels();
  if (B > caps.max_bases)
    throw OracleCapExceeded("oracle: |B| = " + std::to_string(B) +
                            " exceeds cap " + std::to_string(caps.max_bases));
  double vectors = std::pow(static_cast<double>(L + 1), B);
  if (vectors > static_cast<double>(caps.max_power_vectors))
    throw OracleCapExceeded(
        "oracle: (|L|+1)^|B| = " + std::to_string(vectors) + " exceeds cap " +
        std::to_string(caps.max_power_vectors));

  OracleResult best;
  best.objective = -1e300;

  std::vector<int> levels(B, 0);  // odometer over power vectors
  std::vector<int> on_bases;
  std::vector<int> subset;
  for (;;) {
    ++best.power_vectors;
    on_bases.clear();
    for (int b = 0; b < B; ++b)
      if (levels[b] > 0) on_bases.push_back(b);
    const int k = static_cast<int>(on_bases.size());

    double total = 0.0;
    std::vector<std::vector<int>> clusters(T);
    for (int t = 0; t < T; ++t) {
      // best serving subset of the powered-on bases, empty allowed (zero)
      double best_contrib = 0.0;
      std::vector<int> best_subset;
      for (unsigned mask = 1; mask < (1u << k); ++mask) {
        subset.clear();
        for (int i = 0; i < k; ++i)
          if (mask & (1u << i)) subset.push_back(on_bases[i]);
        const double contrib =
            inst.revenue(t) -
            inst.coop_cost(t) * (static_cast<double>(subset.size()) - 1.0);
        if (contrib <= best_contrib) continue;  // cannot improve, skip SIR
        if (is_served(inst, levels, subset, t)) {
          best_contrib = contrib;
          best_subset = subset;
        }
      }
      clusters[t] = std::move(best_subset);
      total += best_contrib;
    }

    if (total > best.objective + 1e-12) {
      best.objective = total;
      best.solution = derive_full_solution(inst, levels, std::move(clusters));
    }

    int b = 0;
    while (b < B && ++levels[b] > L) levels[b++] = 0;
    if (b == B) break;
  }
  return best;
}

}  // namespace spcap
