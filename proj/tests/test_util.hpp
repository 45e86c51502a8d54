#pragma once

#include "spcap/instance.hpp"

namespace spcap::testutil {

// Two bases, one terminal, two power levels. Small enough to verify every
// model quantity by hand:
//   attenuation (0.6, 0.3), levels (1, 2), noise 0.1, delta 1.5,
//   revenue 10, cooperation cost 1.
// Best solution: base 0 at level 2 serving alone (SIR 1.2/0.1 = 12),
// objective (10+1)*1 - 1*1 = 10.
inline Instance tiny1() {
  Instance inst;
  inst.num_terminals = 1;
  inst.num_bases = 2;
  inst.levels = {1.0, 2.0};
  inst.noise = 0.1;
  inst.atten.resize(1, 2);
  inst.atten << 0.6, 0.3;
  inst.delta = Eigen::VectorXd::Constant(1, 1.5);
  inst.revenue = Eigen::VectorXd::Constant(1, 10.0);
  inst.coop_cost = Eigen::VectorXd::Constant(1, 1.0);
  return inst;
}

// Same geometry with an unreachable SIR threshold: even both bases at top
// power only reach SIR 18, so no terminal can ever be served.
inline Instance tiny_unservable() {
  Instance inst = tiny1();
  inst.delta = Eigen::VectorXd::Constant(1, 30.0);
  return inst;
}

// The 25-instance generated family used across the statistical tests:
// |T| in 3..6, |B| in 2..3, |L| in 1..2, generator seed = index.
inline Instance tiny_suite(int i) {
  GenConfig cfg;
  cfg.num_terminals = 3 + i % 4;
  cfg.num_bases = 2 + i % 2;
  cfg.num_levels = 1 + (i / 2) % 2;
  cfg.seed = static_cast<std::uint64_t>(i);
  return generate_instance(cfg);
}

}  // namespace spcap::testutil
