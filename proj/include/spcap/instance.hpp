#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spcap {

// Problem data for one SPCAP instance: base stations with a discrete power
// ladder, terminals with SIR thresholds, and the attenuation matrix linking
// them. Immutable after construction; safe to share across threads.
struct Instance {
  int num_terminals = 0;
  int num_bases = 0;
  std::vector<double> levels;  // ascending positive power values P_1..P_L
  double noise = 0.0;          // system noise N > 0
  Eigen::MatrixXd atten;       // |T| x |B|, entries in [0,1]
  Eigen::VectorXd delta;       // per-terminal SIR threshold, > 0
  Eigen::VectorXd revenue;     // r_t > 0
  Eigen::VectorXd coop_cost;   // c_t > 0

  int num_levels() const { return static_cast<int>(levels.size()); }
  double p_max() const { return levels.empty() ? 0.0 : levels.back(); }
  // power value of a 1-based level index; level 0 means off
  double power_of(int level) const { return level == 0 ? 0.0 : levels[level - 1]; }
};

// Knobs of the synthetic generator. Bases and terminals are placed uniformly
// at random in a square; attenuation follows a power law with multiplicative
// log-uniform shadowing, capped at 1.
struct GenConfig {
  int num_terminals = 50;
  int num_bases = 8;
  int num_levels = 4;
  double area_side = 1000.0;
  double pathloss_exp = 3.5;   // gamma
  double p_max = 30.0;
  double shadow_spread_db = 6.0;
  double delta = 1.5;
  double noise = 5e-5;
  double revenue = 1.0;
  double coop_cost = 0.2;
  std::uint64_t seed = 1;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Empty list iff all Instance invariants hold; violations are messages
// naming the broken invariant.
std::vector<std::string> validate_instance(const Instance& inst);

// Deterministic for a fixed seed. Throws std::invalid_argument on bad config.
Instance generate_instance(const GenConfig& cfg);

// Text round-trip: save_instance then load_instance is the identity on valid
// instances. Numbers are written with enough digits for exact recovery.
std::string save_instance(const Instance& inst);
Instance load_instance(const std::string& text);  // throws ParseError

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

}  // namespace spcap
