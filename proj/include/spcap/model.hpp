#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spcap {

// Variable registry of the SPCAP models. Indices are laid out in blocks:
// X(t), then Z(b,l), then Y(t,b), then V(t,b,l).
enum class VarKind : std::uint8_t { X, Z, Y, V };

struct VarInfo {
  VarKind kind;
  int t = -1;  // terminal
  int b = -1;  // base
  int l = -1;  // 1-based power level
};

enum class RowSense : std::uint8_t { LE, GE };

struct Row {
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  RowSense sense = RowSense::LE;
  double rhs = 0.0;
};

// A linear model over binary variables, maximization sense.
struct MipModel {
  int T = 0, B = 0, L = 0;
  Eigen::VectorXd objective;
  std::vector<Row> rows;

  int num_vars() const { return T + B * L + T * B + T * B * L; }

  int x(int t) const { return t; }
  int z(int b, int l) const { return T + b * L + (l - 1); }
  int y(int t, int b) const { return T + B * L + t * B + b; }
  int v(int t, int b, int l) const {
    return T + B * L + T * B + (t * B + b) * L + (l - 1);
  }

  VarInfo var_info(int j) const;
  std::string var_name(int j) const;
};

// Value of a row's left-hand side at a point.
double row_activity(const Row& row, const Eigen::VectorXd& x);

// true iff the row holds at x within an absolute tolerance
bool row_satisfied(const Row& row, const Eigen::VectorXd& x, double tol = 1e-6);

// Debug dump in a readable LP-style text format.
void write_lp_text(const MipModel& model, std::ostream& os);

}  // namespace spcap
