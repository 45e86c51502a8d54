#include "spcap/model.hpp"

#include <cmath>

namespace spcap {

VarInfo MipModel::var_info(int j) const {
  VarInfo info;
  if (j < T) {
    info.kind = VarKind::X;
    info.t = j;
    return info;
  }
  j -= T;
  if (j < B * L) {
    info.kind = VarKind::Z;
    info.b = j / L;
    info.l = j % L + 1;
    return info;
  }
  j -= B * L;
  if (j < T * B) {
    info.kind = VarKind::Y;
    info.t = j / B;
    info.b = j % B;
    return info;
  }
  j -= T * B;
  info.kind = VarKind::V;
  info.t = j / (B * L);
  info.b = j / L % B;
  info.l = j % L + 1;
  return info;
}

std::string MipModel::var_name(int j) const {
  const VarInfo i = var_info(j);
  switch (i.kind) {
    case VarKind::X:
      return "x_" + std::to_string(i.t);
    case VarKind::Z:
      return "z_" + std::to_string(i.b) + "_" + std::to_string(i.l);
    case VarKind::Y:
      return "y_" + std::to_string(i.t) + "_" + std::to_string(i.b);
    case VarKind::V:
      return "v_" + std::to_string(i.t) + "_" + std::to_string(i.b) + "_" +
             std::to_string(i.l);
  }
  return "?";
}

double row_activity(const Row& row, const Eigen::VectorXd& x) {
  double acc = 0.0;
  for (const auto& [j, c] : row.terms) acc += c * x(j);
  return acc;
}

bool row_satisfied(const Row& row, const Eigen::VectorXd& x, double tol) {
  const double a = row_activity(row, x);
  return row.sense == RowSense::LE ? a <= row.rhs + tol : a >= row.rhs - tol;
}

void write_lp_text(const MipModel& model, std::ostream& os) {
  os << "maximize\n ";
  for (int j = 0; j < model.num_vars(); ++j) {
    const double c = model.objective(j);
    if (c == 0.0) continue;
    os << (c >= 0 ? " +" : " ") << c << " " << model.var_name(j);
  }
  os << "\nsubject to\n";
  int i = 0;
  for (const auto& row : model.rows) {
    os << " r" << i++ << ":";
    for (const auto& [j, c] : row.terms)
      os << (c >= 0 ? " +" : " ") << c << " " << model.var_name(j);
    os << (row.sense == RowSense::LE ? " <= " : " >= ") << row.rhs << "\n";
  }
  os << "binaries\n ";
  for (int j = 0; j < model.num_vars(); ++j) os << " " << model.var_name(j);
  os << "\n";
}

}  // namespace spcap
