#include <doctest.h>

#include <set>
#include <sstream>

#include "spcap/formulation.hpp"
#include "spcap/model.hpp"
#include "test_util.hpp"

using namespace spcap;

TEST_CASE("variable layout is a bijection over the index range") {
  MipModel m;
  m.T = 3;
  m.B = 2;
  m.L = 2;
  std::set<int> seen;
  for (int t = 0; t < m.T; ++t) seen.insert(m.x(t));
  for (int b = 0; b < m.B; ++b)
    for (int l = 1; l <= m.L; ++l) seen.insert(m.z(b, l));
  for (int t = 0; t < m.T; ++t)
    for (int b = 0; b < m.B; ++b) seen.insert(m.y(t, b));
  for (int t = 0; t < m.T; ++t)
    for (int b = 0; b < m.B; ++b)
      for (int l = 1; l <= m.L; ++l) seen.insert(m.v(t, b, l));
  CHECK(static_cast<int>(seen.size()) == m.num_vars());
  CHECK(*seen.begin() == 0);
  CHECK(*seen.rbegin() == m.num_vars() - 1);
}

TEST_CASE("var_info inverts the index functions") {
  MipModel m;
  m.T = 2;
  m.B = 2;
  m.L = 2;
  const VarInfo xi = m.var_info(m.x(1));
  CHECK(xi.kind == VarKind::X);
  CHECK(xi.t == 1);
  const VarInfo zi = m.var_info(m.z(1, 2));
  CHECK(zi.kind == VarKind::Z);
  CHECK(zi.b == 1);
  CHECK(zi.l == 2);
  const VarInfo yi = m.var_info(m.y(1, 0));
  CHECK(yi.kind == VarKind::Y);
  CHECK(yi.t == 1);
  CHECK(yi.b == 0);
  const VarInfo vi = m.var_info(m.v(0, 1, 1));
  CHECK(vi.kind == VarKind::V);
  CHECK(vi.t == 0);
  CHECK(vi.b == 1);
  CHECK(vi.l == 1);
  CHECK(!m.var_name(m.v(0, 1, 1)).empty());
}

TEST_CASE("row activity and satisfaction") {
  Row row;
  row.terms = {{0, 2.0}, {1, -1.0}};
  row.rhs = 1.0;
  Eigen::VectorXd x(2);
  x << 1.0, 0.5;
  CHECK(row_activity(row, x) == doctest::Approx(1.5));
  CHECK(!row_satisfied(row, x));  // LE violated
  row.sense = RowSense::GE;
  CHECK(row_satisfied(row, x));
  x << 0.0, 0.0;
  CHECK(row_activity(row, x) == 0.0);
  CHECK(!row_satisfied(row, x));  // GE violated
}

TEST_CASE("LP text dump mentions every block") {
  const MipModel m = build_bigM_model(testutil::tiny1());
  std::ostringstream os;
  write_lp_text(m, os);
  const std::string text = os.str();
  CHECK(text.find("x") != std::string::npos);
  CHECK(text.find("z") != std::string::npos);
  CHECK(text.find("y") != std::string::npos);
  CHECK(text.find("v") != std::string::npos);
}
