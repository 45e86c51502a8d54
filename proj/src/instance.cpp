#include "spcap/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "spcap/rng.hpp"

namespace spcap {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  const int T = inst.num_terminals;
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  if (T < 1) out.push_back("terminal count must be >= 1");
  if (B < 1) out.push_back("base count must be >= 1");
  if (L < 1) out.push_back("level count must be >= 1");
  for (int l = 0; l < L; ++l) {
    const double prev = l == 0 ? 0.0 : inst.levels[l - 1];
    if (!(inst.levels[l] > prev)) {
      out.push_back("levels: P_" + std::to_string(l + 1) +
                    " must satisfy 0 < P_1 < ... < P_L");
    }
  }
  if (!(inst.noise > 0.0)) out.push_back("noise: N must be > 0");
  if (inst.atten.rows() != T || inst.atten.cols() != B) {
    out.push_back("atten: dimensions must be |T| x |B|");
  } else {
    for (int t = 0; t < T; ++t)
      for (int b = 0; b < B; ++b) {
        const double a = inst.atten(t, b);
        if (!(a >= 0.0 && a <= 1.0)) {
          out.push_back("atten: a[" + std::to_string(t) + "][" +
                        std::to_string(b) + "] must lie in [0,1]");
        }
      }
  }
  auto check_vec = [&](const Eigen::VectorXd& v, const char* name) {
    if (v.size() != T) {
      out.push_back(std::string(name) + ": size must be |T|");
      return;
    }
    for (int t = 0; t < T; ++t)
      if (!(v(t) > 0.0))
        out.push_back(std::string(name) + "[" + std::to_string(t) +
                      "] must be > 0");
  };
  check_vec(inst.delta, "delta");
  check_vec(inst.revenue, "revenue");
  check_vec(inst.coop_cost, "coop_cost");
  return out;
}

Instance generate_instance(const GenConfig& cfg) {
  if (cfg.num_terminals < 1 || cfg.num_bases < 1 || cfg.num_levels < 1)
    throw std::invalid_argument("generate_instance: counts must be >= 1");
  if (!(cfg.pathloss_exp > 0.0))
    throw std::invalid_argument("generate_instance: pathloss exponent must be > 0");
  if (!(cfg.p_max > 0.0))
    throw std::invalid_argument("generate_instance: p_max must be > 0");
  if (!(cfg.noise > 0.0))
    throw std::invalid_argument("generate_instance: noise must be > 0");
  if (!(cfg.delta > 0.0) || !(cfg.revenue > 0.0) || !(cfg.coop_cost > 0.0))
    throw std::invalid_argument(
        "generate_instance: delta, revenue and coop_cost must be > 0");
  if (!(cfg.area_side > 0.0))
    throw std::invalid_argument("generate_instance: area side must be > 0");

  Rng rng(cfg.seed);
  const int T = cfg.num_terminals;
  const int B = cfg.num_bases;
  const int L = cfg.num_levels;
  const double d_ref = 0.01 * cfg.area_side;

  std::vector<std::pair<double, double>> base_pos(B), term_pos(T);
  for (auto& p : base_pos)
    p = {rng.uniform(0.0, cfg.area_side), rng.uniform(0.0, cfg.area_side)};
  for (auto& p : term_pos)
    p = {rng.uniform(0.0, cfg.area_side), rng.uniform(0.0, cfg.area_side)};

  Instance inst;
  inst.num_terminals = T;
  inst.num_bases = B;
  inst.noise = cfg.noise;
  // geometric ladder P_max/2^(L-1), ..., P_max
  inst.levels.resize(L);
  for (int l = 0; l < L; ++l)
    inst.levels[l] = cfg.p_max / std::pow(2.0, L - 1 - l);

  inst.atten.resize(T, B);
  for (int t = 0; t < T; ++t) {
    for (int b = 0; b < B; ++b) {
      const double dx = term_pos[t].first - base_pos[b].first;
      const double dy = term_pos[t].second - base_pos[b].second;
      const double d = std::sqrt(dx * dx + dy * dy);
      const double pl =
          d <= d_ref ? 1.0 : std::pow(d_ref / d, cfg.pathloss_exp);
      const double shadow_db =
          rng.uniform(-cfg.shadow_spread_db, cfg.shadow_spread_db);
      const double shadow = std::pow(10.0, shadow_db / 10.0);
      inst.atten(t, b) = std::min(1.0, pl * shadow);
    }
  }

  inst.delta = Eigen::VectorXd::Constant(T, cfg.delta);
  inst.revenue = Eigen::VectorXd::Constant(T, cfg.revenue);
  inst.coop_cost = Eigen::VectorXd::Constant(T, cfg.coop_cost);
  return inst;
}

std::string save_instance(const Instance& inst) {
  std::ostringstream os;
  const int T = inst.num_terminals;
  const int B = inst.num_bases;
  const int L = inst.num_levels();
  os << "SPCAP v1 " << T << " " << B << " " << L << "\n";
  os << "LEVELS";
  for (double p : inst.levels) os << " " << fmt(p);
  os << "\n";
  os << "NOISE " << fmt(inst.noise) << "\n";
  for (int t = 0; t < T; ++t)
    os << "T " << t << " " << fmt(inst.delta(t)) << " " << fmt(inst.revenue(t))
       << " " << fmt(inst.coop_cost(t)) << "\n";
  for (int b = 0; b < B; ++b) os << "B " << b << "\n";
  for (int t = 0; t < T; ++t) {
    for (int b = 0; b < B; ++b) os << (b ? " " : "") << fmt(inst.atten(t, b));
    os << "\n";
  }
  return os.str();
}

namespace {

struct LineReader {
  std::istringstream is;
  int lineno = 0;
  std::string line;

  explicit LineReader(const std::string& text) : is(text) {}

  bool next() {
    while (std::getline(is, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  }
};

double parse_num(LineReader& r, std::istringstream& ls, const char* field) {
  double v;
  if (!(ls >> v)) r.fail(std::string("expected number for ") + field);
  return v;
}

int parse_int(LineReader& r, std::istringstream& ls, const char* field) {
  int v;
  if (!(ls >> v)) r.fail(std::string("expected integer for ") + field);
  return v;
}

}  // namespace

Instance load_instance(const std::string& text) {
  LineReader r(text);
  if (!r.next()) throw ParseError("empty instance file");
  std::istringstream hs(r.line);
  std::string magic, version;
  hs >> magic >> version;
  if (magic != "SPCAP" || version != "v1") r.fail("expected header 'SPCAP v1'");
  const int T = parse_int(r, hs, "|T|");
  const int B = parse_int(r, hs, "|B|");
  const int L = parse_int(r, hs, "|L|");
  if (T < 1 || B < 1 || L < 1) r.fail("header counts must be >= 1");

  Instance inst;
  inst.num_terminals = T;
  inst.num_bases = B;

  if (!r.next()) throw ParseError("missing LEVELS line");
  {
    std::istringstream ls(r.line);
    std::string tag;
    ls >> tag;
    if (tag != "LEVELS") r.fail("expected LEVELS line");
    inst.levels.resize(L);
    for (int l = 0; l < L; ++l) inst.levels[l] = parse_num(r, ls, "P_l");
  }
  if (!r.next()) throw ParseError("missing NOISE line");
  {
    std::istringstream ls(r.line);
    std::string tag;
    ls >> tag;
    if (tag != "NOISE") r.fail("expected NOISE line");
    inst.noise = parse_num(r, ls, "N");
  }

  inst.delta.resize(T);
  inst.revenue.resize(T);
  inst.coop_cost.resize(T);
  for (int t = 0; t < T; ++t) {
    if (!r.next()) throw ParseError("missing terminal line");
    std::istringstream ls(r.line);
    std::string tag;
    ls >> tag;
    if (tag != "T") r.fail("expected terminal line 'T id delta r c'");
    const int id = parse_int(r, ls, "terminal id");
    if (id != t) r.fail("terminal ids must be 0..|T|-1 in order");
    inst.delta(t) = parse_num(r, ls, "delta");
    inst.revenue(t) = parse_num(r, ls, "r");
    inst.coop_cost(t) = parse_num(r, ls, "c");
  }
  for (int b = 0; b < B; ++b) {
    if (!r.next()) throw ParseError("missing base line");
    std::istringstream ls(r.line);
    std::string tag;
    ls >> tag;
    if (tag != "B") r.fail("expected base line 'B id'");
    const int id = parse_int(r, ls, "base id");
    if (id != b) r.fail("base ids must be 0..|B|-1 in order");
  }
  inst.atten.resize(T, B);
  for (int t = 0; t < T; ++t) {
    if (!r.next()) throw ParseError("missing attenuation row");
    std::istringstream ls(r.line);
    for (int b = 0; b < B; ++b)
      inst.atten(t, b) = parse_num(r, ls, "attenuation entry");
  }

  const auto violations = validate_instance(inst);
  if (!violations.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw ParseError(msg);
  }
  return inst;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return load_instance(os.str());
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << save_instance(inst);
}

}  // namespace spcap
