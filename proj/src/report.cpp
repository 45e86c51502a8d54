#include "spcap/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <vector>

namespace spcap {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line, size_t expect) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  if (fields.size() != expect)
    throw ParseError("report row: expected " + std::to_string(expect) +
                     " fields, got " + std::to_string(fields.size()));
  return fields;
}

int to_int(const std::string& s) {
  size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw ParseError("report row: bad integer '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw ParseError("report row: bad number '" + s + "'");
  return v;
}

}  // namespace

int served_count(const CandidateSolution& sol) {
  int n = 0;
  for (char s : sol.served) n += s ? 1 : 0;
  return n;
}

int max_cluster_size(const CandidateSolution& sol) {
  size_t best = 0;
  for (size_t t = 0; t < sol.cluster.size(); ++t)
    if (sol.served[t]) best = std::max(best, sol.cluster[t].size());
  return static_cast<int>(best);
}

RunReport make_report(std::string id, const Instance& inst,
                      const HybridResult& result) {
  RunReport r;
  r.id = std::move(id);
  r.num_terminals = inst.num_terminals;
  r.num_bases = inst.num_bases;
  r.served_aco = served_count(result.best_ant);
  r.served_hybrid = served_count(result.best);
  r.coverage_pct = inst.num_terminals > 0
                       ? 100.0 * r.served_hybrid / inst.num_terminals
                       : 0.0;
  r.max_cluster = max_cluster_size(result.best);
  r.objective = result.best_value;
  r.bound = result.bound_value;
  r.elapsed_seconds = result.work / kWorkUnitsPerSecond;
  return r;
}

std::string report_csv_header() {
  return "id,terminals,bases,served_aco,served_hybrid,coverage_pct,"
         "max_cluster,objective,bound,elapsed_seconds";
}

std::string to_csv_row(const RunReport& r) {
  if (r.id.find(',') != std::string::npos ||
      r.id.find('\n') != std::string::npos)
    throw ParseError("report id may not contain commas or newlines");
  std::ostringstream os;
  os << r.id << ',' << r.num_terminals << ',' << r.num_bases << ','
     << r.served_aco << ',' << r.served_hybrid << ',' << fmt(r.coverage_pct)
     << ',' << r.max_cluster << ',' << fmt(r.objective) << ',' << fmt(r.bound)
     << ',' << fmt(r.elapsed_seconds);
  return os.str();
}

RunReport from_csv_row(const std::string& line) {
  const auto f = split_csv(line, 10);
  RunReport r;
  r.id = f[0];
  r.num_terminals = to_int(f[1]);
  r.num_bases = to_int(f[2]);
  r.served_aco = to_int(f[3]);
  r.served_hybrid = to_int(f[4]);
  r.coverage_pct = to_double(f[5]);
  r.max_cluster = to_int(f[6]);
  r.objective = to_double(f[7]);
  r.bound = to_double(f[8]);
  r.elapsed_seconds = to_double(f[9]);
  return r;
}

std::string to_csv(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << report_csv_header() << '\n';
  for (const auto& r : reports) os << to_csv_row(r) << '\n';
  return os.str();
}

std::vector<RunReport> from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("report csv: empty input");
  std::string header = line;
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != report_csv_header())
    throw ParseError("report csv: unexpected header");
  std::vector<RunReport> out;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(from_csv_row(line));
  }
  return out;
}

std::string render_table(const std::vector<RunReport>& reports) {
  const std::vector<std::string> head = {
      "ID",   "|T|",       "|B|",   "|T*| (ACO)", "|T*| (ACO+RINS)",
      "Cov%", "Max size cluster", "Objective", "Bound", "Time (s)"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    char cov[32], obj[32], bnd[32], tim[32];
    std::snprintf(cov, sizeof cov, "%.1f", r.coverage_pct);
    std::snprintf(obj, sizeof obj, "%.4f", r.objective);
    std::snprintf(bnd, sizeof bnd, "%.4f", r.bound);
    std::snprintf(tim, sizeof tim, "%.2f", r.elapsed_seconds);
    rows.push_back({r.id, std::to_string(r.num_terminals),
                    std::to_string(r.num_bases), std::to_string(r.served_aco),
                    std::to_string(r.served_hybrid), cov,
                    std::to_string(r.max_cluster), obj, bnd, tim});
  }
  std::vector<size_t> width(head.size());
  for (size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      os << (c + 1 < row.size() ? "  " : "");
    }
    os << '\n';
  };
  emit(head);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string run_log_csv(const std::vector<HybridLogRow>& log) {
  std::ostringstream os;
  os << "iteration,ant,ant_value,rins_value,best_so_far,elapsed_seconds\n";
  for (const auto& row : log)
    os << row.iteration << ',' << row.ant << ',' << fmt(row.ant_value) << ','
       << fmt(row.rins_value) << ',' << fmt(row.best_so_far) << ','
       << fmt(row.elapsed_seconds) << '\n';
  return os.str();
}

}  // namespace spcap
