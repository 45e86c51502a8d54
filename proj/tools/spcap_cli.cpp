// spcap: generate instances, compute bounds, run the solvers, render reports.
//
// Exit codes: 0 success, 1 usage error, 2 data error (unreadable or invalid
// files), 3 resource cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spcap/aco.hpp"
#include "spcap/bounds.hpp"
#include "spcap/formulation.hpp"
#include "spcap/instance.hpp"
#include "spcap/oracle.hpp"
#include "spcap/report.hpp"
#include "spcap/rins.hpp"
#include "spcap/solver.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitResource = 3;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

spcap::Instance load_checked(const std::string& path) {
  try {
    return spcap::load_instance(read_file(path));
  } catch (const spcap::ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

// cap linear-algebra parallelism; the solver itself is sequential
void apply_thread_cap() {
  if (const char* s = std::getenv("SPCAP_THREADS")) {
    const int n = std::atoi(s);
    if (n >= 1) Eigen::setNbThreads(n);
  }
}

struct SolveArgs {
  std::string instance_path;
  std::string mode = "hybrid";
  std::string id;
  std::string out = "table";
  std::string log_path;
  std::string solution_path;
  spcap::HybridParams params;
  std::string eta = "exact";
  double time_limit = 1e30;  // exact mode, deterministic seconds
};

void emit_report(const SolveArgs& args, const spcap::RunReport& report) {
  if (args.out == "csv")
    std::cout << spcap::to_csv({report});
  else
    std::cout << spcap::render_table({report});
}

// headline objective; on stderr in csv mode so stdout stays parseable CSV
void emit_objective(const SolveArgs& args, double value) {
  (args.out == "csv" ? std::cerr : std::cout)
      << "objective " << fmt(value) << "\n";
}

int cmd_solve(const SolveArgs& args) {
  const spcap::Instance inst = load_checked(args.instance_path);
  const std::string id =
      args.id.empty() ? args.instance_path : args.id;

  if (args.mode == "oracle") {
    spcap::OracleResult oracle;
    try {
      oracle = spcap::brute_force_opt(inst);
    } catch (const spcap::OracleCapExceeded& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitResource;
    }
    emit_objective(args, oracle.objective);
    spcap::RunReport report;
    report.id = id;
    report.num_terminals = inst.num_terminals;
    report.num_bases = inst.num_bases;
    report.served_aco = spcap::served_count(oracle.solution);
    report.served_hybrid = report.served_aco;
    report.coverage_pct = inst.num_terminals > 0
                              ? 100.0 * report.served_hybrid / inst.num_terminals
                              : 0.0;
    report.max_cluster = spcap::max_cluster_size(oracle.solution);
    report.objective = oracle.objective;
    report.bound = oracle.objective;
    emit_report(args, report);
    if (!args.solution_path.empty())
      write_file(args.solution_path, spcap::save_solution(inst, oracle.solution));
    return 0;
  }

  const spcap::SpcapModels models = spcap::build_models(inst);

  if (args.mode == "exact") {
    spcap::BnbConfig cfg;
    cfg.work_limit = args.time_limit >= 1e29
                         ? 0.0
                         : args.time_limit * spcap::kWorkUnitsPerSecond;
    const spcap::MipResult mip = spcap::solve_mip(models.bigm_gci, cfg);
    if (!mip.has_incumbent) {
      std::cerr << "error: no incumbent found\n";
      return kExitResource;
    }
    emit_objective(args, mip.objective);
    std::vector<int> level(inst.num_bases, 0);
    for (int b = 0; b < inst.num_bases; ++b)
      for (int l = 1; l <= inst.num_levels(); ++l)
        if (mip.x(models.bigm.z(b, l)) > 0.5) level[b] = l;
    std::vector<std::vector<int>> cluster(inst.num_terminals);
    for (int t = 0; t < inst.num_terminals; ++t)
      for (int b = 0; b < inst.num_bases; ++b)
        if (mip.x(models.bigm.y(t, b)) > 0.5) cluster[t].push_back(b);
    const spcap::CandidateSolution sol =
        spcap::derive_full_solution(inst, level, cluster);
    spcap::RunReport report;
    report.id = id;
    report.num_terminals = inst.num_terminals;
    report.num_bases = inst.num_bases;
    report.served_aco = spcap::served_count(sol);
    report.served_hybrid = report.served_aco;
    report.coverage_pct = inst.num_terminals > 0
                              ? 100.0 * report.served_hybrid / inst.num_terminals
                              : 0.0;
    report.max_cluster = spcap::max_cluster_size(sol);
    report.objective = spcap::objective_value(inst, sol);
    report.bound = mip.best_bound;
    report.elapsed_seconds = mip.work / spcap::kWorkUnitsPerSecond;
    emit_report(args, report);
    if (!args.solution_path.empty())
      write_file(args.solution_path, spcap::save_solution(inst, sol));
    return 0;
  }

  // hybrid
  spcap::HybridParams params = args.params;
  params.eta_mode =
      args.eta == "cached" ? spcap::EtaMode::Cached : spcap::EtaMode::Exact;
  const spcap::HybridResult result = spcap::run_hybrid(inst, models, params);
  emit_objective(args, result.best_value);
  emit_report(args, spcap::make_report(id, inst, result));
  if (!args.log_path.empty())
    write_file(args.log_path, spcap::run_log_csv(result.log));
  if (!args.solution_path.empty())
    write_file(args.solution_path, spcap::save_solution(inst, result.best));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  CLI::App app{"SPCAP toolkit: cooperative wireless scheduling, power and "
               "cluster assignment"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the flags");

  // generate
  auto* gen = app.add_subcommand("generate", "generate a synthetic instance");
  spcap::GenConfig gen_cfg;
  std::string gen_out;
  gen->add_option("--terminals", gen_cfg.num_terminals, "|T|");
  gen->add_option("--bases", gen_cfg.num_bases, "|B|");
  gen->add_option("--levels", gen_cfg.num_levels, "|L|");
  gen->add_option("--area", gen_cfg.area_side, "square side");
  gen->add_option("--gamma", gen_cfg.pathloss_exp, "path-loss exponent");
  gen->add_option("--pmax", gen_cfg.p_max, "top power level");
  gen->add_option("--shadow-db", gen_cfg.shadow_spread_db, "shadowing spread");
  gen->add_option("--delta", gen_cfg.delta, "SIR threshold");
  gen->add_option("--noise", gen_cfg.noise, "system noise");
  gen->add_option("--revenue", gen_cfg.revenue, "per-terminal revenue");
  gen->add_option("--coop-cost", gen_cfg.coop_cost, "per-base cooperation cost");
  gen->add_option("--seed", gen_cfg.seed, "rng seed");
  gen->add_option("--out", gen_out, "output instance file")->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "relaxation bounds of an instance");
  std::string bounds_instance, bounds_out = "table";
  bounds->add_option("instance", bounds_instance, "instance file")->required();
  bounds->add_option("--out", bounds_out, "csv|table")
      ->check(CLI::IsMember({"csv", "table"}));

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance");
  SolveArgs sargs;
  solve->add_option("instance", sargs.instance_path, "instance file")->required();
  solve->add_option("--mode", sargs.mode, "hybrid|exact|oracle")
      ->check(CLI::IsMember({"hybrid", "exact", "oracle"}));
  solve->add_option("--id", sargs.id, "report row id (default: instance path)");
  solve->add_option("--seed", sargs.params.seed, "rng seed");
  solve->add_option("--alpha", sargs.params.alpha, "trail weight in [0,1]");
  solve->add_option("--ants", sargs.params.ants, "ants per batch (0 = |B|/2)");
  solve->add_option("--psi", sargs.params.moving_avg, "moving-average width");
  solve->add_option("--epsilon", sargs.params.rins_epsilon,
                    "improvement agreement tolerance");
  solve->add_option("--rins-time", sargs.params.rins_time,
                    "improvement budget, deterministic seconds");
  solve->add_option("--loops", sargs.params.loops, "outer iterations");
  solve->add_option("--eta", sargs.eta, "exact|cached attractiveness")
      ->check(CLI::IsMember({"exact", "cached"}));
  solve->add_option("--time-budget", sargs.params.time_budget,
                    "total budget, deterministic seconds");
  solve->add_option("--time-limit", sargs.time_limit,
                    "exact-mode budget, deterministic seconds");
  solve->add_option("--out", sargs.out, "csv|table")
      ->check(CLI::IsMember({"csv", "table"}));
  solve->add_option("--log", sargs.log_path, "write the per-ant run log CSV");
  solve->add_option("--solution", sargs.solution_path, "write the solution file");

  // report
  auto* report = app.add_subcommand("report", "merge report CSVs into a table");
  std::vector<std::string> report_files;
  std::string report_out = "table";
  report->add_option("files", report_files, "report CSV files")->required();
  report->add_option("--out", report_out, "csv|table")
      ->check(CLI::IsMember({"csv", "table"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const spcap::Instance inst = spcap::generate_instance(gen_cfg);
      write_file(gen_out, spcap::save_instance(inst));
      return 0;
    }
    if (bounds->parsed()) {
      const spcap::Instance inst = load_checked(bounds_instance);
      const spcap::SpcapModels models = spcap::build_models(inst);
      const spcap::BoundResult pi = spcap::pi_bound(inst, models);
      const spcap::BoundResult bm = spcap::bm_bound(inst, models);
      const spcap::BoundResult strong = spcap::strong_bm_bound(inst, models);
      if (bounds_out == "csv") {
        std::cout << "bound,value,cuts,iterations\n"
                  << "pi," << fmt(pi.value) << ',' << pi.cut_count << ','
                  << pi.iterations << "\n"
                  << "bm," << fmt(bm.value) << ",0,1\n"
                  << "strong_bm," << fmt(strong.value) << ','
                  << strong.cut_count << ",1\n";
      } else {
        std::cout << "PI-bound       " << fmt(pi.value) << "  (cuts "
                  << pi.cut_count << ", rounds " << pi.iterations << ")\n"
                  << "BM-bound       " << fmt(bm.value) << "\n"
                  << "strongBM-bound " << fmt(strong.value) << "\n";
      }
      return 0;
    }
    if (solve->parsed()) return cmd_solve(sargs);
    if (report->parsed()) {
      std::vector<spcap::RunReport> rows;
      for (const auto& path : report_files) {
        try {
          for (auto& r : spcap::from_csv(read_file(path)))
            rows.push_back(std::move(r));
        } catch (const spcap::ParseError& e) {
          throw DataError(path + ": " + e.what());
        }
      }
      if (report_out == "csv")
        std::cout << spcap::to_csv(rows);
      else
        std::cout << spcap::render_table(rows);
      return 0;
    }
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const spcap::OracleCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
