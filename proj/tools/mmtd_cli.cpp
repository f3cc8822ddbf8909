// Command-line front end: topology analysis, deployment, schedule planning,
// detection experiments, the 3-bus example and OPF-cycle weighting.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmtd/mmtd.hpp"

namespace {

constexpr int k_usage_exit = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bundled name, or a path to a MATPOWER file.
mmtd::GridCase resolve_case(const std::string& arg) {
  for (const auto& name : mmtd::bundled_case_names())
    if (name == arg) return mmtd::load_bundled_case(arg);
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open " + arg);
    return mmtd::parse_matpower_case(in, std::filesystem::path(arg).stem().string());
  }
  std::string known;
  for (const auto& name : mmtd::bundled_case_names()) known += " " + name;
  throw UsageError("unknown case '" + arg + "' (bundled:" + known + ", or a path to a .m file)");
}

std::string join_one_based(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto l : v) s += (s.empty() ? "" : " ") + std::to_string(l + 1);
  return s.empty() ? "(none)" : s;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-stage moving target defense against false data injection"};
  app.require_subcommand(1);

  std::string case_arg;

  auto* analyze = app.add_subcommand("analyze", "Bridges, completeness and the rank supremum of a case");
  analyze->add_option("case", case_arg, "Bundled case name or .m path")->required();

  bool full = false;
  auto* deploy = app.add_subcommand("deploy", "Smallest D-FACTS deployment that reaches the supremum");
  deploy->add_option("case", case_arg, "Bundled case name or .m path")->required();
  deploy->add_flag("--full", full, "Deploy on every branch instead");

  double tau = 0.2;
  std::uint64_t seed = 1;
  std::size_t max_stages = 10;
  double min_perturbation = 0.0;
  std::string out_path, csv_path;
  auto* plan = app.add_subcommand("plan", "Multi-stage reactance schedule (JSON document)");
  plan->add_option("case", case_arg, "Bundled case name or .m path")->required();
  plan->add_option("--tau", tau, "Perturbation bound as a fraction of x0")->check(CLI::Range(0.0, 1.0));
  plan->add_option("--seed", seed, "Random seed");
  plan->add_option("--max-stages", max_stages, "Stage limit")->check(CLI::PositiveNumber);
  plan->add_option("--min-perturbation", min_perturbation, "Resample perturbations smaller than this fraction");
  plan->add_flag("--full", full, "Deploy on every branch");
  plan->add_option("-o,--output", out_path, "Schedule file (default stdout)");
  plan->add_option("--doa-csv", csv_path, "Write DoA/n per stage as CSV");

  mmtd::AdpConfig adp_cfg;
  std::string method = "chi_square";
  bool runtime = false;
  auto* adp = app.add_subcommand("adp", "Attack detection probability by Monte-Carlo");
  adp->add_option("case", case_arg, "Bundled case name or .m path")->required();
  adp->add_option("--trials", adp_cfg.trials, "Attack trials")->check(CLI::PositiveNumber);
  adp->add_option("--noise", adp_cfg.noise, "Noise sigma as a fraction of each reading")->check(CLI::NonNegativeNumber);
  adp->add_option("--alpha", adp_cfg.alpha, "False-positive target")->check(CLI::Range(0.0, 0.5));
  adp->add_option("--magnitude", adp_cfg.attack_mw, "Largest injected flow deviation (MW)")
      ->check(CLI::PositiveNumber);
  adp->add_option("--seed", adp_cfg.seed, "Random seed");
  adp->add_option("--method", method, "Threshold method")->check(CLI::IsMember({"chi_square", "monte_carlo"}));
  adp->add_option("--tau", adp_cfg.tau, "Perturbation bound")->check(CLI::Range(0.0, 1.0));
  adp->add_option("--max-stages", adp_cfg.max_stages, "Stage limit")->check(CLI::PositiveNumber);
  adp->add_flag("--full", full, "Deploy on every branch");
  adp->add_flag("--runtime", runtime, "Include wall time in the report");
  adp->add_option("-o,--output", out_path, "Report file (default stdout)");
  adp->add_option("--csv", csv_path, "Write strategy,case,adp rows");

  auto* table1 = app.add_subcommand("table1", "Recompute the 3-bus worked example");
  bool schedule_doc = false;
  table1->add_flag("--schedule", schedule_doc, "Print the multi-stage schedule document instead");

  mmtd::EconomicCycle cycle;
  std::optional<double> omega;
  auto* economic = app.add_subcommand("economic", "Loss averaged over one OPF cycle");
  economic->add_option("--cycle", cycle.cycle_s, "Cycle length T (s)")->check(CLI::PositiveNumber);
  economic->add_option("--window", cycle.window_s, "Perturbation window (s)")->check(CLI::NonNegativeNumber);
  economic->add_option("--omega", omega, "Window fraction; overrides --window")->check(CLI::Range(0.0, 1.0));
  economic->add_option("--stage-loss", cycle.stage_losses_mw, "Loss of one perturbation stage (MW); repeatable")
      ->required();
  economic->add_option("--steady", cycle.steady_loss_mw, "Steady-scheme loss (MW)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return k_usage_exit;
  }

  try {
    const auto mode = full ? mmtd::DeploymentMode::full : mmtd::DeploymentMode::minimal;

    if (*analyze) {
      const auto gc = resolve_case(case_arg);
      const auto t = mmtd::Topology::from_case(gc);
      const auto c = mmtd::verify_completeness(t);
      const auto all = mmtd::analyze_deployment(t, [&] {
        std::vector<std::size_t> v(t.branch_count());
        for (std::size_t l = 0; l < v.size(); ++l) v[l] = l;
        return v;
      }());
      std::cout << "case " << gc.name << "\n"
                << "buses " << t.bus_count() << ", branches " << t.branch_count() << ", states "
                << t.cut_space_dimension() << "\n"
                << "complete " << (c.complete ? "yes" : "no") << "\n"
                << "DoI = " << c.doi << "\n"
                << "bridges " << join_one_based(c.bridges) << "\n"
                << "supremum L = " << all.supremum << " (min DoA " << t.branch_count() - all.supremum << ")\n";
      return 0;
    }

    if (*deploy) {
      const auto s = mmtd::CaseSetup::build(resolve_case(case_arg), mode);
      std::cout << "case " << s.grid.name << "\n"
                << "|K_D| = " << s.plan.deployed.size() << "\n"
                << "K_D " << join_one_based(s.plan.deployed) << "\n"
                << "m_D = " << s.plan.m_d << ", m_sc_D = " << s.plan.m_sc_d << "\n"
                << "L_D = " << s.plan.supremum << "\n";
      return 0;
    }

    if (*plan) {
      const auto s = mmtd::CaseSetup::build(resolve_case(case_arg), mode);
      mmtd::Rng rng(mmtd::derive_seed(seed, mmtd::stream::plan));
      const auto sched = mmtd::plan_mmtd(s.grid.reactances(), s.plan, s.loops, tau, rng, max_stages,
                                         {min_perturbation, mmtd::k_default_max_retries});
      if (!sched.complete)
        std::cerr << "warning: schedule stops at rank " << sched.final_rank() << " below the supremum "
                  << sched.supremum << "\n";
      emit(mmtd::write_schedule(mmtd::to_document(sched, case_arg)), out_path);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        mmtd::write_doa_csv(csv, sched.doa_trajectory(), static_cast<std::size_t>(s.H0.cols()));
      }
      return 0;
    }

    if (*adp) {
      adp_cfg.case_name = case_arg;
      adp_cfg.deployment = mode;
      adp_cfg.method = mmtd::parse_threshold_method(method);
      const auto s = mmtd::CaseSetup::build(resolve_case(case_arg), mode);
      const auto rep = mmtd::run_adp(s, adp_cfg);
      for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
      emit(mmtd::to_json(rep, runtime).dump(2) + "\n", out_path);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot write " + csv_path);
        mmtd::write_adp_csv(csv, mmtd::adp_csv_rows(rep));
      }
      return 0;
    }

    if (*table1) {
      if (schedule_doc)
        std::cout << mmtd::write_schedule(mmtd::table1_schedule());
      else
        std::cout << mmtd::to_json(mmtd::reproduce_table1()).dump(2) << "\n";
      return 0;
    }

    if (*economic) {
      if (omega) cycle.window_s = *omega * cycle.cycle_s;
      std::cout << mmtd::to_json(cycle).dump(2) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return k_usage_exit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
