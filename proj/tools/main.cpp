#include <iostream>

#include <CLI11.hpp>

#include "bellsu11/cli/commands.h"

namespace {

void experiment_flags(CLI::App* cmd, bellsu11::cli::RunConfig& cfg) {
  cmd->add_option("-c,--config", cfg.config_path, "experiment config (JSON)")->check(CLI::ExistingFile);
  cmd->add_option("--experiment", cfg.experiment, "ideal, horne, ou_mandel or custom");
  cmd->add_option("--estimator", cfg.estimator, "raw or conditioned")
      ->check(CLI::IsMember({"raw", "conditioned"}));
  cmd->add_option("--gamma", cfg.gamma, "squeeze parameter");
  cmd->add_option("--theta-a", cfg.theta_a, "analyzer angle a (rad)");
  cmd->add_option("--theta-b", cfg.theta_b, "analyzer angle b (rad)");
  cmd->add_option("--theta-a-prime", cfg.theta_a_prime, "analyzer angle a' (rad)");
  cmd->add_option("--theta-b-prime", cfg.theta_b_prime, "analyzer angle b' (rad)");
  cmd->add_option("--phi", cfg.phi, "phase difference, horne pipeline (rad)");
  cmd->add_option("--cutoff", cfg.cutoff, "total photon cutoff")->check(CLI::Range(2, 60));
  cmd->add_option("--tol", cfg.tol, "evolution tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-leakage", cfg.max_leakage, "truncation leakage that fails a run")->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", cfg.output, "output file, '-' for stdout");
  cmd->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  bellsu11::cli::RunConfig cfg;
  CLI::App app{"Group-theoretic Bell-test simulator: sp(8,R) algebra checks and truncated Fock-space experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "bellsu11 0.1.0");

  auto* verify = app.add_subcommand("verify-algebra", "check structure constants, closures and identities");
  verify->add_flag("--json", cfg.json, "machine-readable report");
  verify->add_option("--catalog", cfg.catalog_path, "catalog JSON to verify instead of the built-in one")
      ->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list-generators", "print the operator catalog");
  list->add_flag("--json", cfg.json, "catalog as JSON");
  list->add_option("-o,--output", cfg.output, "output file, '-' for stdout");

  auto* run = app.add_subcommand("run", "run one pipeline and report both correlation estimators");
  experiment_flags(run, cfg);

  auto* chsh = app.add_subcommand("chsh", "evaluate S at four analyzer settings");
  experiment_flags(chsh, cfg);
  chsh->add_flag("--search", cfg.search, "grid search plus local refinement for the maximizing setting");
  chsh->add_option("--grid-points", cfg.grid_points, "grid points per angle")->check(CLI::Range(2, 64));

  auto* scan = app.add_subcommand("scan", "sweep delta, gamma or phi");
  experiment_flags(scan, cfg);
  scan->add_option("--axis", cfg.axis, "delta, gamma or phi")->check(CLI::IsMember({"delta", "gamma", "phi"}));
  scan->add_option("--grid", cfg.grid, "explicit grid values")->delimiter(',');
  scan->add_option("--from", cfg.from, "grid start");
  scan->add_option("--to", cfg.to, "grid end");
  scan->add_option("--points", cfg.points, "grid size")->check(CLI::PositiveNumber);
  scan->add_option("--threads", cfg.threads, "worker threads, 0 = hardware concurrency");

  auto* conv = app.add_subcommand("convergence", "repeat a pipeline at increasing cutoffs");
  experiment_flags(conv, cfg);
  conv->add_option("--cutoffs", cfg.cutoffs, "cutoff sequence")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bellsu11::cli::kExitConfigError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return bellsu11::cli::dispatch(cfg, std::cout, std::cerr);
}
