#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bellsu11/algebra/catalog.h"
#include "bellsu11/algebra/structure_constants.h"
#include "bellsu11/experiments/spec.h"

namespace bellsu11::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitAlgebraMismatch = 1,
  kExitConfigError = 2,
  kExitNonConvergence = 3,
};

// Parsed command line. Flags override values read from `config_path`.
struct RunConfig {
  std::string command;
  std::string config_path;

  std::optional<std::string> experiment;
  std::optional<std::string> estimator;
  std::optional<double> gamma;
  std::optional<double> theta_a;
  std::optional<double> theta_b;
  std::optional<double> theta_a_prime;
  std::optional<double> theta_b_prime;
  std::optional<double> phi;
  std::optional<int> cutoff;
  std::optional<double> tol;
  std::optional<double> max_leakage;

  std::string output;  // empty: none, "-": stdout
  std::string format;  // json or csv; empty picks the command default

  // verify-algebra
  bool json = false;
  std::string catalog_path;

  // chsh
  bool search = false;
  int grid_points = 16;

  // scan
  std::string axis = "delta";
  std::vector<double> grid;  // explicit grid, else from/to/points
  std::optional<double> from;
  std::optional<double> to;
  int points = 65;
  unsigned threads = 0;

  // convergence
  std::vector<int> cutoffs = {6, 8, 10, 12};
};

// Spec from the config file (if any) with flag overrides applied; throws
// experiments::SpecError. `angles_given` reports whether any analyzer angle
// came from the file or the flags.
experiments::ExperimentSpec resolve_spec(const RunConfig& cfg, bool* angles_given = nullptr);

int cmd_verify_algebra(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int verify_algebra(const algebra::GeneratorCatalog& catalog, const algebra::StructureConstants& table, bool json,
                   std::ostream& out, std::ostream& err);
int cmd_list_generators(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_chsh(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Runs cfg.command and maps exceptions onto the exit-code contract.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bellsu11::cli
