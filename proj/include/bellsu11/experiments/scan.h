#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bellsu11/experiments/pipeline.h"

namespace bellsu11::experiments {

enum class ScanAxis { kDelta, kGamma, kPhi };
const char* axis_name(ScanAxis a);
ScanAxis parse_axis(const std::string& s);

struct ScanRow {
  double parameter = 0.0;
  double c_raw = 0.0;
  double c_cond = 0.0;
  double numerator = 0.0;    // raw estimator
  double denominator = 0.0;  // raw estimator
  double leakage = 0.0;
  bool raw_degenerate = false;
  bool cond_degenerate = false;
  bool failed = false;
  std::string error;
};

struct ScanTable {
  ScanAxis axis = ScanAxis::kDelta;
  std::vector<ScanRow> rows;  // grid order
  double max_leakage() const;
  int failures() const;
};

// delta sets theta_a = theta_b + delta; gamma and phi set the field directly.
ExperimentSpec with_parameter(const ExperimentSpec& spec, ScanAxis axis, double value);

// Rows are evaluated on `threads` workers (0 = hardware concurrency) and
// stored by grid index. Throws SpecError for an empty or non-monotone grid.
ScanTable scan(const ExperimentSpec& spec, ScanAxis axis, const std::vector<double>& grid, unsigned threads = 0);

std::vector<double> linspace(double lo, double hi, int n);

// Header: parameter,c_raw,c_cond,numerator,denominator,leakage
void write_csv(std::ostream& os, const ScanTable& t);
nlohmann::json to_json(const ScanTable& t);

struct ConvergenceRow {
  int cutoff = 0;
  double c_raw = 0.0;
  double c_cond = 0.0;
  double leakage = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  double raw_extrapolated = 0.0;  // Aitken delta-squared on the last three cutoffs
  double cond_extrapolated = 0.0;
  int raw_digits = 0;  // digits on which the last two cutoffs agree
  int cond_digits = 0;
};

ConvergenceReport convergence(const ExperimentSpec& spec, const std::vector<int>& cutoffs = {6, 8, 10, 12});
nlohmann::json to_json(const ConvergenceReport& r);

// Raw-estimator deviation as gamma shrinks, with the closed form as
// a column: for the ideal pipeline with s = sinh^2(gamma/2),
//   <sz sz> = -2 s (1 + s) cos 2 delta,  <s0 s0> = 6 s^2 + 2 s.
struct GammaDeviationRow {
  double gamma = 0.0;
  double c_raw = 0.0;
  double c_cond = 0.0;
  double deviation = 0.0;  // c_raw - c_cond
  double ratio = 0.0;      // deviation / previous row's deviation (0 for the first row)
  double denominator = 0.0;
  double half_sinh2 = 0.0;  // sinh^2(gamma) / 2
  double closed_form = 0.0;
};

struct GammaDeviationTable {
  double delta = 0.0;
  std::vector<GammaDeviationRow> rows;
  // log2 of successive ratios when gamma is halved
  std::vector<double> orders() const;
};

double ideal_raw_closed_form(double gamma, double delta);
GammaDeviationTable gamma_deviation(const std::vector<double>& gammas, double delta = 0.0, int cutoff = 12);
nlohmann::json to_json(const GammaDeviationTable& t);

}  // namespace bellsu11::experiments
