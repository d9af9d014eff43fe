#pragma once

#include <nlohmann/json.hpp>

#include "bellsu11/experiments/spec.h"
#include "bellsu11/fock/evolve.h"
#include "bellsu11/fock/state.h"

namespace bellsu11::experiments {

// Truncation leakage above spec.max_leakage; the cutoff is too small.
class TruncationError : public fock::NonConvergenceError {
 public:
  TruncationError(const std::string& what, double leakage)
      : fock::NonConvergenceError(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

struct RunResult {
  fock::StateVector state;
  double leakage = 0.0;
  double norm_drift = 0.0;   // | ||psi|| - 1 |
  double error_bound = 0.0;  // summed evolve bounds
  int steps = 0;
};

// Applies the stages left to right to the vacuum.
RunResult run(const ExperimentSpec& spec);
fock::StateVector run_state(const ExperimentSpec& spec);

inline constexpr double kDegenerateDenominator = 1e-14;

struct CorrelationReport {
  Estimator estimator = Estimator::kRaw;
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double leakage = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double weight = 0.0;  // coincidence weight, conditioned estimator only
  bool degenerate = false;
  bool boundary_warning = false;
};

// <sz_a sz_b> / <s0_a s0_b> on the full state.
CorrelationReport correlation_raw(const fock::StateVector& state);
// Same ratio on the normalized coincidence projection.
CorrelationReport correlation_conditioned(const fock::StateVector& state);
CorrelationReport correlation(const fock::StateVector& state, Estimator estimator);

// run() plus the spec's estimator, with gamma and delta filled in.
CorrelationReport evaluate(const ExperimentSpec& spec);
CorrelationReport evaluate(const ExperimentSpec& spec, Estimator estimator);

nlohmann::json to_json(const CorrelationReport& r);

}  // namespace bellsu11::experiments
