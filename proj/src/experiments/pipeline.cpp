#include "bellsu11/experiments/pipeline.h"

#include <cmath>
#include <sstream>

#include "bellsu11/fock/observables.h"
#include "bellsu11/fock/sparse_operator.h"

namespace bellsu11::experiments {
namespace {

using algebra::GeneratorCatalog;
using fock::SparseOperator;
using fock::StateVector;

struct Observables {
  SparseOperator sz_a, sz_b, s0_a, s0_b;
};

Observables observables(const fock::BasisPtr& basis) {
  const auto& cat = GeneratorCatalog::standard();
  return {fock::matrix(cat.at("sigma_z_a"), basis), fock::matrix(cat.at("sigma_z_b"), basis),
          fock::matrix(cat.at("sigma_0_a"), basis), fock::matrix(cat.at("sigma_0_b"), basis)};
}

CorrelationReport ratio(const StateVector& psi, Estimator est) {
  const Observables obs = observables(psi.basis());
  const auto num = fock::expect_product(psi, {obs.sz_a, obs.sz_b});
  const auto den = fock::expect_product(psi, {obs.s0_a, obs.s0_b});
  CorrelationReport r;
  r.estimator = est;
  r.numerator = num.value.real();
  r.denominator = den.value.real();
  r.boundary_warning = den.boundary_warning || num.boundary_warning;
  r.leakage = fock::leakage(psi);
  if (r.denominator < kDegenerateDenominator) {
    r.degenerate = true;
    r.value = 0.0;
  } else {
    r.value = r.numerator / r.denominator;
  }
  return r;
}

}  // namespace

RunResult run(const ExperimentSpec& spec) {
  spec.validate();
  const auto& cat = GeneratorCatalog::standard();
  auto basis = fock::FockBasis::make(spec.cutoff);
  StateVector psi = fock::vacuum(basis);
  fock::EvolveOptions opt;
  opt.tol = spec.tol;
  RunResult out{psi};
  for (const Stage& st : spec.stages) {
    SparseOperator g = st.op ? fock::matrix(*st.op, basis, 1e-15) : fock::matrix(cat.at(st.generator), basis);
    fock::EvolveStats stats;
    psi = fock::evolve(psi, g, st.parameter, opt, &stats);
    out.error_bound += stats.error_bound;
    out.steps += stats.steps;
  }
  out.leakage = fock::leakage(psi);
  out.norm_drift = std::abs(psi.norm() - 1.0);
  if (out.leakage > spec.max_leakage) {
    std::ostringstream msg;
    msg << "truncation leakage " << out.leakage << " exceeds " << spec.max_leakage << " at cutoff " << spec.cutoff
        << "; increase --cutoff";
    throw TruncationError(msg.str(), out.leakage);
  }
  out.state = std::move(psi);
  return out;
}

StateVector run_state(const ExperimentSpec& spec) { return run(spec).state; }

CorrelationReport correlation_raw(const StateVector& state) { return ratio(state, Estimator::kRaw); }

CorrelationReport correlation_conditioned(const StateVector& state) {
  auto proj = fock::project_pi(state);
  CorrelationReport r;
  r.estimator = Estimator::kConditioned;
  r.weight = proj.weight;
  r.leakage = fock::leakage(state);
  if (proj.weight < kDegenerateDenominator) {
    r.degenerate = true;
    return r;
  }
  StateVector kept(proj.state.basis(), proj.state.amplitudes() / std::sqrt(proj.weight));
  CorrelationReport inner = ratio(kept, Estimator::kConditioned);
  inner.weight = proj.weight;
  inner.leakage = r.leakage;
  return inner;
}

CorrelationReport correlation(const StateVector& state, Estimator estimator) {
  return estimator == Estimator::kRaw ? correlation_raw(state) : correlation_conditioned(state);
}

CorrelationReport evaluate(const ExperimentSpec& spec) { return evaluate(spec, spec.estimator); }

CorrelationReport evaluate(const ExperimentSpec& spec, Estimator estimator) {
  RunResult res = run(spec);
  CorrelationReport r = correlation(res.state, estimator);
  r.gamma = spec.gamma;
  r.delta = spec.delta();
  r.leakage = res.leakage;
  return r;
}

nlohmann::json to_json(const CorrelationReport& r) {
  return {{"estimator", estimator_name(r.estimator)},
          {"value", r.value},
          {"numerator", r.numerator},
          {"denominator", r.denominator},
          {"leakage", r.leakage},
          {"gamma", r.gamma},
          {"delta", r.delta},
          {"weight", r.weight},
          {"degenerate", r.degenerate},
          {"boundary_warning", r.boundary_warning}};
}

}  // namespace bellsu11::experiments
