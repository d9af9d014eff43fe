#include "bellsu11/experiments/checks.h"

#include <cmath>
#include <numbers>

#include "bellsu11/fock/observables.h"

namespace bellsu11::experiments {
namespace {

using algebra::FloatQuadOp;
using algebra::GeneratorCatalog;
using fock::StateVector;

const GeneratorCatalog& cat() { return GeneratorCatalog::standard(); }

EquivalenceReport compare(const StateVector& a, const StateVector& b) {
  EquivalenceReport r;
  r.distance = (a.amplitudes() - b.amplitudes()).norm();
  r.distance_up_to_phase = fock::distance_up_to_phase(a, b);
  const auto pa = fock::project_pi(a), pb = fock::project_pi(b);
  r.post_selected_fidelity = fock::fidelity(pa.state, pb.state);
  return r;
}

}  // namespace

double sigma_rotation_defect(double delta) {
  const auto& sz = cat().at("sigma_z_a");
  const auto& sy = cat().at("sigma_y_a");
  // U^dag X U with U = exp(i delta J_a); J_b commutes with sz_a.
  const FloatQuadOp lhs = algebra::conjugate(cat().at("J_a"), -delta, sz);
  const FloatQuadOp rhs(std::cos(delta) * algebra::to_vector(sz) - std::sin(delta) * algebra::to_vector(sy));
  return lhs.max_abs_diff(rhs);
}

RotationIdentityReport verify_rotation_identity(double gamma, double theta_a, double theta_b,
                                                const std::vector<double>& shifts, int cutoff) {
  RotationIdentityReport r;
  r.gamma = gamma;
  r.theta_a = theta_a;
  r.theta_b = theta_b;
  ExperimentSpec base = make_ideal(gamma, theta_a, theta_b);
  base.cutoff = cutoff;
  const StateVector psi0 = run_state(base);
  const double raw0 = correlation_raw(psi0).value, cond0 = correlation_conditioned(psi0).value;
  double worst = 0.0;
  for (double s : shifts) {
    const StateVector psi = run_state(base.at_setting(theta_a + s, theta_b + s));
    ShiftCheck c{s, std::abs(correlation_raw(psi).value - raw0), std::abs(correlation_conditioned(psi).value - cond0)};
    worst = std::max({worst, c.raw_change, c.cond_change});
    r.shifts.push_back(c);
  }
  r.sigma_defect = sigma_rotation_defect(theta_a - theta_b);
  r.ok = worst < 1e-9 && r.sigma_defect < 1e-10;
  return r;
}

nlohmann::json to_json(const RotationIdentityReport& r) {
  nlohmann::json shifts = nlohmann::json::array();
  for (const auto& s : r.shifts)
    shifts.push_back({{"shift", s.shift}, {"raw_change", s.raw_change}, {"cond_change", s.cond_change}});
  return {{"gamma", r.gamma},   {"theta_a", r.theta_a}, {"theta_b", r.theta_b},
          {"shifts", shifts},   {"sigma_defect", r.sigma_defect}, {"ok", r.ok}};
}

EquivalenceReport horne_equivalence(double gamma, double phi, int cutoff) {
  ExperimentSpec staged = make_horne(gamma, phi);
  staged.cutoff = cutoff;
  const auto& jbs = cat().at("J_BS");
  const FloatQuadOp k2 = algebra::conjugate(jbs, kBeamSplitterAngle, cat().at("K_prime"));
  const FloatQuadOp j2 = algebra::conjugate(jbs, kBeamSplitterAngle, cat().at("J_prime"));
  ExperimentSpec conj = make_custom({{"U_BS K' U_BS^-1", gamma, k2}, {"U_BS J' U_BS^-1", phi, j2}});
  conj.cutoff = cutoff;
  return compare(run_state(staged), run_state(conj));
}

OuMandelIdentityReport ou_mandel_identity(double gamma, int cutoff) {
  OuMandelIdentityReport r;
  ExperimentSpec staged = make_ou_mandel(gamma);
  staged.cutoff = cutoff;
  staged.stages.resize(3);  // drop the (zero-angle) analyzer rotations
  const StateVector psi = run_state(staged);

  // U = U_BS U_a  =>  U K U^{-1} = conj_BS(conj_a(K))
  const auto& k = cat().at("K_OM");
  const FloatQuadOp after_a = algebra::conjugate(cat().at("J_a"), kHalfWaveAngle, k);
  r.conjugated_generator = algebra::conjugate(cat().at("J_BS"), kBeamSplitterAngle, after_a);
  r.generator_defect = r.conjugated_generator.max_abs_diff(FloatQuadOp(cat().at("K_OM_prime")));

  ExperimentSpec one = make_custom({{"U K_OM U^-1", gamma, r.conjugated_generator}});
  one.cutoff = cutoff;
  r.conjugated = compare(psi, run_state(one));
  ExperimentSpec printed = make_custom({{"K_OM_prime", gamma, {}}});
  printed.cutoff = cutoff;
  r.printed = compare(psi, run_state(printed));
  return r;
}

double ou_mandel_fidelity(double gamma, int cutoff) {
  ExperimentSpec s = make_ou_mandel(gamma);
  s.cutoff = cutoff;
  const StateVector psi = run_state(s);
  const auto proj = fock::project_pi(psi);
  if (proj.weight <= 0.0) return 0.0;
  return fock::fidelity(proj.state, fock::psi_minus(psi.basis()));
}

double perturbative_residual(const std::string& generator, double gamma, int cutoff) {
  auto basis = fock::FockBasis::make(cutoff);
  const auto& g = cat().at(generator);
  const StateVector vac = fock::vacuum(basis);
  const StateVector out = fock::evolve(vac, g, gamma, 1e-15);
  const fock::Vector first = fock::matrix(g, basis).apply(vac.amplitudes());
  const fock::Vector approx = vac.amplitudes() + std::complex<double>(0.0, gamma) * first;
  return (out.amplitudes() - approx).norm() / (gamma * gamma);
}

algebra::QuadOp horne_transformed_target() {
  using algebra::A;
  using algebra::B;
  return algebra::frac(-1, 2) * (A(1, 3) - A(2, 4) + B(1, 3) - B(2, 4));
}

BeamSplitterConjugation beam_splitter_conjugation(double theta) {
  BeamSplitterConjugation r;
  r.theta = theta;
  r.result = algebra::conjugate(cat().at("J_BS"), theta, cat().at("K_prime"));
  r.defect = r.result.max_abs_diff(FloatQuadOp(horne_transformed_target()));
  return r;
}

BeamSplitterConjugation best_beam_splitter_conjugation(int grid) {
  const double span = 4 * std::numbers::pi;
  BeamSplitterConjugation best = beam_splitter_conjugation(0.0);
  int best_k = 0;
  for (int k = 1; k < grid; ++k) {
    auto c = beam_splitter_conjugation(span * k / grid);
    if (c.defect < best.defect) {
      best = c;
      best_k = k;
    }
  }
  // golden-section on the bracketing cell
  double lo = span * (best_k - 1) / grid, hi = span * (best_k + 1) / grid;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (beam_splitter_conjugation(a).defect < beam_splitter_conjugation(b).defect)
      hi = b;
    else
      lo = a;
  }
  auto c = beam_splitter_conjugation((lo + hi) / 2);
  return c.defect < best.defect ? c : best;
}

}  // namespace bellsu11::experiments
