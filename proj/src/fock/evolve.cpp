#include "bellsu11/fock/evolve.h"

#include <cmath>
#include <string>

namespace bellsu11::fock {

StateVector evolve(const StateVector& psi, const SparseOperator& g, double theta, const EvolveOptions& opt,
                   EvolveStats* stats) {
  if (!(opt.tol > 0.0)) throw std::invalid_argument("evolve: tol must be positive");
  if (!std::isfinite(theta)) throw std::invalid_argument("evolve: theta must be finite");
  if (g.hermiticity_defect() > opt.hermiticity_tol)
    throw NonHermitianGeneratorError("evolve: generator is not hermitian");
  if (psi.fock().cutoff() != g.basis()->cutoff()) throw BasisMismatchError("evolve: state and generator bases differ");

  EvolveStats local;
  EvolveStats& st = stats ? *stats : local;
  st = {};
  if (theta == 0.0) return psi;

  const double scale = std::abs(theta) * g.inf_norm();
  const double steps_d = std::max(1.0, std::ceil(scale));
  if (steps_d > opt.max_steps)
    throw NonConvergenceError("evolve: |theta| * ||G|| = " + std::to_string(scale) + " needs more than " +
                              std::to_string(opt.max_steps) + " steps");
  const int steps = static_cast<int>(steps_d);
  const double h = theta / steps;
  const double x = std::abs(h) * g.inf_norm();  // <= 1
  const std::complex<double> ih(0.0, h);

  Vector v = psi.amplitudes();
  for (int s = 0; s < steps; ++s) {
    const double vnorm = v.norm();
    Vector term = v;
    Vector acc = v;
    double factor = 1.0;  // x^m / m!
    bool done = vnorm == 0.0;
    double tail = 0.0;
    for (int m = 1; !done; ++m) {
      if (m > opt.max_terms) throw NonConvergenceError("evolve: Taylor series did not converge within max_terms");
      term = (ih / static_cast<double>(m)) * g.apply(term);
      acc += term;
      ++st.terms;
      factor *= x / m;
      tail = factor * x / (m + 1) / (1.0 - x / (m + 2)) * vnorm;
      done = tail <= opt.tol / steps;
    }
    st.error_bound += tail;
    v = std::move(acc);
  }
  st.steps = steps;
  return StateVector(psi.basis(), std::move(v));
}

StateVector evolve(const StateVector& psi, const algebra::QuadOp& g, double theta, double tol) {
  if (!algebra::is_hermitian(g)) throw NonHermitianGeneratorError("evolve: generator " + g.to_string() + " is not hermitian");
  EvolveOptions opt;
  opt.tol = tol;
  if (!(tol > 0.0)) throw std::invalid_argument("evolve: tol must be positive");
  return evolve(psi, matrix(g, psi.basis()), theta, opt);
}

StateVector evolve(const StateVector& psi, const algebra::FloatQuadOp& g, double theta, double tol) {
  EvolveOptions opt;
  opt.tol = tol;
  if (!(tol > 0.0)) throw std::invalid_argument("evolve: tol must be positive");
  if (g.hermiticity_defect() > opt.hermiticity_tol)
    throw NonHermitianGeneratorError("evolve: generator is not hermitian");
  return evolve(psi, matrix(g, psi.basis(), 1e-15), theta, opt);
}

}  // namespace bellsu11::fock
