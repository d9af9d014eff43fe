#pragma once

#include <stdexcept>

#include "bellsu11/algebra/adjoint.h"
#include "bellsu11/algebra/quad_op.h"
#include "bellsu11/fock/sparse_operator.h"
#include "bellsu11/fock/state.h"

namespace bellsu11::fock {

class NonHermitianGeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when the step budget runs out; usually the cutoff is too small for
// the requested |theta|, or theta itself is huge.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvolveOptions {
  double tol = 1e-12;
  int max_steps = 4096;
  int max_terms = 64;
  double hermiticity_tol = 1e-12;  // for floating-point generators
};

struct EvolveStats {
  int steps = 0;
  int terms = 0;          // matrix-vector products
  double error_bound = 0.0;  // a posteriori bound on ||result - exp(i theta G) psi||
};

// exp(i theta G) psi by a step-split Taylor series. Each step h = theta/s has
// ||hG||_inf <= 1 and is summed until the tail bound
//   x^{m+1}/(m+1)! / (1 - x/(m+2)) * ||v||
// drops below tol/s. Throws NonHermitianGeneratorError, invalid_argument for
// tol <= 0, NonConvergenceError when the budget is exhausted.
StateVector evolve(const StateVector& psi, const SparseOperator& g, double theta, const EvolveOptions& opt,
                   EvolveStats* stats = nullptr);
StateVector evolve(const StateVector& psi, const algebra::QuadOp& g, double theta, double tol = 1e-12);
StateVector evolve(const StateVector& psi, const algebra::FloatQuadOp& g, double theta, double tol = 1e-12);

}  // namespace bellsu11::fock
