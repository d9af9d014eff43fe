#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "bellsu11/algebra/basis.h"
#include "bellsu11/algebra/quad_op.h"

namespace bellsu11::algebra {

using AdjointVector = Eigen::Matrix<std::complex<double>, kAdjointDim, 1>;
using AdjointMatrix = Eigen::Matrix<std::complex<double>, kAdjointDim, kAdjointDim>;

// Quadratic operator with floating-point coefficients over the same 37-slot
// coefficient space (36 basis elements, then the identity).
class FloatQuadOp {
 public:
  FloatQuadOp() { coeffs_.setZero(); }
  explicit FloatQuadOp(const AdjointVector& coeffs) : coeffs_(coeffs) {}
  explicit FloatQuadOp(const QuadOp& exact);

  const AdjointVector& vector() const { return coeffs_; }
  std::complex<double> coefficient(BasisElement e) const { return coeffs_(e.index()); }
  std::complex<double> scalar() const { return coeffs_(kScalarSlot); }

  FloatQuadOp dagger() const;
  // max |x - dagger(x)| over coefficients
  double hermiticity_defect() const;
  double max_abs_diff(const FloatQuadOp& o) const { return (coeffs_ - o.coeffs_).cwiseAbs().maxCoeff(); }

  std::string to_string(double threshold = 1e-12) const;

 private:
  AdjointVector coeffs_;
};

AdjointVector to_vector(const QuadOp& x);

// Matrix of X -> [g, X] on the coefficient space. Column k holds [g, e_k];
// the identity column is zero.
AdjointMatrix ad_matrix(const QuadOp& g);

// exp(i theta ad_g) x = e^{i theta g} x e^{-i theta g}, evaluated with a dense
// scaling-and-squaring exponential of the 37x37 adjoint matrix. Coefficients
// with magnitude below tol are flushed to zero.
//
// With U = exp(i theta g) this is U x U^{-1}; the inverse-first ordering
// U^{-1} x U is conjugate(g, -theta, x).
FloatQuadOp conjugate(const QuadOp& g, double theta, const QuadOp& x, double tol = 1e-14);
FloatQuadOp conjugate(const QuadOp& g, double theta, const FloatQuadOp& x, double tol = 1e-14);

}  // namespace bellsu11::algebra
