#include "bellsu11/algebra/adjoint.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace bellsu11::algebra {

AdjointVector to_vector(const QuadOp& x) {
  AdjointVector v = AdjointVector::Zero();
  for (const auto& [e, c] : x.terms()) v(e.index()) = c.to_complex();
  v(kScalarSlot) = x.scalar().to_complex();
  return v;
}

FloatQuadOp::FloatQuadOp(const QuadOp& exact) : coeffs_(to_vector(exact)) {}

FloatQuadOp FloatQuadOp::dagger() const {
  AdjointVector out = AdjointVector::Zero();
  for (const auto& e : all_basis_elements()) {
    BasisElement d = e;
    switch (e.kind) {
      case Kind::kPairCreate:
        d = BasisElement::B(e.i, e.j);
        break;
      case Kind::kPairAnnihilate:
        d = BasisElement::A(e.i, e.j);
        break;
      case Kind::kMixed:
        d = BasisElement::C(e.j, e.i);
        break;
    }
    out(d.index()) = std::conj(coeffs_(e.index()));
  }
  out(kScalarSlot) = std::conj(coeffs_(kScalarSlot));
  return FloatQuadOp(out);
}

double FloatQuadOp::hermiticity_defect() const { return max_abs_diff(dagger()); }

std::string FloatQuadOp::to_string(double threshold) const {
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (int k = 0; k < kAdjointDim; ++k) {
    const auto c = coeffs_(k);
    if (std::abs(c) < threshold) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
    if (k != kScalarSlot) os << ' ' << BasisElement::from_index(k).to_string();
  }
  return first ? "0" : os.str();
}

AdjointMatrix ad_matrix(const QuadOp& g) {
  AdjointMatrix m = AdjointMatrix::Zero();
  for (const auto& e : all_basis_elements()) m.col(e.index()) = to_vector(commutator(g, QuadOp(e)));
  return m;
}

FloatQuadOp conjugate(const QuadOp& g, double theta, const FloatQuadOp& x, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("conjugate: tol must be positive");
  const AdjointMatrix generator = std::complex<double>(0.0, theta) * ad_matrix(g);
  const AdjointMatrix propagator = generator.exp();
  AdjointVector out = propagator * x.vector();
  for (int k = 0; k < kAdjointDim; ++k) {
    auto& c = out(k);
    if (std::abs(c.real()) < tol) c.real(0.0);
    if (std::abs(c.imag()) < tol) c.imag(0.0);
  }
  return FloatQuadOp(out);
}

FloatQuadOp conjugate(const QuadOp& g, double theta, const QuadOp& x, double tol) {
  return conjugate(g, theta, FloatQuadOp(x), tol);
}

}  // namespace bellsu11::algebra
