#pragma once

#include <complex>

#include <Eigen/SparseCore>

#include "bellsu11/algebra/adjoint.h"
#include "bellsu11/algebra/quad_op.h"
#include "bellsu11/fock/state.h"

namespace bellsu11::fock {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

// Matrix of a quadratic operator on a truncated Fock basis. Pair-creation
// terms that leave the cutoff are dropped; the result is P X P with P the
// projector onto the kept shells, and this truncation is the only thing that
// separates it from the infinite-dimensional operator.
class SparseOperator {
 public:
  SparseOperator(BasisPtr basis, SparseMatrix m);

  const BasisPtr& basis() const { return basis_; }
  const SparseMatrix& matrix() const { return m_; }
  std::size_t dim() const { return basis_->dim(); }

  StateVector apply(const StateVector& psi) const;
  Vector apply(const Vector& v) const { return m_ * v; }

  // Max absolute row sum, an upper bound on the spectral norm.
  double inf_norm() const;
  // max |M - M^dag|
  double hermiticity_defect() const;

  SparseOperator operator*(const SparseOperator& o) const;
  SparseOperator operator-(const SparseOperator& o) const;

 private:
  BasisPtr basis_;
  SparseMatrix m_;
};

SparseOperator matrix(const algebra::QuadOp& op, BasisPtr basis);
SparseOperator matrix(const algebra::FloatQuadOp& op, BasisPtr basis, double drop_below = 0.0);

// Projector pi onto {|1,0,1,0>, |1,0,0,1>, |0,1,1,0>, |0,1,0,1>}.
SparseOperator pi_matrix(BasisPtr basis);

}  // namespace bellsu11::fock
