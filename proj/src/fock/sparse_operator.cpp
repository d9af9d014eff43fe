#include "bellsu11/fock/sparse_operator.h"

#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "bellsu11/fock/observables.h"

namespace bellsu11::fock {
namespace {

using algebra::BasisElement;
using algebra::Kind;
using Triplet = Eigen::Triplet<std::complex<double>>;

// Image of basis state n under a basis element: target occupation and the
// integer whose square root is the matrix element. nullopt if annihilated or
// pushed out of the cutoff.
struct Image {
  Occupation target;
  long long squared;
  bool half_shift = false;  // C_ii carries +1/2 on the diagonal
};

std::optional<Image> image(const BasisElement& e, const Occupation& n, int cutoff) {
  const int i = e.i - 1, j = e.j - 1;
  Occupation t = n;
  long long sq = 1;
  switch (e.kind) {
    case Kind::kPairCreate:  // c_i^dag c_j^dag
      if (total_photons(n) + 2 > cutoff) return std::nullopt;
      sq *= ++t[j];
      sq *= ++t[i];
      break;
    case Kind::kPairAnnihilate:  // c_i c_j
      if (t[j] == 0) return std::nullopt;
      sq *= t[j]--;
      if (t[i] == 0) return std::nullopt;
      sq *= t[i]--;
      break;
    case Kind::kMixed:  // c_i^dag c_j + delta_ij / 2
      if (i == j) return Image{t, static_cast<long long>(t[i]), true};
      if (t[j] == 0) return std::nullopt;
      sq *= t[j]--;
      sq *= ++t[i];
      break;
  }
  return Image{t, sq, false};
}

template <typename CoeffOf>
SparseOperator build(BasisPtr basis, const std::vector<BasisElement>& elements, CoeffOf coeff,
                     std::complex<double> scalar) {
  const FockBasis& fb = *basis;
  std::vector<Triplet> triplets;
  triplets.reserve(fb.dim() * (elements.size() + 1));
  for (std::size_t col = 0; col < fb.dim(); ++col) {
    const Occupation& n = fb.occupation(col);
    const auto c = static_cast<int>(col);
    if (scalar != 0.0) triplets.emplace_back(c, c, scalar);
    for (const BasisElement& e : elements) {
      auto img = image(e, n, fb.cutoff());
      if (!img) continue;
      const std::complex<double> w = coeff(e);
      if (img->half_shift) {
        triplets.emplace_back(c, c, w * (static_cast<double>(img->squared) + 0.5));
        continue;
      }
      auto row = fb.index(img->target);
      if (!row) continue;
      triplets.emplace_back(static_cast<int>(*row), c, w * std::sqrt(static_cast<double>(img->squared)));
    }
  }
  const auto d = static_cast<Eigen::Index>(fb.dim());
  SparseMatrix m(d, d);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return SparseOperator(std::move(basis), std::move(m));
}

}  // namespace

SparseOperator::SparseOperator(BasisPtr basis, SparseMatrix m) : basis_(std::move(basis)), m_(std::move(m)) {
  if (!basis_) throw std::invalid_argument("null Fock basis");
  if (static_cast<std::size_t>(m_.rows()) != basis_->dim() || m_.rows() != m_.cols())
    throw BasisMismatchError("operator shape does not match the Fock basis");
}

StateVector SparseOperator::apply(const StateVector& psi) const {
  if (psi.fock().cutoff() != basis_->cutoff()) throw BasisMismatchError("operator and state bases differ");
  return StateVector(basis_, m_ * psi.amplitudes());
}

double SparseOperator::inf_norm() const {
  double best = 0.0;
  for (Eigen::Index r = 0; r < m_.outerSize(); ++r) {
    double row = 0.0;
    for (SparseMatrix::InnerIterator it(m_, r); it; ++it) row += std::abs(it.value());
    best = std::max(best, row);
  }
  return best;
}

double SparseOperator::hermiticity_defect() const {
  SparseMatrix adj = m_.adjoint();
  SparseMatrix diff = m_ - adj;
  double worst = 0.0;
  for (Eigen::Index r = 0; r < diff.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(diff, r); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

SparseOperator SparseOperator::operator*(const SparseOperator& o) const {
  SparseMatrix p = m_ * o.m_;
  return SparseOperator(basis_, std::move(p));
}

SparseOperator SparseOperator::operator-(const SparseOperator& o) const {
  SparseMatrix p = m_ - o.m_;
  return SparseOperator(basis_, std::move(p));
}

SparseOperator matrix(const algebra::QuadOp& op, BasisPtr basis) {
  std::vector<BasisElement> elements;
  for (const auto& [e, c] : op.terms()) elements.push_back(e);
  return build(
      std::move(basis), elements, [&](const BasisElement& e) { return op.terms().at(e).to_complex(); },
      op.scalar().to_complex());
}

SparseOperator matrix(const algebra::FloatQuadOp& op, BasisPtr basis, double drop_below) {
  std::vector<BasisElement> elements;
  for (const BasisElement& e : algebra::all_basis_elements())
    if (std::abs(op.coefficient(e)) > drop_below) elements.push_back(e);
  const std::complex<double> s = std::abs(op.scalar()) > drop_below ? op.scalar() : 0.0;
  return build(std::move(basis), elements, [&](const BasisElement& e) { return op.coefficient(e); }, s);
}

SparseOperator pi_matrix(BasisPtr basis) {
  std::vector<Triplet> triplets;
  for (const Occupation& n : kPiKets) {
    auto k = basis->index(n);
    if (k) triplets.emplace_back(static_cast<int>(*k), static_cast<int>(*k), 1.0);
  }
  const auto d = static_cast<Eigen::Index>(basis->dim());
  SparseMatrix m(d, d);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return SparseOperator(std::move(basis), std::move(m));
}

}  // namespace bellsu11::fock
