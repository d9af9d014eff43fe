#include "bellsu11/fock/state.h"

#include <cmath>
#include <vector>

#include "bellsu11/fock/summation.h"

namespace bellsu11::fock {
namespace {

void require_same_basis(const StateVector& a, const StateVector& b) {
  if (a.fock().cutoff() != b.fock().cutoff())
    throw BasisMismatchError("state vectors live on different Fock bases");
}

StateVector bell(BasisPtr basis, Occupation x, Occupation y, double sign) {
  StateVector s(std::move(basis));
  const double r = 1.0 / std::sqrt(2.0);
  s.set_amplitude(x, r);
  s.set_amplitude(y, sign * r);
  return s;
}

}  // namespace

StateVector::StateVector(BasisPtr basis, Vector amps) : basis_(std::move(basis)), amps_(std::move(amps)) {
  if (!basis_) throw std::invalid_argument("null Fock basis");
  if (static_cast<std::size_t>(amps_.size()) != basis_->dim())
    throw BasisMismatchError("amplitude vector length does not match the Fock basis dimension");
}

StateVector::StateVector(BasisPtr basis)
    : StateVector(basis, Vector::Zero(static_cast<Eigen::Index>(basis ? basis->dim() : 0))) {}

StateVector StateVector::basis_state(BasisPtr basis, const Occupation& n) {
  StateVector s(std::move(basis));
  s.set_amplitude(n, 1.0);
  return s;
}

std::complex<double> StateVector::amplitude(const Occupation& n) const {
  auto k = basis_->index(n);
  return k ? amps_(static_cast<Eigen::Index>(*k)) : std::complex<double>{};
}

void StateVector::set_amplitude(const Occupation& n, std::complex<double> value) {
  auto k = basis_->index(n);
  if (!k) throw std::out_of_range("occupation " + to_string(n) + " is outside the Fock cutoff");
  amps_(static_cast<Eigen::Index>(*k)) = value;
}

double StateVector::norm() const { return std::sqrt(shell_weight(0, basis_->cutoff())); }

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return StateVector(basis_, amps_ / n);
}

std::complex<double> StateVector::inner(const StateVector& other) const {
  require_same_basis(*this, other);
  std::vector<std::complex<double>> terms(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    terms[k] = std::conj(amps_(i)) * other.amps_(i);
  }
  return pairwise_sum(terms);
}

double StateVector::shell_weight(int lo, int hi) const {
  const std::size_t b = basis_->shell_begin(lo);
  const std::size_t e = hi < lo ? b : basis_->shell_end(hi);
  std::vector<double> w;
  w.reserve(e - b);
  for (std::size_t k = b; k < e; ++k) w.push_back(std::norm(amps_(static_cast<Eigen::Index>(k))));
  return pairwise_sum(w);
}

StateVector vacuum(BasisPtr basis) { return StateVector::basis_state(std::move(basis), {0, 0, 0, 0}); }

double overlap_modulus(const StateVector& a, const StateVector& b) { return std::abs(a.inner(b)); }

double fidelity(const StateVector& a, const StateVector& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double o = std::abs(a.inner(b)) / (na * nb);
  return o * o;
}

double distance_up_to_phase(const StateVector& a, const StateVector& b) {
  const std::complex<double> ip = a.inner(b);
  const std::complex<double> phase = std::abs(ip) > 0.0 ? std::conj(ip) / std::abs(ip) : 1.0;
  return (a.amplitudes() - phase * b.amplitudes()).norm();
}

nlohmann::json to_json(const StateVector& state, double threshold) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 0; k < state.dim(); ++k) {
    const std::complex<double> z = state.amplitudes()(static_cast<Eigen::Index>(k));
    if (std::abs(z) <= threshold) continue;
    const Occupation& n = state.fock().occupation(k);
    out.push_back({{"n1", n[0]}, {"n2", n[1]}, {"n3", n[2]}, {"n4", n[3]}, {"re", z.real()}, {"im", z.imag()}});
  }
  return out;
}

StateVector psi_minus(BasisPtr basis) { return bell(std::move(basis), {1, 0, 0, 1}, {0, 1, 1, 0}, -1.0); }
StateVector psi_plus(BasisPtr basis) { return bell(std::move(basis), {1, 0, 0, 1}, {0, 1, 1, 0}, 1.0); }
StateVector phi_minus(BasisPtr basis) { return bell(std::move(basis), {1, 0, 1, 0}, {0, 1, 0, 1}, -1.0); }
StateVector phi_plus(BasisPtr basis) { return bell(std::move(basis), {1, 0, 1, 0}, {0, 1, 0, 1}, 1.0); }

}  // namespace bellsu11::fock
