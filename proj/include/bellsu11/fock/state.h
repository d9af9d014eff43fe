#pragma once

#include <complex>
#include <memory>
#include <stdexcept>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "bellsu11/fock/basis.h"

namespace bellsu11::fock {

using Vector = Eigen::VectorXcd;
using BasisPtr = std::shared_ptr<const FockBasis>;

class BasisMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class StateVector {
 public:
  StateVector(BasisPtr basis, Vector amps);
  explicit StateVector(BasisPtr basis);  // zero vector

  static StateVector basis_state(BasisPtr basis, const Occupation& n);

  const BasisPtr& basis() const { return basis_; }
  const FockBasis& fock() const { return *basis_; }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

  std::complex<double> amplitude(const Occupation& n) const;
  void set_amplitude(const Occupation& n, std::complex<double> value);

  double norm() const;  // pairwise-summed
  StateVector normalized() const;

  // <this|other>
  std::complex<double> inner(const StateVector& other) const;

  // Weight on the shells with total photon number in [lo, hi].
  double shell_weight(int lo, int hi) const;

 private:
  BasisPtr basis_;
  Vector amps_;
};

StateVector vacuum(BasisPtr basis);

// |<a|b>| for normalized inputs; comparison up to global phase.
double overlap_modulus(const StateVector& a, const StateVector& b);
// |<a|b>|^2 / (|a|^2 |b|^2)
double fidelity(const StateVector& a, const StateVector& b);
// min over global phase of ||a - e^{i phi} b||
double distance_up_to_phase(const StateVector& a, const StateVector& b);

// [{n1, n2, n3, n4, re, im}] for |amp| > threshold, in basis order.
nlohmann::json to_json(const StateVector& state, double threshold = 1e-12);

// Bell states on the one-photon-per-channel sector, in the mode map
// a+ -> 1, a- -> 2, b+ -> 3, b- -> 4.
// psi_pm = (|1,0,0,1> +- |0,1,1,0>)/sqrt2, phi_pm = (|1,0,1,0> +- |0,1,0,1>)/sqrt2
StateVector psi_minus(BasisPtr basis);
StateVector psi_plus(BasisPtr basis);
StateVector phi_minus(BasisPtr basis);
StateVector phi_plus(BasisPtr basis);

}  // namespace bellsu11::fock
