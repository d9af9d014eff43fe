#pragma once

#include <array>
#include <complex>
#include <vector>

#include "bellsu11/algebra/quad_op.h"
#include "bellsu11/fock/sparse_operator.h"
#include "bellsu11/fock/state.h"

namespace bellsu11::fock {

// One photon in each channel: the kets kept by the coincidence projection.
inline constexpr std::array<Occupation, 4> kPiKets = {{{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}};

struct Projection {
  StateVector state;  // unnormalized
  double weight = 0.0;
};

Projection project_pi(const StateVector& psi);

// Squared amplitude on the top two shells, N-1 and N.
double leakage(const StateVector& psi);

inline constexpr double kBoundaryWarnThreshold = 1e-6;

struct Expectation {
  std::complex<double> value;
  // largest weight seen within two photons of the cutoff (shells N-1, N)
  // over the intermediate vectors M_k ... M_1 psi
  double boundary_weight = 0.0;
  bool boundary_warning = false;
};

// <psi| M_1 M_2 ... M_k |psi>, applied right to left. Throws on an empty list.
Expectation expect_product(const StateVector& psi, const std::vector<SparseOperator>& ops,
                           double warn_threshold = kBoundaryWarnThreshold);
Expectation expect_product(const StateVector& psi, const std::vector<algebra::QuadOp>& ops,
                           double warn_threshold = kBoundaryWarnThreshold);

}  // namespace bellsu11::fock
