#include "bellsu11/fock/observables.h"

#include <algorithm>
#include <stdexcept>

namespace bellsu11::fock {

Projection project_pi(const StateVector& psi) {
  StateVector kept(psi.basis());
  for (const Occupation& n : kPiKets) {
    if (psi.fock().index(n)) kept.set_amplitude(n, psi.amplitude(n));
  }
  const double w = kept.shell_weight(2, 2);
  return {std::move(kept), w};
}

double leakage(const StateVector& psi) {
  const int n = psi.fock().cutoff();
  return psi.shell_weight(std::max(0, n - 1), n);
}

Expectation expect_product(const StateVector& psi, const std::vector<SparseOperator>& ops, double warn_threshold) {
  if (ops.empty()) throw std::invalid_argument("expect_product needs at least one operator");
  Expectation out;
  StateVector v = psi;
  out.boundary_weight = leakage(v);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    v = it->apply(v);
    out.boundary_weight = std::max(out.boundary_weight, leakage(v));
  }
  out.value = psi.inner(v);
  out.boundary_warning = out.boundary_weight > warn_threshold;
  return out;
}

Expectation expect_product(const StateVector& psi, const std::vector<algebra::QuadOp>& ops, double warn_threshold) {
  std::vector<SparseOperator> mats;
  mats.reserve(ops.size());
  for (const auto& op : ops) mats.push_back(matrix(op, psi.basis()));
  return expect_product(psi, mats, warn_threshold);
}

}  // namespace bellsu11::fock
