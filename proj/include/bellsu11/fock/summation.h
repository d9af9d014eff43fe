#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace bellsu11::fock {

// Pairwise (cascade) summation. Fixed recursion split, so results depend only
// on the input order.
double pairwise_sum(std::span<const double> xs);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> xs);

}  // namespace bellsu11::fock
