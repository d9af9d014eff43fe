#include "bellsu11/fock/summation.h"

namespace bellsu11::fock {
namespace {

constexpr std::size_t kBlock = 8;

template <typename T>
T sum_impl(std::span<const T> xs) {
  if (xs.size() <= kBlock) {
    T acc{};
    for (const T& x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return sum_impl(xs.first(half)) + sum_impl(xs.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> xs) { return sum_impl(xs); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> xs) { return sum_impl(xs); }

}  // namespace bellsu11::fock
