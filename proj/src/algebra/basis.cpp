#include "bellsu11/algebra/basis.h"

#include <stdexcept>
#include <utility>

namespace bellsu11::algebra {

namespace {

void check_mode(int m) {
  if (m < 1 || m > kNumModes) {
    throw std::out_of_range("mode index " + std::to_string(m) + " outside 1..4");
  }
}

// Rank of (i, j), i <= j, among the 10 symmetric pairs in row order.
int symmetric_rank(int i, int j) {
  int rank = 0;
  for (int r = 1; r < i; ++r) rank += kNumModes - r + 1;
  return rank + (j - i);
}

BasisElement symmetric(Kind kind, int i, int j) {
  check_mode(i);
  check_mode(j);
  if (i > j) std::swap(i, j);
  return {kind, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

std::array<BasisElement, kBasisSize> build_all() {
  std::array<BasisElement, kBasisSize> out{};
  int k = 0;
  for (int i = 1; i <= kNumModes; ++i)
    for (int j = i; j <= kNumModes; ++j) out[k++] = BasisElement::A(i, j);
  for (int i = 1; i <= kNumModes; ++i)
    for (int j = 1; j <= kNumModes; ++j) out[k++] = BasisElement::C(i, j);
  for (int i = 1; i <= kNumModes; ++i)
    for (int j = i; j <= kNumModes; ++j) out[k++] = BasisElement::B(i, j);
  return out;
}

}  // namespace

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::kPairCreate:
      return "A";
    case Kind::kMixed:
      return "C";
    case Kind::kPairAnnihilate:
      return "B";
  }
  return "?";
}

BasisElement BasisElement::A(int i, int j) { return symmetric(Kind::kPairCreate, i, j); }
BasisElement BasisElement::B(int i, int j) { return symmetric(Kind::kPairAnnihilate, i, j); }

BasisElement BasisElement::C(int i, int j) {
  check_mode(i);
  check_mode(j);
  return {Kind::kMixed, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

int BasisElement::index() const {
  switch (kind) {
    case Kind::kPairCreate:
      return symmetric_rank(i, j);
    case Kind::kMixed:
      return kNumPairElements + (i - 1) * kNumModes + (j - 1);
    case Kind::kPairAnnihilate:
      return kNumPairElements + kNumMixedElements + symmetric_rank(i, j);
  }
  return -1;
}

BasisElement BasisElement::from_index(int index) {
  if (index < 0 || index >= kBasisSize) throw std::out_of_range("basis index out of range");
  return all_basis_elements()[static_cast<std::size_t>(index)];
}

std::string BasisElement::to_string() const {
  return std::string(kind_name(kind)) + "_" + std::to_string(i) + std::to_string(j);
}

const std::array<BasisElement, kBasisSize>& all_basis_elements() {
  static const auto elements = build_all();
  return elements;
}

}  // namespace bellsu11::algebra
