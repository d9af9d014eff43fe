#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace bellsu11::algebra {

// Four boson modes, numbered 1..4. Ideal-test map: a+ -> 1, a- -> 2, b+ -> 3, b- -> 4.
inline constexpr int kNumModes = 4;
inline constexpr int kNumPairElements = 10;   // A_ij and B_ij with i <= j
inline constexpr int kNumMixedElements = 16;  // C_ij, all ordered pairs
inline constexpr int kBasisSize = 2 * kNumPairElements + kNumMixedElements;
// Coefficient space of a QuadOp: the 36 basis elements plus the identity.
inline constexpr int kAdjointDim = kBasisSize + 1;
inline constexpr int kScalarSlot = kBasisSize;

enum class Kind : std::uint8_t {
  kPairCreate,     // A_ij = c_i^dag c_j^dag
  kMixed,          // C_ij = (c_i^dag c_j + c_j c_i^dag) / 2
  kPairAnnihilate  // B_ij = c_i c_j
};

const char* kind_name(Kind kind);  // "A", "C", "B"

// One element of the sp(8,C) basis. A and B are symmetric in (i, j) and are
// always stored with i <= j; the factories normalise the order.
struct BasisElement {
  Kind kind = Kind::kMixed;
  std::uint8_t i = 1;
  std::uint8_t j = 1;

  static BasisElement A(int i, int j);
  static BasisElement C(int i, int j);
  static BasisElement B(int i, int j);

  // Position in the fixed ordering A(10), C(16), B(10).
  int index() const;
  static BasisElement from_index(int index);

  std::string to_string() const;  // e.g. "A_13"

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

const std::array<BasisElement, kBasisSize>& all_basis_elements();

}  // namespace bellsu11::algebra
