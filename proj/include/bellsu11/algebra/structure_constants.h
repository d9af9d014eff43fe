#pragma once

#include <array>

#include "bellsu11/algebra/basis.h"
#include "bellsu11/algebra/quad_op.h"

namespace bellsu11::algebra {

// Relation family a bracket [x, y] belongs to, after ordering by antisymmetry.
enum class RelationFamily { kPairPair, kMixedMixed, kMixedCreate, kMixedAnnihilate, kCreateAnnihilate };

RelationFamily relation_family(BasisElement x, BasisElement y);
const char* family_name(RelationFamily f);

// Table of all 36 x 36 basis brackets. published() evaluates the closed-form
// sp(8,R) relations
//   [A_ij, A_kl] = 0 = [B_ij, B_kl]
//   [C_ij, C_kl] = d_jk C_il - d_il C_kj
//   [C_ij, A_kl] = d_jk A_il + d_jl A_ik
//   [C_ij, B_kl] = -d_il B_jk - d_ik B_jl
//   [A_ij, B_kl] = -d_ki C_jl - d_kj C_il - d_il C_jk - d_jl C_ik
// and fills the remaining orderings by antisymmetry. Copies may be edited,
// which is how verification fixtures inject faults.
class StructureConstants {
 public:
  static const StructureConstants& published();

  const QuadOp& bracket(BasisElement x, BasisElement y) const {
    return table_[static_cast<std::size_t>(x.index() * kBasisSize + y.index())];
  }
  void set_bracket(BasisElement x, BasisElement y, QuadOp value) {
    table_[static_cast<std::size_t>(x.index() * kBasisSize + y.index())] = std::move(value);
  }

 private:
  StructureConstants() = default;
  std::array<QuadOp, kBasisSize * kBasisSize> table_;
};

// Bracket of two basis elements straight from the relation formulas above.
QuadOp published_bracket(BasisElement x, BasisElement y);

}  // namespace bellsu11::algebra
