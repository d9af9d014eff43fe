#pragma once

#include <compare>
#include <map>
#include <vector>

#include "bellsu11/algebra/quad_op.h"

namespace bellsu11::algebra {

// Ladder-operator words normal ordered with nothing but [c_i, c_j^dag] = d_ij.
// This is a second, table-free route to basis commutators.

struct Ladder {
  int mode = 1;
  bool creation = false;
};
using Word = std::vector<Ladder>;

// c^dag_{creators...} c_{annihilators...}, both index lists sorted.
struct NormalMonomial {
  std::vector<int> creators;
  std::vector<int> annihilators;

  std::size_t degree() const { return creators.size() + annihilators.size(); }
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

class NormalPolynomial {
 public:
  using TermMap = std::map<NormalMonomial, ComplexRational>;

  // Normal orders `word` and accumulates coeff * word.
  void add_word(const Word& word, const ComplexRational& coeff);
  void add(const NormalMonomial& m, const ComplexRational& coeff);

  const TermMap& terms() const { return terms_; }

  NormalPolynomial& operator-=(const NormalPolynomial& o);

 private:
  TermMap terms_;
};

NormalPolynomial to_normal(const QuadOp& x);
NormalPolynomial product(const NormalPolynomial& x, const NormalPolynomial& y);

struct QuadraticReduction {
  QuadOp op;
  // Normal-ordered terms that are neither quadratic nor constant; empty for a
  // commutator of quadratics.
  NormalPolynomial residual;
};

// Rewrites c^dag c^dag -> A, c c -> B, c_i^dag c_j -> C_ij - d_ij/2.
QuadraticReduction to_quadratic(const NormalPolynomial& p);

// [x, y] = xy - yx computed entirely in normal-ordered form.
QuadraticReduction wick_commutator(const QuadOp& x, const QuadOp& y);

}  // namespace bellsu11::algebra
