#pragma once

#include <map>
#include <ostream>
#include <string>

#include "bellsu11/algebra/basis.h"
#include "bellsu11/algebra/rational.h"

namespace bellsu11::algebra {

// Exact quadratic boson operator: sum of c_e * e over basis elements e plus a
// scalar multiple of the identity. Zero coefficients are never stored, so two
// operators are equal iff their term maps and scalars are equal.
class QuadOp {
 public:
  using TermMap = std::map<BasisElement, ComplexRational>;

  QuadOp() = default;
  QuadOp(BasisElement e, ComplexRational c = 1);  // NOLINT: a basis element is an operator

  static QuadOp identity(ComplexRational c = 1);

  const TermMap& terms() const { return terms_; }
  const ComplexRational& scalar() const { return scalar_; }
  ComplexRational coefficient(BasisElement e) const;

  bool is_zero() const { return terms_.empty() && scalar_.is_zero(); }

  QuadOp& add(BasisElement e, const ComplexRational& c);
  QuadOp& add_scalar(const ComplexRational& c);

  QuadOp& operator+=(const QuadOp& o);
  QuadOp& operator-=(const QuadOp& o);
  QuadOp& operator*=(const ComplexRational& c);

  friend QuadOp operator+(QuadOp a, const QuadOp& b) { return a += b; }
  friend QuadOp operator-(QuadOp a, const QuadOp& b) { return a -= b; }
  friend QuadOp operator-(QuadOp a) { return a *= ComplexRational(-1); }
  friend QuadOp operator*(QuadOp a, const ComplexRational& c) { return a *= c; }
  friend QuadOp operator*(const ComplexRational& c, QuadOp a) { return a *= c; }
  friend bool operator==(const QuadOp&, const QuadOp&) = default;

  // Readable sum, e.g. "1/2 A_14 - 1/2 A_23 + ...", or "0".
  std::string to_string() const;

 private:
  TermMap terms_;
  ComplexRational scalar_;
};

std::ostream& operator<<(std::ostream& os, const QuadOp& op);

// Basis shorthands with 1-based mode indices.
inline QuadOp A(int i, int j) { return BasisElement::A(i, j); }
inline QuadOp C(int i, int j) { return BasisElement::C(i, j); }
inline QuadOp B(int i, int j) { return BasisElement::B(i, j); }

// Hermitian conjugate: A_ij <-> B_ij, C_ij -> C_ji, coefficients conjugated.
QuadOp dagger(const QuadOp& x);
bool is_hermitian(const QuadOp& x);

class StructureConstants;

// [x, y] expanded bilinearly over the published sp(8,R) brackets of the basis.
QuadOp commutator(const QuadOp& x, const QuadOp& y);
QuadOp commutator(const QuadOp& x, const QuadOp& y, const StructureConstants& table);

}  // namespace bellsu11::algebra
