#include "bellsu11/algebra/quad_op.h"

#include <sstream>

#include "bellsu11/algebra/structure_constants.h"

namespace bellsu11::algebra {

QuadOp::QuadOp(BasisElement e, ComplexRational c) { add(e, c); }

QuadOp QuadOp::identity(ComplexRational c) {
  QuadOp out;
  out.scalar_ = c;
  return out;
}

ComplexRational QuadOp::coefficient(BasisElement e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? ComplexRational{} : it->second;
}

QuadOp& QuadOp::add(BasisElement e, const ComplexRational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

QuadOp& QuadOp::add_scalar(const ComplexRational& c) {
  scalar_ += c;
  return *this;
}

QuadOp& QuadOp::operator+=(const QuadOp& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  scalar_ += o.scalar_;
  return *this;
}

QuadOp& QuadOp::operator-=(const QuadOp& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  scalar_ -= o.scalar_;
  return *this;
}

QuadOp& QuadOp::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    scalar_ = {};
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  scalar_ *= c;
  return *this;
}

std::string QuadOp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const ComplexRational& c, const std::string& symbol) {
    std::string coeff = c.to_string();
    const bool negative = coeff.front() == '-';
    if (negative) coeff.erase(coeff.begin());
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (symbol.empty()) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << ' ';
      os << symbol;
    }
  };
  for (const auto& [e, c] : terms_) emit(c, e.to_string());
  if (!scalar_.is_zero()) emit(scalar_, "");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadOp& op) { return os << op.to_string(); }

QuadOp dagger(const QuadOp& x) {
  QuadOp out = QuadOp::identity(x.scalar().conj());
  for (const auto& [e, c] : x.terms()) {
    switch (e.kind) {
      case Kind::kPairCreate:
        out.add(BasisElement::B(e.i, e.j), c.conj());
        break;
      case Kind::kPairAnnihilate:
        out.add(BasisElement::A(e.i, e.j), c.conj());
        break;
      case Kind::kMixed:
        out.add(BasisElement::C(e.j, e.i), c.conj());
        break;
    }
  }
  return out;
}

bool is_hermitian(const QuadOp& x) { return dagger(x) == x; }

QuadOp commutator(const QuadOp& x, const QuadOp& y) {
  return commutator(x, y, StructureConstants::published());
}

QuadOp commutator(const QuadOp& x, const QuadOp& y, const StructureConstants& table) {
  QuadOp out;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      const QuadOp& b = table.bracket(ex, ey);
      if (b.is_zero()) continue;
      const ComplexRational w = cx * cy;
      for (const auto& [e, c] : b.terms()) out.add(e, w * c);
      out.add_scalar(w * b.scalar());
    }
  }
  return out;
}

}  // namespace bellsu11::algebra
