#include "bellsu11/algebra/structure_constants.h"

#include <memory>

namespace bellsu11::algebra {

namespace {

ComplexRational delta(int a, int b) { return a == b ? 1 : 0; }

// Term helper: adds d * X where d is a Kronecker delta (0 or 1) and X a basis element.
void add_if(QuadOp& out, const ComplexRational& d, BasisElement e, int sign = 1) {
  if (!d.is_zero()) out.add(e, d * ComplexRational(sign));
}

// Brackets for the orderings that appear on the left-hand side of the relations.
QuadOp mixed_mixed(int i, int j, int k, int l) {
  QuadOp out;
  add_if(out, delta(j, k), BasisElement::C(i, l));
  add_if(out, delta(i, l), BasisElement::C(k, j), -1);
  return out;
}

QuadOp mixed_create(int i, int j, int k, int l) {
  QuadOp out;
  add_if(out, delta(j, k), BasisElement::A(i, l));
  add_if(out, delta(j, l), BasisElement::A(i, k));
  return out;
}

QuadOp mixed_annihilate(int i, int j, int k, int l) {
  QuadOp out;
  add_if(out, delta(i, l), BasisElement::B(j, k), -1);
  add_if(out, delta(i, k), BasisElement::B(j, l), -1);
  return out;
}

QuadOp create_annihilate(int i, int j, int k, int l) {
  QuadOp out;
  add_if(out, delta(k, i), BasisElement::C(j, l), -1);
  add_if(out, delta(k, j), BasisElement::C(i, l), -1);
  add_if(out, delta(i, l), BasisElement::C(j, k), -1);
  add_if(out, delta(j, l), BasisElement::C(i, k), -1);
  return out;
}

}  // namespace

RelationFamily relation_family(BasisElement x, BasisElement y) {
  const Kind a = x.kind;
  const Kind b = y.kind;
  if ((a == Kind::kPairCreate || a == Kind::kPairAnnihilate) && a == b) return RelationFamily::kPairPair;
  if (a == Kind::kMixed && b == Kind::kMixed) return RelationFamily::kMixedMixed;
  if (a == Kind::kMixed || b == Kind::kMixed) {
    const Kind other = a == Kind::kMixed ? b : a;
    return other == Kind::kPairCreate ? RelationFamily::kMixedCreate : RelationFamily::kMixedAnnihilate;
  }
  return RelationFamily::kCreateAnnihilate;
}

const char* family_name(RelationFamily f) {
  switch (f) {
    case RelationFamily::kPairPair:
      return "[A,A]=[B,B]=0";
    case RelationFamily::kMixedMixed:
      return "[C,C]";
    case RelationFamily::kMixedCreate:
      return "[C,A]";
    case RelationFamily::kMixedAnnihilate:
      return "[C,B]";
    case RelationFamily::kCreateAnnihilate:
      return "[A,B]";
  }
  return "?";
}

QuadOp published_bracket(BasisElement x, BasisElement y) {
  const int i = x.i, j = x.j, k = y.i, l = y.j;
  switch (x.kind) {
    case Kind::kMixed:
      switch (y.kind) {
        case Kind::kMixed:
          return mixed_mixed(i, j, k, l);
        case Kind::kPairCreate:
          return mixed_create(i, j, k, l);
        case Kind::kPairAnnihilate:
          return mixed_annihilate(i, j, k, l);
      }
      break;
    case Kind::kPairCreate:
      switch (y.kind) {
        case Kind::kPairCreate:
          return {};
        case Kind::kMixed:
          return -mixed_create(k, l, i, j);
        case Kind::kPairAnnihilate:
          return create_annihilate(i, j, k, l);
      }
      break;
    case Kind::kPairAnnihilate:
      switch (y.kind) {
        case Kind::kPairAnnihilate:
          return {};
        case Kind::kMixed:
          return -mixed_annihilate(k, l, i, j);
        case Kind::kPairCreate:
          return -create_annihilate(k, l, i, j);
      }
      break;
  }
  return {};
}

const StructureConstants& StructureConstants::published() {
  static const StructureConstants table = [] {
    StructureConstants t;
    for (const auto& x : all_basis_elements())
      for (const auto& y : all_basis_elements()) t.set_bracket(x, y, published_bracket(x, y));
    return t;
  }();
  return table;
}

}  // namespace bellsu11::algebra
