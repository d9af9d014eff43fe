#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bellsu11/algebra/adjoint.h"
#include "bellsu11/algebra/catalog.h"
#include "bellsu11/algebra/quad_op.h"
#include "bellsu11/algebra/structure_constants.h"

namespace bellsu11::algebra {

struct BracketMismatch {
  BasisElement x;
  BasisElement y;
  QuadOp table_value;
  QuadOp wick_value;
};

struct StructureReport {
  int pairs_checked = 0;
  std::map<RelationFamily, int> pairs_per_family;
  std::vector<BracketMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Compares every ordered basis bracket in `table` with the normal-ordering route.
StructureReport verify_structure_constants(const StructureConstants& table = StructureConstants::published());

// Expected brackets [X_a, X_b] = sum_c f_abc X_c for a < b; pairs without an
// entry are expected to commute.
struct ClosureTable {
  std::size_t size = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<ComplexRational>> relations;

  // {X, Y, Z} with [X,Y] = iZ cyclic.
  static ClosureTable su2();
  // {X, Y, Z} with [X,Y] = -iZ, [Y,Z] = iX, [Z,X] = iY.
  static ClosureTable su11();
  // {J, K, L} with [J,K] = iL, [L,J] = iK, [K,L] = -iJ.
  static ClosureTable bell_su11();
  static ClosureTable abelian(std::size_t n);
};

struct PairCheck {
  std::size_t a = 0;
  std::size_t b = 0;
  QuadOp computed;
  QuadOp expected;
  QuadOp residual;  // computed - expected
};

struct ClosureReport {
  std::string name;
  std::vector<std::string> members;
  std::vector<PairCheck> pairs;
  bool closed = false;
};

ClosureReport verify_closure(const std::vector<QuadOp>& set, const ClosureTable& table,
                             const StructureConstants& constants = StructureConstants::published());

// A named closure check over catalog members (or explicit operators).
struct ClosureCheck {
  std::string name;
  std::vector<std::string> member_names;
  std::vector<QuadOp> members;
  ClosureTable table;
};

// su(2)/su(1,1) families of the catalog plus the two Bell-test algebras.
std::vector<ClosureCheck> standard_closure_checks(const GeneratorCatalog& catalog = GeneratorCatalog::standard());
ClosureReport run_closure_check(const ClosureCheck& check,
                                const StructureConstants& constants = StructureConstants::published());

// Exact decomposition of `target` over span(set). `residual` is target minus
// the best exact combination; in_span iff it is zero.
struct SpanResult {
  bool in_span = false;
  std::vector<ComplexRational> coefficients;
  QuadOp residual;
};

SpanResult span_decompose(const std::vector<QuadOp>& set, const QuadOp& target);

// Linear identities between catalog entries, e.g. K_OM' = K_OM^1 + K_OM^2.
struct IdentityCheck {
  std::string name;
  QuadOp lhs;
  QuadOp rhs;
  bool holds() const { return lhs == rhs; }
};

std::vector<IdentityCheck> standard_identities(const GeneratorCatalog& catalog = GeneratorCatalog::standard());

// Whether ad_g maps span(set) into itself; one span check per member.
struct InvarianceReport {
  std::string name;
  bool invariant = false;
  std::vector<SpanResult> images;  // decomposition of [g, set[k]]
};

InvarianceReport check_ad_invariance(const std::string& name, const QuadOp& g, const std::vector<QuadOp>& set);

// Claimed action of the singlet squeeze on the derived basis used for the
// correlation: Upsilon^{-1} X Upsilon = cosh(g) X + sinh(g) P, or X itself
// when there is no partner P.
struct ConjugationClaim {
  std::string name;
  std::string x_name;
  std::string partner_name;  // empty for an invariance claim
};

std::vector<ConjugationClaim> singlet_conjugation_claims();

struct ConjugationClaimReport {
  std::string name;
  InvarianceReport closure;  // ad_K on span{X, P} (or span{X}), exact
  double gamma = 0.0;
  double defect = 0.0;  // max coefficient error of the claimed form
  FloatQuadOp actual;   // conjugate(K, -gamma, X)
  bool holds() const { return closure.invariant && defect < 1e-10; }
};

ConjugationClaimReport check_conjugation_claim(const ConjugationClaim& claim, double gamma = 0.3,
                                               const GeneratorCatalog& catalog = GeneratorCatalog::standard());

}  // namespace bellsu11::algebra
