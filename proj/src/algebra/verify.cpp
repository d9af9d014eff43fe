#include "bellsu11/algebra/verify.h"

#include <cmath>
#include <utility>

#include "bellsu11/algebra/basis.h"
#include "bellsu11/algebra/wick.h"

namespace bellsu11::algebra {

namespace {

const ComplexRational kI = ComplexRational::i();

QuadOp combination(const std::vector<QuadOp>& set, const std::vector<ComplexRational>& coeffs) {
  QuadOp out;
  for (std::size_t k = 0; k < set.size(); ++k) out += coeffs[k] * set[k];
  return out;
}

// Coefficient vector in the fixed A, C, B, scalar ordering.
std::vector<ComplexRational> exact_vector(const QuadOp& x) {
  std::vector<ComplexRational> v(kAdjointDim);
  for (const auto& [e, c] : x.terms()) v[static_cast<std::size_t>(e.index())] = c;
  v[kScalarSlot] = x.scalar();
  return v;
}

}  // namespace

StructureReport verify_structure_constants(const StructureConstants& table) {
  StructureReport report;
  for (const auto& x : all_basis_elements()) {
    for (const auto& y : all_basis_elements()) {
      ++report.pairs_checked;
      ++report.pairs_per_family[relation_family(x, y)];
      const QuadraticReduction wick = wick_commutator(QuadOp(x), QuadOp(y));
      const QuadOp& tabulated = table.bracket(x, y);
      if (!wick.residual.terms().empty() || wick.op != tabulated) {
        report.mismatches.push_back({x, y, tabulated, wick.op});
      }
    }
  }
  return report;
}

ClosureTable ClosureTable::su2() {
  ClosureTable t;
  t.size = 3;
  t.relations[{0, 1}] = {0, 0, kI};
  t.relations[{0, 2}] = {0, -kI, 0};
  t.relations[{1, 2}] = {kI, 0, 0};
  return t;
}

ClosureTable ClosureTable::su11() {
  ClosureTable t;
  t.size = 3;
  t.relations[{0, 1}] = {0, 0, -kI};
  t.relations[{0, 2}] = {0, -kI, 0};
  t.relations[{1, 2}] = {kI, 0, 0};
  return t;
}

ClosureTable ClosureTable::bell_su11() {
  ClosureTable t;
  t.size = 3;
  t.relations[{0, 1}] = {0, 0, kI};   // [J, K] = iL
  t.relations[{0, 2}] = {0, -kI, 0};  // [J, L] = -iK
  t.relations[{1, 2}] = {-kI, 0, 0};  // [K, L] = -iJ
  return t;
}

ClosureTable ClosureTable::abelian(std::size_t n) {
  ClosureTable t;
  t.size = n;
  return t;
}

ClosureReport verify_closure(const std::vector<QuadOp>& set, const ClosureTable& table,
                             const StructureConstants& constants) {
  if (set.empty()) throw std::invalid_argument("verify_closure: empty operator set");
  if (table.size != set.size()) throw std::invalid_argument("verify_closure: table size does not match set");
  ClosureReport report;
  report.closed = true;
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      PairCheck pc;
      pc.a = a;
      pc.b = b;
      pc.computed = commutator(set[a], set[b], constants);
      if (const auto it = table.relations.find({a, b}); it != table.relations.end()) {
        pc.expected = combination(set, it->second);
      }
      pc.residual = pc.computed - pc.expected;
      if (!pc.residual.is_zero()) report.closed = false;
      report.pairs.push_back(std::move(pc));
    }
  }
  return report;
}

std::vector<ClosureCheck> standard_closure_checks(const GeneratorCatalog& catalog) {
  std::vector<ClosureCheck> out;
  auto named = [&](std::string name, std::vector<std::string> members, ClosureTable table) {
    ClosureCheck check{std::move(name), std::move(members), {}, std::move(table)};
    for (const auto& m : check.member_names) check.members.push_back(catalog.at(m));
    out.push_back(std::move(check));
  };
  named("ideal-test su(1,1)", {"J", "K", "L"}, ClosureTable::bell_su11());
  named("wave-number test su(1,1)", {"J_prime", "K_prime", "L_prime"}, ClosureTable::bell_su11());
  named("four-boson su(1,1)", {"K_x", "K_y", "K_z"}, ClosureTable::su11());
  for (int i = 1; i <= kNumModes; ++i) {
    const auto s = "_" + std::to_string(i);
    named("one-boson su(1,1) (" + std::to_string(i) + ")", {"K_x" + s, "K_y" + s, "K_z" + s},
          ClosureTable::su11());
  }
  for (int i = 1; i <= kNumModes; ++i) {
    for (int j = i + 1; j <= kNumModes; ++j) {
      const auto s = "_" + std::to_string(i) + std::to_string(j);
      named("two-boson su(1,1) (" + s.substr(1) + ")", {"K_x" + s, "K_y" + s, "K_z" + s}, ClosureTable::su11());
    }
  }
  for (int i = 1; i <= kNumModes; ++i) {
    for (int j = i + 1; j <= kNumModes; ++j) {
      const auto s = "_" + std::to_string(i) + std::to_string(j);
      named("two-boson su(2) (" + s.substr(1) + ")", {"J_x" + s, "J_y" + s, "J_z" + s}, ClosureTable::su2());
    }
  }
  // Equal rotations commute with the singlet source.
  ClosureCheck singlet{"singlet invariance",
                       {"K", "J_a + J_b"},
                       {catalog.at("K"), catalog.at("J_a") + catalog.at("J_b")},
                       ClosureTable::abelian(2)};
  out.push_back(std::move(singlet));
  return out;
}

ClosureReport run_closure_check(const ClosureCheck& check, const StructureConstants& constants) {
  ClosureReport report = verify_closure(check.members, check.table, constants);
  report.name = check.name;
  report.members = check.member_names;
  return report;
}

SpanResult span_decompose(const std::vector<QuadOp>& set, const QuadOp& target) {
  // Gaussian elimination on the augmented system  [v_0 ... v_{n-1} | t].
  const std::size_t n = set.size();
  std::vector<std::vector<ComplexRational>> rows(kAdjointDim, std::vector<ComplexRational>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = exact_vector(set[k]);
    for (std::size_t r = 0; r < kAdjointDim; ++r) rows[r][k] = v[r];
  }
  const auto t = exact_vector(target);
  for (std::size_t r = 0; r < kAdjointDim; ++r) rows[r][n] = t[r];

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    const ComplexRational inv = ComplexRational(1) / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const ComplexRational f = rows[r][col];
      for (std::size_t c = col; c <= n; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  SpanResult result;
  result.coefficients.assign(n, ComplexRational{});
  for (std::size_t r = 0; r < rank; ++r) result.coefficients[pivot_col[r]] = rows[r][n];
  result.residual = target - combination(set, result.coefficients);
  result.in_span = result.residual.is_zero();
  return result;
}

std::vector<IdentityCheck> standard_identities(const GeneratorCatalog& catalog) {
  const auto& c = catalog;
  return {
      {"K_OM_prime = K_OM_1 + K_OM_2", c.at("K_OM_prime"), c.at("K_OM_1") + c.at("K_OM_2")},
      {"K_x = K_x_14 - K_x_23", c.at("K_x"), c.at("K_x_14") - c.at("K_x_23")},
      {"K_y = K_y_14 - K_y_23", c.at("K_y"), c.at("K_y_14") - c.at("K_y_23")},
      {"K_z = K_z_14 + K_z_23", c.at("K_z"), c.at("K_z_14") + c.at("K_z_23")},
      {"K = K_x", c.at("K"), c.at("K_x")},
      {"J_BS = J_x_13 + J_x_24", c.at("J_BS"), c.at("J_x_13") + c.at("J_x_24")},
      {"J_PS = J_z_13 + J_z_24", c.at("J_PS"), c.at("J_z_13") + c.at("J_z_24")},
      {"sigma_y_a = 2 J_y_12", c.at("sigma_y_a"), ComplexRational(2) * c.at("J_y_12")},
  };
}

InvarianceReport check_ad_invariance(const std::string& name, const QuadOp& g, const std::vector<QuadOp>& set) {
  InvarianceReport report;
  report.name = name;
  report.invariant = true;
  for (const auto& x : set) {
    report.images.push_back(span_decompose(set, commutator(g, x)));
    if (!report.images.back().in_span) report.invariant = false;
  }
  return report;
}

std::vector<ConjugationClaim> singlet_conjugation_claims() {
  return {{"J_z_plus invariant", "J_z_plus", ""},
          {"J_y_plus invariant", "J_y_plus", ""},
          {"N_0_minus invariant", "N_0_minus", ""},
          {"J_z_minus -> cosh J_z_minus + sinh L_hat_z", "J_z_minus", "L_hat_z"},
          {"J_y_minus -> cosh J_y_minus + sinh L_hat_y", "J_y_minus", "L_hat_y"},
          {"N_0_plus -> cosh N_0_plus + sinh L_hat_0", "N_0_plus", "L_hat_0"}};
}

ConjugationClaimReport check_conjugation_claim(const ConjugationClaim& claim, double gamma,
                                               const GeneratorCatalog& catalog) {
  const QuadOp& k = catalog.at("K");
  const QuadOp& x = catalog.at(claim.x_name);
  std::vector<QuadOp> set{x};
  if (!claim.partner_name.empty()) set.push_back(catalog.at(claim.partner_name));

  ConjugationClaimReport r;
  r.name = claim.name;
  r.closure = check_ad_invariance(claim.name, k, set);
  r.gamma = gamma;
  r.actual = conjugate(k, -gamma, x);
  AdjointVector expected = to_vector(x);
  if (set.size() == 2) expected = std::cosh(gamma) * expected + std::sinh(gamma) * to_vector(set[1]);
  r.defect = r.actual.max_abs_diff(FloatQuadOp(expected));
  return r;
}

}  // namespace bellsu11::algebra
