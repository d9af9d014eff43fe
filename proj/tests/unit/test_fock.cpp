#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "bellsu11/algebra/catalog.h"
#include "bellsu11/fock/evolve.h"
#include "bellsu11/fock/observables.h"
#include "bellsu11/fock/summation.h"
#include "golden.h"

using namespace bellsu11;
using namespace bellsu11::fock;
using algebra::GeneratorCatalog;

namespace {

const GeneratorCatalog& cat() { return GeneratorCatalog::standard(); }
const std::complex<double> kI(0.0, 1.0);

}  // namespace

TEST_CASE("basis dimension, ordering and round trip") {
  for (int n = 0; n <= 10; ++n) {
    FockBasis b(n);
    CHECK(b.dim() == fock_dimension(n));
    for (std::size_t k = 0; k < b.dim(); ++k) CHECK(b.index(b.occupation(k)) == k);
    for (std::size_t k = 1; k < b.dim(); ++k) {
      const auto &p = b.occupation(k - 1), &q = b.occupation(k);
      const int tp = total_photons(p), tq = total_photons(q);
      CHECK((tp < tq || (tp == tq && p < q)));
    }
  }
  CHECK(fock_dimension(8) == 495);
  FockBasis b(4);
  CHECK_FALSE(b.index({5, 0, 0, 0}).has_value());
  CHECK_FALSE(b.index({-1, 0, 0, 0}).has_value());
  CHECK(b.shell_begin(2) == 5);
  CHECK(b.shell_end(2) == 15);
  CHECK_THROWS(FockBasis(-1));
}

TEST_CASE("vacuum") {
  auto basis = FockBasis::make(4);
  const StateVector v = vacuum(basis);
  CHECK(v.amplitudes()(0) == 1.0);
  CHECK(v.norm() == 1.0);
  const auto n1 = expect_product(v, std::vector<algebra::QuadOp>{algebra::C(1, 1) - algebra::QuadOp::identity(algebra::frac(1, 2))});
  CHECK(std::abs(n1.value) == 0.0);
}

TEST_CASE("matrix elements") {
  auto basis = FockBasis::make(4);
  const StateVector v = vacuum(basis);
  const StateVector a13 = matrix(algebra::A(1, 3), basis).apply(v);
  CHECK(a13.amplitude({1, 0, 1, 0}) == 1.0);
  CHECK(a13.norm() == doctest::Approx(1.0));

  const SparseOperator s0 = matrix(cat().at("sigma_0_a"), basis);
  for (std::size_t k = 0; k < basis->dim(); ++k) {
    const auto& n = basis->occupation(k);
    const auto e = StateVector::basis_state(basis, n);
    const Vector out = s0.apply(e.amplitudes());
    CHECK(std::abs(out(static_cast<Eigen::Index>(k)) - double(n[0] + n[1])) < 1e-15);
    CHECK(std::abs(out.norm() - double(n[0] + n[1])) < 1e-14);
  }

  const StateVector k0 = matrix(cat().at("K"), basis).apply(v);
  CHECK(std::abs(k0.amplitude({1, 0, 0, 1}) - 0.5) < 1e-15);
  CHECK(std::abs(k0.amplitude({0, 1, 1, 0}) + 0.5) < 1e-15);
  CHECK(std::abs(k0.norm() - std::sqrt(0.5)) < 1e-15);

  // b_1 b_1 |2,0,0,0> = sqrt2 |0>
  const auto two = StateVector::basis_state(basis, {2, 0, 0, 0});
  CHECK(std::abs(matrix(algebra::B(1, 1), basis).apply(two).amplitude({0, 0, 0, 0}) - std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("hermitian generators give hermitian matrices") {
  auto basis = FockBasis::make(6);
  for (const auto& e : cat().entries()) {
    if (!algebra::is_hermitian(e.op)) continue;
    INFO(e.name);
    CHECK(matrix(e.op, basis).hermiticity_defect() <= 1e-14);
  }
}

TEST_CASE("commutators transfer to matrices below the truncation boundary") {
  const int n = 6;
  auto basis = FockBasis::make(n);
  const std::size_t inner = basis->shell_end(n - 2);
  std::vector<std::pair<const algebra::QuadOp*, SparseOperator>> ops;
  for (const auto& e : cat().entries()) ops.emplace_back(&e.op, matrix(e.op, basis));
  double worst = 0.0;
  for (std::size_t x = 0; x < ops.size(); ++x) {
    for (std::size_t y = x + 1; y < ops.size(); ++y) {
      const SparseOperator lhs = matrix(algebra::commutator(*ops[x].first, *ops[y].first), basis);
      const SparseMatrix diff = (ops[x].second * ops[y].second - ops[y].second * ops[x].second).matrix() - lhs.matrix();
      for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(inner); ++r)
        for (SparseMatrix::InnerIterator it(diff, r); it; ++it)
          if (static_cast<std::size_t>(it.col()) < inner) worst = std::max(worst, std::abs(it.value()));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("evolve basics") {
  auto basis = FockBasis::make(8);
  const StateVector v = vacuum(basis);
  const StateVector same = evolve(v, cat().at("K"), 0.0);
  CHECK((same.amplitudes() - v.amplitudes()).norm() == 0.0);

  const double g = 1e-3;
  const StateVector om = evolve(v, cat().at("K_OM"), g, 1e-15);
  CHECK(std::abs(om.amplitude({1, 0, 1, 0}) - kI * g / 2.0) < 1e-8);
  CHECK(std::abs(om.amplitude({0, 0, 0, 0}) - 1.0) < 1e-6);

  CHECK_THROWS_AS(evolve(v, cat().at("L_hat_z"), 0.1), NonHermitianGeneratorError);
  CHECK_THROWS_AS(evolve(v, cat().at("K"), 0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(v, cat().at("K"), 0.1, -1.0), std::invalid_argument);
  EvolveOptions tight;
  tight.max_steps = 2;
  CHECK_THROWS_AS(evolve(v, matrix(cat().at("K"), basis), 50.0, tight), NonConvergenceError);
}

TEST_CASE("two-mode squeezed amplitudes fall geometrically") {
  const auto golden = load_golden("squeeze_ratio.json");
  auto basis = FockBasis::make(24);
  const StateVector s = evolve(vacuum(basis), cat().at("K_x_13"), 0.6, 1e-14);
  for (int n = 1; n <= 5; ++n) {
    const double r = std::abs(s.amplitude({n, 0, n, 0})) / std::abs(s.amplitude({n - 1, 0, n - 1, 0}));
    CHECK(r == doctest::Approx(golden["ratios"][n - 1].get<double>()).epsilon(1e-10));
    CHECK(r == doctest::Approx(std::abs(s.amplitude({1, 0, 1, 0}))/std::abs(s.amplitude({0, 0, 0, 0}))).epsilon(1e-9));
  }
}

TEST_CASE("unitarity and reversibility") {
  auto basis = FockBasis::make(8);
  const double tol = 1e-12;
  StateVector psi = evolve(vacuum(basis), cat().at("K"), 0.3, tol);
  psi = evolve(psi, cat().at("J_BS"), 0.9, tol);
  for (const char* name : {"K", "J_a", "K_prime", "J_prime", "K_OM", "K_x_2", "J_PS"}) {
    INFO(name);
    const StateVector out = evolve(psi, cat().at(name), 0.4, tol);
    CHECK(std::abs(out.norm() - psi.norm()) <= tol + leakage(out));
    const StateVector back = evolve(out, cat().at(name), -0.4, tol);
    if (leakage(out) < tol) CHECK((back.amplitudes() - psi.amplitudes()).norm() <= 10 * tol);
  }
}

TEST_CASE("expectation values of products") {
  auto basis = FockBasis::make(6);
  const auto& sza = cat().at("sigma_z_a");
  const auto& szb = cat().at("sigma_z_b");
  CHECK(std::abs(expect_product(vacuum(basis), std::vector<algebra::QuadOp>{sza, szb}).value) == 0.0);
  CHECK(std::abs(expect_product(psi_minus(basis), std::vector<algebra::QuadOp>{sza, szb}).value + 1.0) < 1e-15);
  const auto s2 = StateVector::basis_state(basis, {2, 0, 0, 2});
  CHECK(std::abs(expect_product(s2, std::vector<algebra::QuadOp>{cat().at("sigma_0_a"), cat().at("sigma_0_b")}).value -
                 4.0) < 1e-14);
  CHECK_THROWS_AS(expect_product(s2, std::vector<algebra::QuadOp>{}), std::invalid_argument);
  const auto edge = StateVector::basis_state(basis, {3, 0, 0, 3});
  const auto e = expect_product(edge, std::vector<algebra::QuadOp>{sza, szb});
  CHECK(e.boundary_warning);
  CHECK_FALSE(expect_product(s2, std::vector<algebra::QuadOp>{sza, szb}).boundary_warning);
}

TEST_CASE("coincidence projection") {
  auto basis = FockBasis::make(8);
  const auto p0 = project_pi(vacuum(basis));
  CHECK(p0.weight == 0.0);
  CHECK(p0.state.norm() == 0.0);
  CHECK(project_pi(StateVector::basis_state(basis, {2, 0, 0, 0})).weight == 0.0);

  const StateVector sq = evolve(vacuum(basis), cat().at("K"), 0.05, 1e-14);
  const auto p = project_pi(sq);
  CHECK(p.weight > 0.0);
  CHECK(fidelity(p.state, psi_minus(basis)) == doctest::Approx(1.0).epsilon(1e-14));

  const SparseOperator pi = pi_matrix(basis);
  CHECK(pi.hermiticity_defect() == 0.0);
  const SparseMatrix sq2 = (pi * pi).matrix();
  CHECK((Eigen::MatrixXcd(sq2) - Eigen::MatrixXcd(pi.matrix())).norm() == 0.0);
  CHECK(pi.matrix().nonZeros() == 4);
}

TEST_CASE("leakage") {
  auto basis = FockBasis::make(8);
  CHECK(leakage(vacuum(basis)) == 0.0);
  const auto golden = load_golden("leakage.json");
  const double l8 = leakage(evolve(vacuum(basis), cat().at("K"), 0.2, 1e-14));
  CHECK(l8 == doctest::Approx(golden["cutoff_8"].get<double>()).epsilon(1e-6));
  // about 4.8e-8: the pair amplitude falls as tanh(gamma/2)^n
  CHECK(l8 < 1e-7);
  double prev = 1.0;
  for (int n = 4; n <= 12; n += 2) {
    const double l = leakage(evolve(vacuum(FockBasis::make(n)), cat().at("K"), 0.2, 1e-14));
    CHECK(l < prev);
    prev = l;
  }
  const double l10 = leakage(evolve(vacuum(FockBasis::make(10)), cat().at("K"), 0.2, 1e-14));
  CHECK(l10 == doctest::Approx(golden["cutoff_10"].get<double>()).epsilon(1e-6));
}

TEST_CASE("state JSON and comparison helpers") {
  auto basis = FockBasis::make(4);
  const StateVector s = psi_minus(basis);
  const auto j = to_json(s);
  REQUIRE(j.size() == 2);
  // basis order puts |0,1,1,0> first; it carries the minus sign
  CHECK(j[0]["n2"] == 1);
  CHECK(j[0]["n3"] == 1);
  CHECK(j[0]["re"].get<double>() < 0.0);
  CHECK(j[1]["n1"] == 1);
  CHECK(j[1]["re"].get<double>() > 0.0);
  StateVector t(basis, std::complex<double>(0.0, 1.0) * s.amplitudes());
  CHECK(distance_up_to_phase(s, t) < 1e-15);
  CHECK(overlap_modulus(s, t) == doctest::Approx(1.0));
  CHECK(fidelity(s, psi_plus(basis)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(s.inner(vacuum(FockBasis::make(5))), BasisMismatchError);
  CHECK_THROWS(StateVector(basis).normalized());
}

TEST_CASE("pairwise summation") {
  std::vector<double> xs(1000, 0.1);
  CHECK(pairwise_sum(xs) == doctest::Approx(100.0).epsilon(1e-14));
  CHECK(pairwise_sum(std::span<const double>{}) == 0.0);
  std::vector<std::complex<double>> zs(37, {1.0, -2.0});
  CHECK(pairwise_sum(zs) == std::complex<double>(37.0, -74.0));
}
