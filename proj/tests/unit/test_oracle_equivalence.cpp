// The fock module against the dense reference in tests/oracle, which builds
// everything from explicit ladder matrices.

#include <doctest.h>

#include <random>

#include "bellsu11/algebra/catalog.h"
#include "bellsu11/fock/evolve.h"
#include "dense_oracle.h"

using namespace bellsu11;
using algebra::FloatQuadOp;
using algebra::GeneratorCatalog;
using algebra::Kind;
using algebra::QuadOp;

namespace {

const GeneratorCatalog& cat() { return GeneratorCatalog::standard(); }

// fock-module matrix in the oracle's ordering
oracle::Mat reorder(const fock::SparseOperator& m, const oracle::DenseBasis& ob) {
  const auto& fb = *m.basis();
  oracle::Mat out = oracle::Mat::Zero(ob.dim(), ob.dim());
  const oracle::Mat dense(m.matrix());
  for (std::size_t r = 0; r < fb.dim(); ++r)
    for (std::size_t c = 0; c < fb.dim(); ++c)
      out(ob.index.at(fb.occupation(r)), ob.index.at(fb.occupation(c))) =
          dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

oracle::Vec reorder(const fock::StateVector& psi, const oracle::DenseBasis& ob) {
  oracle::Vec out(ob.dim());
  for (std::size_t k = 0; k < psi.dim(); ++k)
    out(ob.index.at(psi.fock().occupation(k))) = psi.amplitudes()(static_cast<Eigen::Index>(k));
  return out;
}

bool hermitian(const QuadOp& op) { return FloatQuadOp(op).hermiticity_defect() == 0.0; }

bool passive(const QuadOp& op) {
  for (const auto& [e, c] : op.terms())
    if (e.kind != Kind::kMixed) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix elements of every catalog operator") {
  for (int n : {2, 5}) {
    const oracle::Dense d(n);
    const auto basis = fock::FockBasis::make(n);
    for (const auto& e : cat().entries()) {
      INFO(e.name << " at cutoff " << n);
      CHECK((reorder(fock::matrix(e.op, basis), d.basis()) - d.matrix(e.op)).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("evolution of every hermitian generator") {
  const int n = 6;
  const oracle::Dense d(n);
  const auto basis = fock::FockBasis::make(n);
  for (const auto& e : cat().entries()) {
    if (!hermitian(e.op)) continue;
    INFO(e.name);
    const auto psi = fock::evolve(fock::vacuum(basis), e.op, 0.37);
    const oracle::Vec ref = oracle::expi(d.matrix(e.op), 0.37) * d.vacuum();
    CHECK((reorder(psi, d.basis()) - ref).norm() < 1e-10);
  }
}

TEST_CASE("commuting pair operators in finite dimension") {
  const oracle::Dense d(4);
  const oracle::Mat a = d.matrix(QuadOp(algebra::BasisElement::A(1, 2)));
  const oracle::Mat b = d.matrix(QuadOp(algebra::BasisElement::B(3, 4)));
  // [A12, B34] = 0 away from the truncation edge: compare on states with at most two photons
  const oracle::Mat comm = a * b - b * a;
  for (int k = 0; k < d.dim(); ++k)
    if (d.basis().photons(k) <= 2) CHECK(comm.col(k).norm() < 1e-14);
}

TEST_CASE("adjoint conjugation against dense U X U^dag") {
  std::vector<const algebra::CatalogEntry*> gens, obs;
  for (const auto& e : cat().entries()) {
    if (!hermitian(e.op)) continue;
    obs.push_back(&e);
    if (passive(e.op)) gens.push_back(&e);
  }
  REQUIRE(gens.size() >= 10);

  const oracle::Dense d(6);
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> pick_g(0, gens.size() - 1), pick_x(0, obs.size() - 1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int draw = 0; draw < 20; ++draw) {
    const auto& g = *gens[pick_g(rng)];
    const auto& x = *obs[pick_x(rng)];
    const double theta = angle(rng);
    INFO("g = " << g.name << ", x = " << x.name << ", theta = " << theta);
    const FloatQuadOp y = algebra::conjugate(g.op, theta, x.op);
    const oracle::Mat gm = d.matrix(g.op);
    const oracle::Mat ref = oracle::expi(gm, theta) * d.matrix(x.op) * oracle::expi(gm, -theta);
    CHECK((d.matrix(y) - ref).cwiseAbs().maxCoeff() < 1e-10);
  }
}
