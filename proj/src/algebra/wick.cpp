#include "bellsu11/algebra/wick.h"

#include <algorithm>
#include <utility>

namespace bellsu11::algebra {

void NormalPolynomial::add(const NormalMonomial& m, const ComplexRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NormalPolynomial::add_word(const Word& word, const ComplexRational& coeff) {
  std::vector<std::pair<Word, ComplexRational>> pending{{word, coeff}};
  while (!pending.empty()) {
    auto [w, c] = std::move(pending.back());
    pending.pop_back();
    auto bad = std::adjacent_find(w.begin(), w.end(), [](const Ladder& l, const Ladder& r) {
      return !l.creation && r.creation;
    });
    if (bad == w.end()) {
      NormalMonomial m;
      for (const auto& op : w) (op.creation ? m.creators : m.annihilators).push_back(op.mode);
      std::sort(m.creators.begin(), m.creators.end());
      std::sort(m.annihilators.begin(), m.annihilators.end());
      add(m, c);
      continue;
    }
    // c_i c_j^dag = c_j^dag c_i + d_ij
    const auto pos = static_cast<std::size_t>(bad - w.begin());
    if (w[pos].mode == w[pos + 1].mode) {
      Word contracted;
      contracted.reserve(w.size() - 2);
      contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
      pending.emplace_back(std::move(contracted), c);
    }
    std::swap(w[pos], w[pos + 1]);
    pending.emplace_back(std::move(w), c);
  }
}

NormalPolynomial& NormalPolynomial::operator-=(const NormalPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

NormalPolynomial to_normal(const QuadOp& x) {
  NormalPolynomial p;
  for (const auto& [e, c] : x.terms()) {
    const int i = e.i, j = e.j;
    switch (e.kind) {
      case Kind::kPairCreate:
        p.add_word({{i, true}, {j, true}}, c);
        break;
      case Kind::kPairAnnihilate:
        p.add_word({{i, false}, {j, false}}, c);
        break;
      case Kind::kMixed:
        // literal definition (c_i^dag c_j + c_j c_i^dag) / 2
        p.add_word({{i, true}, {j, false}}, c * frac(1, 2));
        p.add_word({{j, false}, {i, true}}, c * frac(1, 2));
        break;
    }
  }
  p.add_word({}, x.scalar());
  return p;
}

NormalPolynomial product(const NormalPolynomial& x, const NormalPolynomial& y) {
  NormalPolynomial out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Word w;
      for (int m : mx.creators) w.push_back({m, true});
      for (int m : mx.annihilators) w.push_back({m, false});
      for (int m : my.creators) w.push_back({m, true});
      for (int m : my.annihilators) w.push_back({m, false});
      out.add_word(w, cx * cy);
    }
  }
  return out;
}

QuadraticReduction to_quadratic(const NormalPolynomial& p) {
  QuadraticReduction out;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() == 0) {
      out.op.add_scalar(c);
    } else if (m.creators.size() == 2 && m.annihilators.empty()) {
      out.op.add(BasisElement::A(m.creators[0], m.creators[1]), c);
    } else if (m.annihilators.size() == 2 && m.creators.empty()) {
      out.op.add(BasisElement::B(m.annihilators[0], m.annihilators[1]), c);
    } else if (m.creators.size() == 1 && m.annihilators.size() == 1) {
      const int i = m.creators[0], j = m.annihilators[0];
      out.op.add(BasisElement::C(i, j), c);
      if (i == j) out.op.add_scalar(-c * frac(1, 2));
    } else {
      out.residual.add(m, c);
    }
  }
  return out;
}

QuadraticReduction wick_commutator(const QuadOp& x, const QuadOp& y) {
  const NormalPolynomial nx = to_normal(x);
  const NormalPolynomial ny = to_normal(y);
  NormalPolynomial xy = product(nx, ny);
  xy -= product(ny, nx);
  return to_quadratic(xy);
}

}  // namespace bellsu11::algebra
