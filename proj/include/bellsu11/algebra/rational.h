#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/rational.hpp>

namespace bellsu11::algebra {

using Rational = boost::rational<std::int64_t>;

// Exact complex number with rational real and imaginary parts.
class ComplexRational {
 public:
  constexpr ComplexRational() = default;
  ComplexRational(std::int64_t re) : re_(re) {}  // NOLINT: implicit by design of literals
  ComplexRational(Rational re) : re_(re) {}      // NOLINT
  ComplexRational(Rational re, Rational im) : re_(re), im_(im) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.numerator() == 0 && im_.numerator() == 0; }

  ComplexRational conj() const { return {re_, -im_}; }

  std::complex<double> to_complex() const;

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);
  ComplexRational& operator/=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Compact form: "1/2", "-i/4", "(1/2-3i/4)".
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

// Shorthand for p/q.
inline ComplexRational frac(std::int64_t p, std::int64_t q) { return Rational(p, q); }

}  // namespace bellsu11::algebra
