#include "bellsu11/algebra/rational.h"

#include <sstream>

namespace bellsu11::algebra {

namespace {

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

// "i", "-i", "3i/4", "-i/2".
std::string imaginary_string(const Rational& r) {
  std::ostringstream os;
  if (r.numerator() < 0) os << '-';
  const auto num = r.numerator() < 0 ? -r.numerator() : r.numerator();
  if (num != 1) os << num;
  os << 'i';
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace

std::complex<double> ComplexRational::to_complex() const { return {to_double(re_), to_double(im_)}; }

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  const Rational re = re_ * o.re_ - im_ * o.im_;
  const Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  im_ = im;
  return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string ComplexRational::to_string() const {
  if (im_.numerator() == 0) return rational_string(re_);
  if (re_.numerator() == 0) return imaginary_string(im_);
  std::string im = imaginary_string(im_);
  if (im.front() != '-') im.insert(im.begin(), '+');
  return "(" + rational_string(re_) + im + ")";
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.to_string(); }

}  // namespace bellsu11::algebra
