#ifndef KSNY_SCALAR_HPP
#define KSNY_SCALAR_HPP

#include <complex>
#include <string>

#include "ksny/rational.hpp"

namespace ksny {

/// Complex number with exact rational real and imaginary parts. The defining
/// relations carry explicit factors of i, so the symbolic track needs this
/// rather than plain rationals.
struct CRational {
  Rational re;
  Rational im;

  CRational() = default;
  CRational(long long n) : re(n), im(0) {}
  CRational(Rational r) : re(r), im(0) {}
  CRational(Rational r, Rational i) : re(r), im(i) {}

  static CRational i_unit() { return CRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  std::complex<double> to_complex() const {
    return {re.to_double(), im.to_double()};
  }

  friend CRational operator+(const CRational& a, const CRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend CRational operator-(const CRational& a, const CRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend CRational operator*(const CRational& a, const CRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CRational operator/(const CRational& a, const CRational& b) {
    Rational n2 = b.re * b.re + b.im * b.im;
    if (n2.is_zero()) throw std::domain_error("CRational: division by zero");
    return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
  }
  CRational operator-() const { return {-re, -im}; }
  CRational& operator+=(const CRational& o) { return *this = *this + o; }
  CRational& operator-=(const CRational& o) { return *this = *this - o; }
  CRational& operator*=(const CRational& o) { return *this = *this * o; }

  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

  std::string str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "*i";
    return "(" + re.str() + (im < Rational(0) ? "-" : "+") +
           (im < Rational(0) ? (-im).str() : im.str()) + "*i)";
  }
};

// Uniform hooks so EpsSeries can be instantiated on either scalar kind.
inline bool scalar_is_zero(const CRational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& v) {
  return v.real() == 0.0 && v.imag() == 0.0;
}
inline bool scalar_is_zero(double v) { return v == 0.0; }

}  // namespace ksny

#endif
