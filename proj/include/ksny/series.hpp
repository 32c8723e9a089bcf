#ifndef KSNY_SERIES_HPP
#define KSNY_SERIES_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "ksny/scalar.hpp"

namespace ksny {

/// Power series in the formal deformation-grading parameter, truncated at a
/// fixed order. coeffs[d] multiplies the d-th power of the grading parameter.
/// Deformation inputs are numeric; each insertion of an a-component carries
/// grade 1 and each insertion of s carries grade 2, so identities can be
/// checked order by order while the coefficient arithmetic stays exact.
template <typename S>
class EpsSeries {
 public:
  EpsSeries() : coeffs_(1, S(0)) {}
  explicit EpsSeries(int order) : coeffs_(order + 1, S(0)) {
    if (order < 0) throw std::invalid_argument("EpsSeries: negative order");
  }

  static EpsSeries constant(int order, const S& c) {
    EpsSeries r(order);
    r.coeffs_[0] = c;
    return r;
  }
  static EpsSeries one(int order) { return constant(order, S(1)); }
  /// c times the grade-d monomial (zero if d exceeds the truncation order).
  static EpsSeries graded(int order, int grade, const S& c) {
    EpsSeries r(order);
    if (grade <= order) r.coeffs_[grade] = c;
    return r;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const S& operator[](int d) const { return coeffs_[d]; }
  S& operator[](int d) { return coeffs_[d]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!scalar_is_zero(c)) return false;
    return true;
  }

  friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
    a.check_match(b);
    EpsSeries r(a.order());
    for (int d = 0; d <= a.order(); ++d) r.coeffs_[d] = a.coeffs_[d] + b.coeffs_[d];
    return r;
  }
  friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) {
    a.check_match(b);
    EpsSeries r(a.order());
    for (int d = 0; d <= a.order(); ++d) r.coeffs_[d] = a.coeffs_[d] - b.coeffs_[d];
    return r;
  }
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    a.check_match(b);
    EpsSeries r(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (scalar_is_zero(a.coeffs_[i])) continue;
      for (int j = 0; i + j <= a.order(); ++j) {
        if (scalar_is_zero(b.coeffs_[j])) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  EpsSeries operator-() const {
    EpsSeries r(order());
    for (int d = 0; d <= order(); ++d) r.coeffs_[d] = -coeffs_[d];
    return r;
  }
  EpsSeries& operator+=(const EpsSeries& o) { return *this = *this + o; }
  EpsSeries& operator-=(const EpsSeries& o) { return *this = *this - o; }
  EpsSeries& operator*=(const EpsSeries& o) { return *this = *this * o; }

  EpsSeries scaled(const S& c) const {
    EpsSeries r(order());
    for (int d = 0; d <= order(); ++d) r.coeffs_[d] = coeffs_[d] * c;
    return r;
  }

  /// Multiplies by the grade-k monomial, pushing high terms off the end.
  EpsSeries shifted(int k) const {
    EpsSeries r(order());
    for (int d = 0; d + k <= order(); ++d) r.coeffs_[d + k] = coeffs_[d];
    return r;
  }

  friend bool operator==(const EpsSeries& a, const EpsSeries& b) {
    a.check_match(b);
    for (int d = 0; d <= a.order(); ++d)
      if (!scalar_is_zero(a.coeffs_[d] - b.coeffs_[d])) return false;
    return true;
  }
  friend bool operator!=(const EpsSeries& a, const EpsSeries& b) { return !(a == b); }

  /// 1/this for a series with invertible constant term.
  EpsSeries reciprocal() const {
    if (scalar_is_zero(coeffs_[0]))
      throw std::domain_error("EpsSeries: reciprocal of series with zero constant term");
    EpsSeries r(order());
    S c0inv = S(1) / coeffs_[0];
    r.coeffs_[0] = c0inv;
    for (int d = 1; d <= order(); ++d) {
      S acc = S(0);
      for (int j = 1; j <= d; ++j) acc = acc + coeffs_[j] * r.coeffs_[d - j];
      r.coeffs_[d] = -(acc * c0inv);
    }
    return r;
  }

 private:
  void check_match(const EpsSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size())
      throw std::invalid_argument("EpsSeries: truncation order mismatch");
  }

  std::vector<S> coeffs_;
};

/// Composes a polynomial, given by its coefficient list, with a truncated
/// series: sum over m of coeffs[m] * arg^m. No constraint on the argument's
/// constant term; every listed coefficient contributes.
template <typename S>
EpsSeries<S> series_apply_poly(const std::vector<S>& coeffs, const EpsSeries<S>& arg) {
  const int N = arg.order();
  EpsSeries<S> result(N);
  EpsSeries<S> power = EpsSeries<S>::one(N);
  const bool zero_const = scalar_is_zero(arg[0]);
  const int deg = static_cast<int>(coeffs.size()) - 1;
  for (int m = 0; m <= deg; ++m) {
    if (m > 0) {
      if (zero_const && m > N) break;  // higher powers truncate away
      power *= arg;
    }
    if (!scalar_is_zero(coeffs[m])) result += power.scaled(coeffs[m]);
  }
  return result;
}

/// Composes an analytic function, given by a Taylor-coefficient generator,
/// with a truncated series. The argument must have zero constant term so
/// that only finitely many Taylor coefficients matter.
template <typename S, typename TaylorFn>
EpsSeries<S> series_apply_analytic(TaylorFn&& taylor, const EpsSeries<S>& arg) {
  const int N = arg.order();
  if (!scalar_is_zero(arg[0]))
    throw std::domain_error(
        "series_apply_analytic: argument with nonzero constant term needs a polynomial");
  EpsSeries<S> result(N);
  EpsSeries<S> power = EpsSeries<S>::one(N);
  for (int m = 0; m <= N; ++m) {
    if (m > 0) power *= arg;
    S c = taylor(m);
    if (!scalar_is_zero(c)) result += power.scaled(c);
  }
  return result;
}

using XSeries = EpsSeries<CRational>;  // exact symbolic track
using QSeries = EpsSeries<Rational>;   // exact real-valued series (Taylor data)
using FSeries = EpsSeries<std::complex<double>>;  // floating track

}  // namespace ksny

#endif
