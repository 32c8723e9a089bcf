#ifndef KSNY_PARAMS_HPP
#define KSNY_PARAMS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksny/minkvec.hpp"
#include "ksny/series.hpp"

namespace ksny {

/// Deformation data: the vector a (length units) and the scalar s (length^2).
/// Both are exact rationals so the symbolic track stays exact; the numeric
/// track reads the double views.
struct DeformParams {
  MinkVecQ a;
  Rational s;

  DeformParams(MinkVecQ a_, Rational s_) : a(std::move(a_)), s(s_) {}

  int dim() const { return a.dim(); }
  Rational a_sq() const { return mink_sq(a); }
  /// a^2 - s, the combination entering B.
  Rational a2ms() const { return a_sq() - s; }

  MinkVec a_dbl() const { return to_double(a); }
  double s_dbl() const { return s.to_double(); }
  double a2ms_dbl() const { return a2ms().to_double(); }

  bool is_undeformed() const {
    if (!s.is_zero()) return false;
    for (int i = 0; i < a.dim(); ++i)
      if (!a[i].is_zero()) return false;
    return true;
  }
};

/// Choice of the realization function f(B) with f(0) = 1.
struct RealizationSpec {
  enum class Kind { Maggiore, Unit, GeneralU, CustomTaylor };

  Kind kind = Kind::Maggiore;
  Rational u;                    // GeneralU: f(B) = 1 - u*B
  std::vector<Rational> custom;  // CustomTaylor: polynomial coefficients of f

  static RealizationSpec maggiore() { return {Kind::Maggiore, Rational(0), {}}; }
  static RealizationSpec unit() { return {Kind::Unit, Rational(0), {}}; }
  static RealizationSpec general_u(Rational u) { return {Kind::GeneralU, u, {}}; }
  static RealizationSpec custom_taylor(std::vector<Rational> coeffs) {
    if (coeffs.empty() || !coeffs[0].is_one())
      throw std::invalid_argument("RealizationSpec: f(0) must be 1");
    return {Kind::CustomTaylor, Rational(0), std::move(coeffs)};
  }

  bool is_maggiore() const { return kind == Kind::Maggiore; }

  std::string name() const {
    switch (kind) {
      case Kind::Maggiore: return "maggiore";
      case Kind::Unit: return "unit";
      case Kind::GeneralU: return "u=" + u.str();
      default: return "custom";
    }
  }

  /// Taylor coefficients of f in powers of B, through degree deg.
  std::vector<Rational> f_taylor(int deg) const {
    std::vector<Rational> c(deg + 1, Rational(0));
    switch (kind) {
      case Kind::Maggiore: {
        // sqrt(1-t): c_m = (-1)^m * binom(1/2, m)
        Rational cur(1);
        c[0] = cur;
        for (int m = 1; m <= deg; ++m) {
          // c_m = c_{m-1} * (1/2 - (m-1)) / m * (-1)
          cur = cur * (Rational(1, 2) - Rational(m - 1)) / Rational(m) * Rational(-1);
          c[m] = cur;
        }
        break;
      }
      case Kind::Unit:
        c[0] = Rational(1);
        break;
      case Kind::GeneralU:
        c[0] = Rational(1);
        if (deg >= 1) c[1] = -u;
        break;
      case Kind::CustomTaylor:
        for (int m = 0; m <= deg && m < static_cast<int>(custom.size()); ++m)
          c[m] = custom[m];
        break;
    }
    return c;
  }

  double f_at(double B) const {
    switch (kind) {
      case Kind::Maggiore:
        if (1.0 - B < 0.0) throw std::domain_error("f(B): sqrt of negative argument");
        return std::sqrt(1.0 - B);
      case Kind::Unit: return 1.0;
      case Kind::GeneralU: return 1.0 - u.to_double() * B;
      default: {
        double acc = 0;
        for (int m = static_cast<int>(custom.size()) - 1; m >= 0; --m)
          acc = acc * B + custom[m].to_double();
        return acc;
      }
    }
  }

  double fprime_at(double B) const {
    switch (kind) {
      case Kind::Maggiore:
        if (1.0 - B <= 0.0) throw std::domain_error("f'(B): sqrt of nonpositive argument");
        return -0.5 / std::sqrt(1.0 - B);
      case Kind::Unit: return 0.0;
      case Kind::GeneralU: return -u.to_double();
      default: {
        double acc = 0;
        for (int m = static_cast<int>(custom.size()) - 1; m >= 1; --m)
          acc = acc * B + m * custom[m].to_double();
        return acc;
      }
    }
  }
};

}  // namespace ksny

#endif
