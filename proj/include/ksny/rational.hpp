#ifndef KSNY_RATIONAL_HPP
#define KSNY_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ksny {

/// Exact rational scalar, always stored reduced with positive denominator.
/// Intermediate products run through __int128; anything that no longer fits
/// int64 after reduction throws overflow_error instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return from128(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "-3", "0.125", "7/20" into an exact value.
  static Rational parse(const std::string& s);

 private:
  using lll = long long;
  static __int128 i128(long long v) { return static_cast<__int128>(v); }

  void assign(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  long long num_;
  long long den_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(s));
  bool neg = s[0] == '-';
  std::string intpart = s.substr(0, dot);
  std::string frac = s.substr(dot + 1);
  if (frac.size() > 15) throw std::invalid_argument("Rational::parse: too many decimals");
  long long den = 1;
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  long long whole = intpart.empty() || intpart == "-" ? 0 : std::stoll(intpart);
  long long fnum = frac.empty() ? 0 : std::stoll(frac);
  if (neg) {
    return Rational(whole * den - fnum, den);
  }
  return Rational(whole * den + fnum, den);
}

}  // namespace ksny

#endif
