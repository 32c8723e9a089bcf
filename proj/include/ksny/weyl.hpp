#ifndef KSNY_WEYL_HPP
#define KSNY_WEYL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "ksny/minkvec.hpp"
#include "ksny/series.hpp"

namespace ksny {

// Exponent multi-indices are packed one nibble per coordinate, so dim <= 8
// and every per-coordinate exponent stays below 16. Desk-scale operators fit
// comfortably; the setters throw on overflow rather than wrap.
namespace mono {

constexpr int kMaxDim = 8;
constexpr int kMaxExp = 15;

inline int get(std::uint32_t m, int mu) { return (m >> (4 * mu)) & 0xF; }

inline std::uint32_t set(std::uint32_t m, int mu, int e) {
  if (e < 0 || e > kMaxExp) throw std::overflow_error("monomial exponent out of range");
  return (m & ~(0xFu << (4 * mu))) | (static_cast<std::uint32_t>(e) << (4 * mu));
}

inline std::uint32_t inc(std::uint32_t m, int mu, int by = 1) {
  return set(m, mu, get(m, mu) + by);
}

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, int dim) {
  std::uint32_t r = a;
  for (int mu = 0; mu < dim; ++mu) r = inc(r, mu, get(b, mu));
  return r;
}

inline int total(std::uint32_t m, int dim) {
  int t = 0;
  for (int mu = 0; mu < dim; ++mu) t += get(m, mu);
  return t;
}

inline std::uint32_t unit(int mu) { return set(0, mu, 1); }

std::string to_string(std::uint32_t m, int dim, const char* sym);

}  // namespace mono

/// Key of a normal-ordered term: X-exponents in the high word, D-exponents in
/// the low word. Map order on keys fixes the canonical term order.
inline std::uint64_t term_key(std::uint32_t xexp, std::uint32_t dexp) {
  return (static_cast<std::uint64_t>(xexp) << 32) | dexp;
}
inline std::uint32_t key_x(std::uint64_t k) { return static_cast<std::uint32_t>(k >> 32); }
inline std::uint32_t key_d(std::uint64_t k) { return static_cast<std::uint32_t>(k); }

/// Commutative polynomial in the coordinates X with graded-series
/// coefficients; the target of the action on functions.
class PolyField {
 public:
  PolyField(int dim, int order) : dim_(dim), order_(order) {}

  int dim() const { return dim_; }
  int order() const { return order_; }
  const std::map<std::uint32_t, XSeries>& terms() const { return terms_; }

  void add_term(std::uint32_t xexp, const XSeries& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(xexp);
    if (it == terms_.end()) {
      terms_.emplace(xexp, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }

  friend PolyField operator+(const PolyField& a, const PolyField& b) {
    PolyField r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend PolyField operator-(const PolyField& a, const PolyField& b) {
    PolyField r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend bool operator==(const PolyField& a, const PolyField& b) {
    return (a - b).is_zero();
  }

  static PolyField one(int dim, int order) {
    PolyField p(dim, order);
    p.add_term(0, XSeries::one(order));
    return p;
  }
  static PolyField coordinate(int mu, int dim, int order) {
    PolyField p(dim, order);
    p.add_term(mono::unit(mu), XSeries::one(order));
    return p;
  }

  std::string str() const;

 private:
  int dim_;
  int order_;
  std::map<std::uint32_t, XSeries> terms_;
};

/// Normal-ordered element of the undeformed Heisenberg-Weyl algebra: a sum of
/// graded-series coefficients times X-monomial times D-monomial, with all X
/// factors conceptually left of all D factors. The single rewrite rule
/// [D_mu, X_nu] = eta_{mu nu} drives multiplication.
class WeylOp {
 public:
  WeylOp(int dim, int order) : dim_(dim), order_(order) {
    if (dim < 2 || dim > mono::kMaxDim) throw std::invalid_argument("WeylOp: bad dimension");
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  const std::map<std::uint64_t, XSeries>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  static WeylOp zero(int dim, int order) { return WeylOp(dim, order); }
  static WeylOp one(int dim, int order) {
    WeylOp w(dim, order);
    w.add_term(0, 0, XSeries::one(order));
    return w;
  }
  static WeylOp x(int mu, int dim, int order) {
    WeylOp w(dim, order);
    w.add_term(mono::unit(mu), 0, XSeries::one(order));
    return w;
  }
  static WeylOp d(int mu, int dim, int order) {
    WeylOp w(dim, order);
    w.add_term(0, mono::unit(mu), XSeries::one(order));
    return w;
  }

  void add_term(std::uint32_t xexp, std::uint32_t dexp, const XSeries& c) {
    if (c.is_zero()) return;
    std::uint64_t k = term_key(xexp, dexp);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }

  friend WeylOp operator+(const WeylOp& a, const WeylOp& b) {
    a.check_match(b);
    WeylOp r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(key_x(k), key_d(k), c);
    return r;
  }
  friend WeylOp operator-(const WeylOp& a, const WeylOp& b) {
    a.check_match(b);
    WeylOp r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(key_x(k), key_d(k), -c);
    return r;
  }
  WeylOp operator-() const {
    WeylOp r(dim_, order_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
  WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }

  WeylOp scaled(const XSeries& s) const {
    WeylOp r(dim_, order_);
    for (const auto& [k, c] : terms_) r.add_term(key_x(k), key_d(k), c * s);
    return r;
  }
  WeylOp scaled(const CRational& s) const {
    WeylOp r(dim_, order_);
    for (const auto& [k, c] : terms_) r.add_term(key_x(k), key_d(k), c.scaled(s));
    return r;
  }

  friend bool operator==(const WeylOp& a, const WeylOp& b) { return (a - b).is_zero(); }
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

  /// True when no term carries X or D exponents (pure series coefficient).
  bool is_pure_d() const {
    for (const auto& [k, c] : terms_)
      if (key_x(k) != 0) return false;
    return true;
  }

  std::string str() const;

  void check_match(const WeylOp& o) const {
    if (dim_ != o.dim_ || order_ != o.order_)
      throw std::invalid_argument("WeylOp: dimension/order mismatch");
  }

 private:
  int dim_;
  int order_;
  std::map<std::uint64_t, XSeries> terms_;
};

/// Normal-ordered product, exact in the exact scalar kind.
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

/// AB - BA.
WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b);

/// Action on commutative polynomials: every D differentiates, then the X
/// monomial multiplies. D_mu acts as d/dX^mu, so D_mu acting on X_nu gives
/// eta_{mu nu}.
PolyField weyl_act(const WeylOp& a, const PolyField& p);

/// 1/(1+r) for op = 1 + r where r is graded of degree >= 1 and pure-D, via
/// the finite geometric series in the truncated ring.
WeylOp weyl_geometric_inverse(const WeylOp& op);

/// Applies a Taylor-coefficient list to a pure-D graded argument of degree
/// >= 1 (operator version of series composition; powers truncate away).
WeylOp weyl_apply_taylor(const std::vector<Rational>& taylor, const WeylOp& arg);

}  // namespace ksny

#endif
