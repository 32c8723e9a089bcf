#include "ksny/weyl.hpp"

#include <array>
#include <sstream>

namespace ksny {

namespace {

// falling(g, j) = g (g-1) ... (g-j+1), and binomials, for nibble exponents.
struct ContractionTables {
  std::array<std::array<long long, 16>, 16> binom{};
  std::array<long long, 16> fact{};
  ContractionTables() {
    for (int n = 0; n < 16; ++n) {
      binom[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0);
    }
    fact[0] = 1;
    for (int n = 1; n < 16; ++n) fact[n] = fact[n - 1] * n;
  }
};
const ContractionTables kTab;

}  // namespace

namespace mono {

std::string to_string(std::uint32_t m, int dim, const char* sym) {
  std::string s;
  for (int mu = 0; mu < dim; ++mu) {
    int e = get(m, mu);
    if (e == 0) continue;
    s += sym;
    s += std::to_string(mu);
    if (e > 1) s += "^" + std::to_string(e);
    s += " ";
  }
  return s;
}

}  // namespace mono

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  a.check_match(b);
  const int dim = a.dim();
  WeylOp result(dim, a.order());
  for (const auto& [ka, ca] : a.terms()) {
    const std::uint32_t xa = key_x(ka), da = key_d(ka);
    for (const auto& [kb, cb] : b.terms()) {
      const std::uint32_t xb = key_x(kb), db = key_d(kb);
      XSeries coeff = ca * cb;
      if (coeff.is_zero()) continue;
      // (X^xa D^da)(X^xb D^db): contract D^da against X^xb coordinate by
      // coordinate with [D_mu, X_mu] = eta_{mu mu}; the metric is diagonal so
      // distinct coordinates commute outright.
      struct Piece {
        std::uint32_t x, d;
        long long factor;
      };
      std::vector<Piece> pieces{{mono::add(xa, xb, dim), mono::add(da, db, dim), 1}};
      for (int mu = 0; mu < dim; ++mu) {
        const int bexp = mono::get(da, mu);
        const int gexp = mono::get(xb, mu);
        const int jmax = std::min(bexp, gexp);
        if (jmax == 0) continue;
        std::vector<Piece> next;
        next.reserve(pieces.size() * (jmax + 1));
        for (const auto& p : pieces) {
          next.push_back(p);  // j = 0
          long long sign = 1;
          for (int j = 1; j <= jmax; ++j) {
            sign *= metric_sign(mu);
            long long f = kTab.binom[bexp][j] * kTab.binom[gexp][j] * kTab.fact[j] * sign;
            next.push_back({mono::inc(p.x, mu, -j), mono::inc(p.d, mu, -j), p.factor * f});
          }
        }
        pieces = std::move(next);
      }
      for (const auto& p : pieces)
        result.add_term(p.x, p.d, coeff.scaled(CRational(Rational(p.factor))));
    }
  }
  return result;
}

WeylOp weyl_commutator(const WeylOp& a, const WeylOp& b) {
  return weyl_mul(a, b) - weyl_mul(b, a);
}

PolyField weyl_act(const WeylOp& a, const PolyField& p) {
  if (a.dim() != p.dim() || a.order() != p.order())
    throw std::invalid_argument("weyl_act: dimension/order mismatch");
  const int dim = a.dim();
  PolyField result(dim, p.order());
  for (const auto& [k, c] : a.terms()) {
    const std::uint32_t xexp = key_x(k), dexp = key_d(k);
    for (const auto& [g, pc] : p.terms()) {
      long long factor = 1;
      bool kills = false;
      for (int mu = 0; mu < dim; ++mu) {
        const int b = mono::get(dexp, mu);
        if (b == 0) continue;
        const int gm = mono::get(g, mu);
        if (b > gm) {
          kills = true;
          break;
        }
        for (int t = 0; t < b; ++t) factor *= (gm - t);
        if (b % 2 == 1) factor *= metric_sign(mu);
      }
      if (kills) continue;
      std::uint32_t m = g;
      for (int mu = 0; mu < dim; ++mu) m = mono::inc(m, mu, -mono::get(dexp, mu));
      m = mono::add(m, xexp, dim);
      result.add_term(m, (c * pc).scaled(CRational(Rational(factor))));
    }
  }
  return result;
}

WeylOp weyl_geometric_inverse(const WeylOp& op) {
  const int order = op.order();
  WeylOp r = op - WeylOp::one(op.dim(), order);
  for (const auto& [k, c] : r.terms()) {
    if (!scalar_is_zero(c[0]))
      throw std::domain_error("weyl_geometric_inverse: remainder not graded >= 1");
    if (key_x(k) != 0)
      throw std::domain_error("weyl_geometric_inverse: operator is not pure-D");
  }
  WeylOp result = WeylOp::one(op.dim(), order);
  WeylOp power = WeylOp::one(op.dim(), order);
  for (int m = 1; m <= order; ++m) {
    power = weyl_mul(power, r);
    if (power.is_zero()) break;
    result += (m % 2 == 1) ? -power : power;
  }
  return result;
}

WeylOp weyl_apply_taylor(const std::vector<Rational>& taylor, const WeylOp& arg) {
  for (const auto& [k, c] : arg.terms()) {
    if (!scalar_is_zero(c[0]) || key_x(k) != 0)
      throw std::domain_error("weyl_apply_taylor: argument must be graded pure-D");
  }
  WeylOp result = WeylOp::zero(arg.dim(), arg.order());
  WeylOp power = WeylOp::one(arg.dim(), arg.order());
  for (int m = 0; m < static_cast<int>(taylor.size()); ++m) {
    if (m > 0) {
      power = weyl_mul(power, arg);
      if (power.is_zero()) break;
    }
    if (!taylor[m].is_zero()) result += power.scaled(CRational(taylor[m]));
  }
  return result;
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[";
    for (int d = 0; d <= order_; ++d) {
      if (d) os << ", ";
      os << c[d].str();
    }
    os << "] " << mono::to_string(key_x(k), dim_, "X") << mono::to_string(key_d(k), dim_, "D");
  }
  return os.str();
}

std::string PolyField::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[";
    for (int d = 0; d <= order_; ++d) {
      if (d) os << ", ";
      os << c[d].str();
    }
    os << "] " << mono::to_string(m, dim_, "X");
  }
  return os.str();
}

}  // namespace ksny
