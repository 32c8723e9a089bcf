#ifndef KSNY_NCORDER_HPP
#define KSNY_NCORDER_HPP

#include <variant>
#include <vector>

#include "ksny/frame.hpp"

namespace ksny {

/// Element of the deformed enveloping algebra in the ordered basis: sums of
/// coefficient times ordered xhat-monomial (ascending coordinate index, left
/// to right) times D-monomial on the right. Same packed-key storage as
/// WeylOp, but the X word now means noncommuting xhat factors.
class NCOp {
 public:
  NCOp(int dim, int order) : dim_(dim), order_(order) {}

  int dim() const { return dim_; }
  int order() const { return order_; }
  const std::map<std::uint64_t, XSeries>& terms() const { return terms_; }

  static NCOp zero(int dim, int order) { return NCOp(dim, order); }
  static NCOp one(int dim, int order) {
    NCOp r(dim, order);
    r.add_term(0, 0, XSeries::one(order));
    return r;
  }
  static NCOp xhat(int mu, int dim, int order) {
    NCOp r(dim, order);
    r.add_term(mono::unit(mu), 0, XSeries::one(order));
    return r;
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

  friend NCOp operator+(const NCOp& a, const NCOp& b) {
    a.check_match(b);
    NCOp r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(key_x(k), key_d(k), c);
    return r;
  }
  friend NCOp operator-(const NCOp& a, const NCOp& b) {
    a.check_match(b);
    NCOp r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(key_x(k), key_d(k), -c);
    return r;
  }
  NCOp& operator+=(const NCOp& o) { return *this = *this + o; }
  NCOp& operator-=(const NCOp& o) { return *this = *this - o; }

  NCOp scaled(const XSeries& s) const {
    NCOp r(dim_, order_);
    for (const auto& [k, c] : terms_) r.add_term(key_x(k), key_d(k), c * s);
    return r;
  }

  friend bool operator==(const NCOp& a, const NCOp& b) { return (a - b).is_zero(); }
  friend bool operator!=(const NCOp& a, const NCOp& b) { return !(a == b); }

  /// Largest xhat-monomial degree among the terms.
  int xhat_degree() const {
    int deg = 0;
    for (const auto& [k, c] : terms_) deg = std::max(deg, mono::total(key_x(k), dim_));
    return deg;
  }

  bool has_d_terms() const {
    for (const auto& [k, c] : terms_)
      if (key_d(k) != 0) return true;
    return false;
  }

  std::string str() const;

  void check_match(const NCOp& o) const {
    if (dim_ != o.dim_ || order_ != o.order_)
      throw std::invalid_argument("NCOp: dimension/order mismatch");
  }

 private:
  int dim_;
  int order_;
  std::map<std::uint64_t, XSeries> terms_;
};

/// Rewrite data for the ordered-basis calculus. The Lorentz generators are
/// eliminated through the shift operator, which the maggiore realization
/// uniquely provides, so the system is closed over xhat and D-series;
/// other specs are rejected.
struct NCContext {
  DeformParams params;
  int dim;
  int order;
  WeylOp Z;                             // pure-D shift operator expansion
  std::vector<std::vector<WeylOp>> Phi; // pure-D [D_mu, xhat_nu] right sides

  NCContext(const RealizationSpec& spec, const DeformParams& p, int ord);
};

/// One factor of an input word.
struct FXhat { int mu; };
struct FD { int mu; };
struct FSeriesD { WeylOp op; };  // pure-D series factor
using NCFactor = std::variant<FXhat, FD, FSeriesD>;
using NCWord = std::vector<NCFactor>;

/// Right-multiplication of a canonical element by the generators.
NCOp nc_mul_xhat(const NCOp& op, int mu, const NCContext& ctx);
NCOp nc_mul_d(const NCOp& op, int mu);
NCOp nc_mul_series(const NCOp& op, const WeylOp& pure_d_series);

/// Rewrites a word of factors to the canonical ordered basis. Idempotent on
/// already-ordered input.
NCOp nc_normal_order(const NCWord& word, const NCContext& ctx);

/// Product of two canonical elements.
NCOp nc_mul(const NCOp& a, const NCOp& b, const NCContext& ctx);

/// Projection onto the ordered xhat-polynomial part: drops every term that
/// still carries derivatives.
NCOp circ_project(const NCOp& op);

/// nc_normal_order of the permuted product minus the identity-ordered
/// product of the same coordinate list.
NCOp pbw_defect(const std::vector<int>& perm, const std::vector<int>& indices,
                const NCContext& ctx);

struct InvariantI2 {
  NCOp value;                            // projected quadratic invariant
  NCOp closed_form;                      // projected xhat.xhat - i(n-1) a.xhat
  std::vector<std::vector<NCOp>> lorentz_defect;
};

/// Builds the quadratic invariant by rewriting X.X through the inverse map
/// and projecting, together with its Lorentz defect (lift, left-multiply by
/// the generator, reorder, project).
InvariantI2 invariant_I2(const NCContext& ctx);

/// Realizes a word (or canonical element) inside the undeformed algebra.
WeylOp realize_word(const NCWord& word, const RealizedFrame& frame);
WeylOp realize_nc(const NCOp& op, const RealizedFrame& frame);

}  // namespace ksny

#endif
