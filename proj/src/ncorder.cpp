#include "ksny/ncorder.hpp"

#include <sstream>

namespace ksny {

NCContext::NCContext(const RealizationSpec& spec, const DeformParams& p, int ord)
    : params(p), dim(p.dim()), order(ord), Z(WeylOp::zero(p.dim(), ord)) {
  if (!spec.is_maggiore())
    throw std::domain_error(
        "NCContext: ordered-basis rewriting needs the shift operator, maggiore only");
  RealizedFrame fr = build_frame(spec, p, ord);
  Z = fr.phi_inv;
  Phi.assign(dim, std::vector<WeylOp>(dim, WeylOp::zero(dim, ord)));
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = 0; nu < dim; ++nu) Phi[mu][nu] = fr.phi_matrix_op(mu, nu);
}

namespace {

Rational raised_a(const DeformParams& p, int mu) {
  return mu == 0 ? -p.a[mu] : p.a[mu];
}

/// Canonical product (ordered monomial E) * xhat_mu. Out-of-order swaps feed
/// the coordinate commutator with the Lorentz generator eliminated via the
/// shift operator, producing strictly lower xhat-degree corrections that all
/// carry positive grade, so the recursion terminates.
NCOp xhat_insert(std::uint32_t E, int mu, const NCContext& ctx) {
  const int dim = ctx.dim;
  const int order = ctx.order;
  int nu = -1;
  for (int la = dim - 1; la > mu; --la)
    if (mono::get(E, la) > 0) {
      nu = la;
      break;
    }
  if (nu < 0) {
    NCOp r(dim, order);
    r.add_term(mono::inc(E, mu), 0, XSeries::one(order));
    return r;
  }
  const std::uint32_t Ep = mono::inc(E, nu, -1);
  // E' xhat_nu xhat_mu = E' xhat_mu xhat_nu - i a_mu E' xhat_nu
  //   + i a_nu E' xhat_mu - s (E' xhat_mu D_nu - E' xhat_nu D_mu) Z
  NCOp A = xhat_insert(Ep, mu, ctx);  // E' xhat_mu, canonical, indices <= nu
  NCOp res = nc_mul_xhat(A, nu, ctx);
  NCOp termE(dim, order);
  termE.add_term(E, 0, XSeries::one(order));
  const auto& a = ctx.params.a;
  if (!a[mu].is_zero())
    res -= termE.scaled(XSeries::graded(order, 1, CRational(Rational(0), a[mu])));
  if (!a[nu].is_zero())
    res += A.scaled(XSeries::graded(order, 1, CRational(Rational(0), a[nu])));
  const Rational s = ctx.params.s;
  if (!s.is_zero()) {
    XSeries sg = XSeries::graded(order, 2, CRational(s));
    res -= nc_mul_series(nc_mul_d(A, nu), ctx.Z).scaled(sg);
    res += nc_mul_series(nc_mul_d(termE, mu), ctx.Z).scaled(sg);
  }
  return res;
}

}  // namespace

NCOp nc_mul_xhat(const NCOp& op, int mu, const NCContext& ctx) {
  const int dim = ctx.dim;
  NCOp out(dim, ctx.order);
  for (const auto& [k, coeff] : op.terms()) {
    const std::uint32_t xexp = key_x(k), dexp = key_d(k);
    // D^beta xhat_mu = xhat_mu D^beta + sum_la beta_la Phi_{la mu}(D) D^{beta - e_la}
    NCOp base = xhat_insert(xexp, mu, ctx);
    for (const auto& [bk, bc] : base.terms())
      out.add_term(key_x(bk), mono::add(key_d(bk), dexp, dim), bc * coeff);
    for (int la = 0; la < dim; ++la) {
      const int b = mono::get(dexp, la);
      if (b == 0) continue;
      const std::uint32_t drest = mono::inc(dexp, la, -1);
      for (const auto& [pk, pc] : ctx.Phi[la][mu].terms())
        out.add_term(xexp, mono::add(drest, key_d(pk), dim),
                     (coeff * pc).scaled(CRational(Rational(b))));
    }
  }
  return out;
}

NCOp nc_mul_d(const NCOp& op, int mu) {
  NCOp out(op.dim(), op.order());
  for (const auto& [k, c] : op.terms())
    out.add_term(key_x(k), mono::inc(key_d(k), mu), c);
  return out;
}

NCOp nc_mul_series(const NCOp& op, const WeylOp& series) {
  if (!series.is_pure_d())
    throw std::invalid_argument("nc_mul_series: series factor must be pure-D");
  NCOp out(op.dim(), op.order());
  for (const auto& [k, c] : op.terms())
    for (const auto& [sk, sc] : series.terms())
      out.add_term(key_x(k), mono::add(key_d(k), key_d(sk), op.dim()), c * sc);
  return out;
}

NCOp nc_normal_order(const NCWord& word, const NCContext& ctx) {
  NCOp acc = NCOp::one(ctx.dim, ctx.order);
  for (const auto& f : word) {
    if (std::holds_alternative<FXhat>(f))
      acc = nc_mul_xhat(acc, std::get<FXhat>(f).mu, ctx);
    else if (std::holds_alternative<FD>(f))
      acc = nc_mul_d(acc, std::get<FD>(f).mu);
    else
      acc = nc_mul_series(acc, std::get<FSeriesD>(f).op);
  }
  return acc;
}

NCOp nc_mul(const NCOp& a, const NCOp& b, const NCContext& ctx) {
  NCOp out(a.dim(), a.order());
  for (const auto& [k, c] : b.terms()) {
    NCOp piece = a.scaled(c);
    const std::uint32_t xexp = key_x(k), dexp = key_d(k);
    for (int mu = 0; mu < a.dim(); ++mu)
      for (int e = 0; e < mono::get(xexp, mu); ++e) piece = nc_mul_xhat(piece, mu, ctx);
    for (int mu = 0; mu < a.dim(); ++mu)
      for (int e = 0; e < mono::get(dexp, mu); ++e) piece = nc_mul_d(piece, mu);
    out += piece;
  }
  return out;
}

NCOp circ_project(const NCOp& op) {
  NCOp out(op.dim(), op.order());
  for (const auto& [k, c] : op.terms())
    if (key_d(k) == 0) out.add_term(key_x(k), 0, c);
  return out;
}

NCOp pbw_defect(const std::vector<int>& perm, const std::vector<int>& indices,
                const NCContext& ctx) {
  if (perm.size() != indices.size())
    throw std::invalid_argument("pbw_defect: permutation length mismatch");
  NCWord permuted, identity;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    permuted.push_back(FXhat{indices[perm[i]]});
    identity.push_back(FXhat{indices[i]});
  }
  return nc_normal_order(permuted, ctx) - nc_normal_order(identity, ctx);
}

InvariantI2 invariant_I2(const NCContext& ctx) {
  const int n = ctx.dim;
  const int order = ctx.order;
  RealizedFrame fr = build_frame(RealizationSpec::maggiore(), ctx.params, order);
  // g = 1/(f - B gamma2); gamma2 vanishes here so g = 1/f
  WeylOp g_op = weyl_geometric_inverse(fr.f_op);

  // X_mu written in the deformed generators through the inverse map:
  // X_mu = (xhat_mu - i (a xhat) g(B) D_mu) Z
  std::vector<NCOp> X;
  for (int mu = 0; mu < n; ++mu) {
    NCOp t = NCOp::xhat(mu, n, order);
    for (int alpha = 0; alpha < n; ++alpha) {
      if (ctx.params.a[alpha].is_zero()) continue;
      NCOp piece = nc_mul_d(nc_mul_series(NCOp::xhat(alpha, n, order), g_op), mu);
      t -= piece.scaled(
          XSeries::graded(order, 1, CRational(Rational(0), raised_a(ctx.params, alpha))));
    }
    X.push_back(nc_mul_series(t, ctx.Z));
  }

  NCOp xx = NCOp::zero(n, order);
  for (int mu = 0; mu < n; ++mu)
    xx += nc_mul(X[mu], X[mu], ctx).scaled(
        XSeries::constant(order, CRational(Rational(metric_sign(mu)))));
  InvariantI2 out{circ_project(xx), NCOp::zero(n, order), {}};

  // closed form: xhat.xhat o 1 - i (n-1) a.xhat o 1
  NCOp hat2 = NCOp::zero(n, order);
  for (int mu = 0; mu < n; ++mu) {
    NCOp sq = nc_mul_xhat(NCOp::xhat(mu, n, order), mu, ctx);
    hat2 += sq.scaled(XSeries::constant(order, CRational(Rational(metric_sign(mu)))));
    hat2 -= NCOp::xhat(mu, n, order)
                .scaled(XSeries::graded(
                    order, 1,
                    CRational(Rational(0), Rational(n - 1) * raised_a(ctx.params, mu))));
  }
  out.closed_form = circ_project(hat2);

  // Lorentz defect: lift the projected invariant, hit it with
  // M = (xhat_mu D_nu - xhat_nu D_mu) Z from the left, reorder, project.
  out.lorentz_defect.assign(n, std::vector<NCOp>(n, NCOp::zero(n, order)));
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      NCOp M = nc_mul_series(nc_mul_d(NCOp::xhat(mu, n, order), nu), ctx.Z) -
               nc_mul_series(nc_mul_d(NCOp::xhat(nu, n, order), mu), ctx.Z);
      out.lorentz_defect[mu][nu] = circ_project(nc_mul(M, out.value, ctx));
    }
  return out;
}

WeylOp realize_word(const NCWord& word, const RealizedFrame& frame) {
  WeylOp acc = WeylOp::one(frame.dim, frame.order);
  for (const auto& f : word) {
    if (std::holds_alternative<FXhat>(f))
      acc = weyl_mul(acc, frame.xhat[std::get<FXhat>(f).mu]);
    else if (std::holds_alternative<FD>(f))
      acc = weyl_mul(acc, WeylOp::d(std::get<FD>(f).mu, frame.dim, frame.order));
    else
      acc = weyl_mul(acc, std::get<FSeriesD>(f).op);
  }
  return acc;
}

WeylOp realize_nc(const NCOp& op, const RealizedFrame& frame) {
  WeylOp out = WeylOp::zero(frame.dim, frame.order);
  for (const auto& [k, c] : op.terms()) {
    WeylOp piece = WeylOp::one(frame.dim, frame.order);
    for (int mu = 0; mu < frame.dim; ++mu)
      for (int e = 0; e < mono::get(key_x(k), mu); ++e)
        piece = weyl_mul(piece, frame.xhat[mu]);
    for (int mu = 0; mu < frame.dim; ++mu)
      for (int e = 0; e < mono::get(key_d(k), mu); ++e)
        piece = weyl_mul(piece, WeylOp::d(mu, frame.dim, frame.order));
    out += piece.scaled(c);
  }
  return out;
}

std::string NCOp::str() const {
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
    os << "] " << mono::to_string(key_x(k), dim_, "x") << mono::to_string(key_d(k), dim_, "D");
  }
  return os.str();
}

}  // namespace ksny
