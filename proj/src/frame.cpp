#include "ksny/frame.hpp"

#include <sstream>

namespace ksny {

QSeries gamma2_taylor(const RealizationSpec& spec, int deg) {
  const int pad = deg + 2;
  const auto fc = spec.f_taylor(pad);
  QSeries f(pad), fp(pad);
  for (int m = 0; m <= pad; ++m) f[m] = fc[m];
  for (int m = 0; m < pad; ++m) fp[m] = Rational(m + 1) * fc[m + 1];
  QSeries num = QSeries::one(pad) + (f * fp).scaled(Rational(2));
  QSeries den = f - (QSeries::graded(pad, 1, Rational(1)) * fp).scaled(Rational(2));
  QSeries g = -(num * den.reciprocal());
  QSeries out(deg);
  for (int m = 0; m <= deg; ++m) out[m] = g[m];
  return out;
}

double gamma2_at(const RealizationSpec& spec, double B) {
  switch (spec.kind) {
    case RealizationSpec::Kind::Maggiore:
      return 0.0;
    case RealizationSpec::Kind::Unit:
      return -1.0;
    default: {
      const double f = spec.f_at(B);
      const double fp = spec.fprime_at(B);
      return -(1.0 + 2.0 * f * fp) / (f - 2.0 * B * fp);
    }
  }
}

namespace {

Rational raised(const DeformParams& p, int mu) {
  return mu == 0 ? -p.a[mu] : p.a[mu];
}

WeylOp make_A(const DeformParams& p, int order) {
  const int dim = p.dim();
  WeylOp op(dim, order);
  for (int mu = 0; mu < dim; ++mu) {
    if (p.a[mu].is_zero()) continue;
    op.add_term(0, mono::unit(mu),
                XSeries::graded(order, 1, CRational(Rational(0), raised(p, mu))));
  }
  return op;
}

WeylOp make_D2(int dim, int order) {
  WeylOp op(dim, order);
  for (int mu = 0; mu < dim; ++mu)
    op.add_term(0, mono::set(0, mu, 2),
                XSeries::constant(order, CRational(Rational(metric_sign(mu)))));
  return op;
}

std::vector<Rational> taylor_coeffs(const QSeries& s) {
  std::vector<Rational> c(s.order() + 1);
  for (int m = 0; m <= s.order(); ++m) c[m] = s[m];
  return c;
}

}  // namespace

WeylOp RealizedFrame::phi_matrix_op(int mu, int nu) const {
  WeylOp r = WeylOp::zero(dim, order);
  if (mu == nu) r += phi.scaled(CRational(Rational(metric_sign(mu))));
  if (!params.a[mu].is_zero()) {
    WeylOp dnu = WeylOp::d(nu, dim, order);
    r += dnu.scaled(XSeries::graded(order, 1, CRational(Rational(0), params.a[mu])));
  }
  WeylOp dd = weyl_mul(WeylOp::d(mu, dim, order), WeylOp::d(nu, dim, order));
  r += weyl_mul(dd, gamma2_op)
           .scaled(XSeries::graded(order, 2, CRational(-params.a2ms())));
  return r;
}

RealizedFrame build_frame(const RealizationSpec& spec, const DeformParams& params,
                          int order) {
  const int dim = params.dim();
  RealizedFrame fr{spec,
                   params,
                   dim,
                   order,
                   WeylOp::zero(dim, order),
                   WeylOp::zero(dim, order),
                   WeylOp::zero(dim, order),
                   WeylOp::zero(dim, order),
                   WeylOp::zero(dim, order),
                   WeylOp::zero(dim, order),
                   WeylOp::zero(dim, order),
                   {},
                   {},
                   WeylOp::zero(dim, order),
                   {},
                   {},
                   std::nullopt,
                   std::nullopt};

  fr.op_A = make_A(params, order);
  fr.op_D2 = make_D2(dim, order);
  fr.op_B = fr.op_D2.scaled(XSeries::graded(order, 2, CRational(params.a2ms())));
  fr.f_op = weyl_apply_taylor(spec.f_taylor(order), fr.op_B);
  fr.gamma2_op = weyl_apply_taylor(taylor_coeffs(gamma2_taylor(spec, order)), fr.op_B);
  fr.phi = fr.f_op - fr.op_A;
  fr.phi_inv = weyl_geometric_inverse(fr.phi);

  // xhat_mu = X_mu (-A + f(B)) + i (aX) D_mu - (a^2-s) (XD) D_mu gamma2
  WeylOp xd = WeylOp::zero(dim, order);
  for (int alpha = 0; alpha < dim; ++alpha)
    xd += weyl_mul(WeylOp::x(alpha, dim, order), WeylOp::d(alpha, dim, order))
              .scaled(CRational(Rational(metric_sign(alpha))));
  for (int mu = 0; mu < dim; ++mu) {
    WeylOp op = weyl_mul(WeylOp::x(mu, dim, order), fr.phi);
    for (int alpha = 0; alpha < dim; ++alpha) {
      if (params.a[alpha].is_zero()) continue;
      WeylOp xadm = weyl_mul(WeylOp::x(alpha, dim, order), WeylOp::d(mu, dim, order));
      op += xadm.scaled(XSeries::graded(order, 1, CRational(Rational(0), raised(params, alpha))));
    }
    op += weyl_mul(weyl_mul(xd, WeylOp::d(mu, dim, order)), fr.gamma2_op)
              .scaled(XSeries::graded(order, 2, CRational(-params.a2ms())));
    fr.xhat.push_back(op);
  }

  fr.M.assign(dim, std::vector<WeylOp>(dim, WeylOp::zero(dim, order)));
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = 0; nu < dim; ++nu)
      fr.M[mu][nu] = weyl_mul(WeylOp::x(mu, dim, order), WeylOp::d(nu, dim, order)) -
                     weyl_mul(WeylOp::x(nu, dim, order), WeylOp::d(mu, dim, order));

  if (spec.is_maggiore()) {
    fr.Zinv = fr.phi;
    fr.Z = fr.phi_inv;
  }

  // box = sum_m h_m/(m+1) (a^2-s)^m (D.D)^{m+1} at grade 2m, where h is the
  // Taylor expansion of 1/(f - t gamma2); the 1/(a^2-s) prefactor cancels one
  // power of B termwise so the s = a^2 point is regular.
  {
    const int mdeg = order / 2 + 1;
    const auto fc = spec.f_taylor(mdeg + 2);
    QSeries f(mdeg + 2);
    for (int m = 0; m <= mdeg + 2; ++m) f[m] = fc[m];
    QSeries g2 = gamma2_taylor(spec, mdeg + 1);
    QSeries tg2(mdeg + 2);
    for (int m = 0; m <= mdeg + 1; ++m) tg2[m + 1] = g2[m];
    QSeries h = (f - tg2).reciprocal();
    WeylOp box = WeylOp::zero(dim, order);
    WeylOp d2pow = fr.op_D2;
    Rational a2ms_pow(1);
    for (int m = 0; 2 * m <= order; ++m) {
      Rational c = h[m] / Rational(m + 1) * a2ms_pow;
      if (!c.is_zero())
        box += d2pow.scaled(XSeries::graded(order, 2 * m, CRational(c)));
      d2pow = weyl_mul(d2pow, fr.op_D2);
      if (d2pow.is_zero()) break;
      a2ms_pow = a2ms_pow * params.a2ms();
    }
    fr.box = box;
  }

  // Inverse map: X_mu = [xhat_mu - i (a xhat) g D_mu
  //                      + (a^2-s) (xhat D) g D_mu gamma2] / (-A + f(B)),
  // with g = 1/(f - B gamma2), evaluated on the realized coordinates.
  {
    WeylOp g_op = weyl_geometric_inverse(fr.f_op - weyl_mul(fr.op_B, fr.gamma2_op));
    WeylOp axhat = WeylOp::zero(dim, order);
    WeylOp xhatd = WeylOp::zero(dim, order);
    for (int alpha = 0; alpha < dim; ++alpha) {
      if (!params.a[alpha].is_zero())
        axhat += fr.xhat[alpha].scaled(
            XSeries::graded(order, 1, CRational(raised(params, alpha))));
      xhatd += weyl_mul(fr.xhat[alpha], WeylOp::d(alpha, dim, order))
                   .scaled(CRational(Rational(metric_sign(alpha))));
    }
    for (int mu = 0; mu < dim; ++mu) {
      WeylOp inner = fr.xhat[mu];
      inner += weyl_mul(weyl_mul(axhat, g_op), WeylOp::d(mu, dim, order))
                   .scaled(CRational(Rational(0), Rational(-1)));
      inner += weyl_mul(weyl_mul(weyl_mul(xhatd, g_op), WeylOp::d(mu, dim, order)),
                        fr.gamma2_op)
                   .scaled(XSeries::graded(order, 2, CRational(params.a2ms())));
      fr.xinv.push_back(weyl_mul(inner, fr.phi_inv));
    }
  }

  // Snyder map: xtilde_mu = xhat_mu - i a^alpha M_{alpha mu}
  for (int mu = 0; mu < dim; ++mu) {
    WeylOp op = fr.xhat[mu];
    for (int alpha = 0; alpha < dim; ++alpha) {
      if (params.a[alpha].is_zero()) continue;
      op += fr.M[alpha][mu].scaled(
          XSeries::graded(order, 1, CRational(Rational(0), -raised(params, alpha))));
    }
    fr.xtilde.push_back(op);
  }

  return fr;
}

std::vector<std::vector<WeylOp>> build_M(const RealizedFrame& fr, MMode mode) {
  if (mode == MMode::Coordinate) return fr.M;
  const int dim = fr.dim;
  std::vector<std::vector<WeylOp>> M(dim,
                                     std::vector<WeylOp>(dim, WeylOp::zero(dim, fr.order)));
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = 0; nu < dim; ++nu) {
      WeylOp core = weyl_mul(fr.xhat[mu], WeylOp::d(nu, dim, fr.order)) -
                    weyl_mul(fr.xhat[nu], WeylOp::d(mu, dim, fr.order));
      M[mu][nu] = weyl_mul(core, fr.phi_inv);
    }
  return M;
}

std::pair<WeylOp, WeylOp> build_Z(const RealizedFrame& fr) {
  if (!fr.spec.is_maggiore())
    throw std::domain_error("build_Z: shift operator exists only for the maggiore spec");
  return {*fr.Z, *fr.Zinv};
}

namespace {

struct Verifier {
  const RealizedFrame& fr;
  std::vector<IdentityCheck> checks;

  void record(const std::string& indices, const WeylOp& residual, std::string& first_bad) {
    if (!residual.is_zero() && first_bad.empty())
      first_bad = indices + ": " + residual.str();
  }

  void push(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
  }

  XSeries grade1(const Rational& v) const {
    return XSeries::graded(fr.order, 1, CRational(v));
  }
  XSeries grade1i(const Rational& v) const {
    return XSeries::graded(fr.order, 1, CRational(Rational(0), v));
  }
  XSeries grade2(const Rational& v) const {
    return XSeries::graded(fr.order, 2, CRational(v));
  }
};

}  // namespace

std::vector<IdentityCheck> verify_algebra(const RealizedFrame& fr) {
  const int n = fr.dim;
  const int order = fr.order;
  const auto& a = fr.params.a;
  const Rational s = fr.params.s;
  Verifier v{fr, {}};

  auto D = [&](int mu) { return WeylOp::d(mu, n, order); };
  auto eta = [](int mu, int nu) { return mu == nu ? metric_sign(mu) : 0; };

  // [xhat_mu, xhat_nu] = i (a_mu xhat_nu - a_nu xhat_mu) + s M_{mu nu}
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        WeylOp r = weyl_commutator(fr.xhat[mu], fr.xhat[nu]);
        r -= fr.xhat[nu].scaled(v.grade1i(a[mu]));
        r += fr.xhat[mu].scaled(v.grade1i(a[nu]));
        r -= fr.M[mu][nu].scaled(v.grade2(s));
        if (!r.is_zero()) ok = false;
        v.record("(" + std::to_string(mu) + "," + std::to_string(nu) + ")", r, bad);
      }
    v.push("coordinate-commutator", ok, bad);
  }

  // [M, M] closes on the undeformed Lorentz algebra
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        for (int la = 0; la < n; ++la)
          for (int rho = 0; rho < n; ++rho) {
            WeylOp r = weyl_commutator(fr.M[mu][nu], fr.M[la][rho]);
            auto add = [&](int sign, int e, const WeylOp& m) {
              if (e != 0) r -= m.scaled(CRational(Rational(sign * e)));
            };
            add(1, eta(nu, la), fr.M[mu][rho]);
            add(-1, eta(mu, la), fr.M[nu][rho]);
            add(-1, eta(nu, rho), fr.M[mu][la]);
            add(1, eta(mu, rho), fr.M[nu][la]);
            if (!r.is_zero()) ok = false;
            v.record("(" + std::to_string(mu) + std::to_string(nu) + "," +
                             std::to_string(la) + std::to_string(rho) + ")",
                     r, bad);
          }
    v.push("lorentz-lorentz", ok, bad);
  }

  // [M_{mu nu}, xhat_la] = xhat_mu eta_{nu la} - xhat_nu eta_{mu la}
  //                        - i (a_mu M_{nu la} - a_nu M_{mu la})
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        for (int la = 0; la < n; ++la) {
          WeylOp r = weyl_commutator(fr.M[mu][nu], fr.xhat[la]);
          if (eta(nu, la) != 0) r -= fr.xhat[mu].scaled(CRational(Rational(eta(nu, la))));
          if (eta(mu, la) != 0) r += fr.xhat[nu].scaled(CRational(Rational(eta(mu, la))));
          r += fr.M[nu][la].scaled(v.grade1i(a[mu]));
          r -= fr.M[mu][la].scaled(v.grade1i(a[nu]));
          if (!r.is_zero()) ok = false;
          v.record("(" + std::to_string(mu) + std::to_string(nu) + "," +
                           std::to_string(la) + ")",
                   r, bad);
        }
    v.push("lorentz-coordinate", ok, bad);
  }

  // [D_mu, D_nu] = 0 and [M_{mu nu}, D_la] = eta_{nu la} D_mu - eta_{mu la} D_nu
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        WeylOp r = weyl_commutator(D(mu), D(nu));
        if (!r.is_zero()) ok = false;
        v.record("(" + std::to_string(mu) + "," + std::to_string(nu) + ")", r, bad);
      }
    v.push("translation-translation", ok, bad);

    bad.clear();
    ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        for (int la = 0; la < n; ++la) {
          WeylOp r = weyl_commutator(fr.M[mu][nu], D(la));
          if (eta(nu, la) != 0) r -= D(mu).scaled(CRational(Rational(eta(nu, la))));
          if (eta(mu, la) != 0) r += D(nu).scaled(CRational(Rational(eta(mu, la))));
          if (!r.is_zero()) ok = false;
          v.record("(" + std::to_string(mu) + std::to_string(nu) + "," +
                           std::to_string(la) + ")",
                   r, bad);
        }
    v.push("lorentz-translation", ok, bad);
  }

  // [D_mu, xhat_nu] = Phi_{mu nu}(D)
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        WeylOp r = weyl_commutator(D(mu), fr.xhat[nu]) - fr.phi_matrix_op(mu, nu);
        if (!r.is_zero()) ok = false;
        v.record("(" + std::to_string(mu) + "," + std::to_string(nu) + ")", r, bad);
      }
    v.push("deformed-heisenberg", ok, bad);
  }

  // [[xhat_mu, xhat_nu], xhat_la] = a_la (a_mu xhat_nu - a_nu xhat_mu)
  //                                 + s (xhat_mu eta_{nu la} - xhat_nu eta_{mu la})
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        WeylOp inner = weyl_commutator(fr.xhat[mu], fr.xhat[nu]);
        for (int la = 0; la < n; ++la) {
          WeylOp r = weyl_commutator(inner, fr.xhat[la]);
          r -= fr.xhat[nu].scaled(XSeries::graded(order, 2, CRational(a[la] * a[mu])));
          r += fr.xhat[mu].scaled(XSeries::graded(order, 2, CRational(a[la] * a[nu])));
          if (eta(nu, la) != 0)
            r -= fr.xhat[mu].scaled(v.grade2(s * Rational(eta(nu, la))));
          if (eta(mu, la) != 0)
            r += fr.xhat[nu].scaled(v.grade2(s * Rational(eta(mu, la))));
          if (!r.is_zero()) ok = false;
          v.record("(" + std::to_string(mu) + std::to_string(nu) + "," +
                           std::to_string(la) + ")",
                   r, bad);
        }
      }
    v.push("trilinear", ok, bad);
  }

  // Jacobi identity over all unordered triples drawn from {xhat, M, D}
  {
    std::vector<WeylOp> gens;
    std::vector<std::string> labels;
    for (int mu = 0; mu < n; ++mu) {
      gens.push_back(fr.xhat[mu]);
      labels.push_back("x" + std::to_string(mu));
      gens.push_back(D(mu));
      labels.push_back("d" + std::to_string(mu));
    }
    for (int mu = 0; mu < n; ++mu)
      for (int nu = mu + 1; nu < n; ++nu) {
        gens.push_back(fr.M[mu][nu]);
        labels.push_back("m" + std::to_string(mu) + std::to_string(nu));
      }
    std::string bad;
    bool ok = true;
    const int g = static_cast<int>(gens.size());
    for (int i = 0; i < g; ++i)
      for (int j = i; j < g; ++j)
        for (int k = j; k < g; ++k) {
          WeylOp r = weyl_commutator(weyl_commutator(gens[i], gens[j]), gens[k]);
          r += weyl_commutator(weyl_commutator(gens[j], gens[k]), gens[i]);
          r += weyl_commutator(weyl_commutator(gens[k], gens[i]), gens[j]);
          if (!r.is_zero()) ok = false;
          v.record("(" + labels[i] + "," + labels[j] + "," + labels[k] + ")", r, bad);
        }
    v.push("jacobi", ok, bad);
  }

  // d'Alembertian: [box, xhat_mu] = 2 D_mu and [M, box] = 0
  {
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu) {
      WeylOp r = weyl_commutator(fr.box, fr.xhat[mu]) - D(mu).scaled(CRational(Rational(2)));
      if (!r.is_zero()) ok = false;
      v.record("(" + std::to_string(mu) + ")", r, bad);
    }
    v.push("dalembertian-coordinate", ok, bad);

    bad.clear();
    ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        WeylOp r = weyl_commutator(fr.M[mu][nu], fr.box);
        if (!r.is_zero()) ok = false;
        v.record("(" + std::to_string(mu) + "," + std::to_string(nu) + ")", r, bad);
      }
    v.push("dalembertian-lorentz", ok, bad);
  }

  // Shift-operator relations, maggiore only:
  //   [Z^{-1}, xhat_mu] = -i a_mu Z^{-1} + s D_mu
  //   [Z, xhat_mu]      =  i a_mu Z - s D_mu Z^2
  //   xhat_mu Z xhat_nu symmetric, [Z, D_mu] = 0
  //   [Z^{-1}, M_{mu nu}] = -i (a_mu D_nu - a_nu D_mu)
  if (fr.spec.is_maggiore()) {
    const WeylOp& Z = *fr.Z;
    const WeylOp& Zinv = *fr.Zinv;
    std::string bad;
    bool ok = true;
    for (int mu = 0; mu < n; ++mu) {
      WeylOp r = weyl_commutator(Zinv, fr.xhat[mu]);
      r += Zinv.scaled(v.grade1i(a[mu]));
      r -= D(mu).scaled(v.grade2(s));
      if (!r.is_zero()) ok = false;
      v.record("inv(" + std::to_string(mu) + ")", r, bad);

      WeylOp z2 = weyl_mul(Z, Z);
      WeylOp r2 = weyl_commutator(Z, fr.xhat[mu]);
      r2 -= Z.scaled(v.grade1i(a[mu]));
      r2 += weyl_mul(D(mu), z2).scaled(v.grade2(s));
      if (!r2.is_zero()) ok = false;
      v.record("dir(" + std::to_string(mu) + ")", r2, bad);
    }
    v.push("shift-coordinate", ok, bad);

    bad.clear();
    ok = true;
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = 0; nu < n; ++nu) {
        WeylOp r = weyl_mul(weyl_mul(fr.xhat[mu], Z), fr.xhat[nu]) -
                   weyl_mul(weyl_mul(fr.xhat[nu], Z), fr.xhat[mu]);
        if (!r.is_zero()) ok = false;
        v.record("sym(" + std::to_string(mu) + "," + std::to_string(nu) + ")", r, bad);
      }
      WeylOp rd = weyl_commutator(Z, D(mu));
      if (!rd.is_zero()) ok = false;
      v.record("zd(" + std::to_string(mu) + ")", rd, bad);
    }
    v.push("shift-symmetric", ok, bad);

    bad.clear();
    ok = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        WeylOp r = weyl_commutator(Zinv, fr.M[mu][nu]);
        r += D(nu).scaled(v.grade1i(a[mu]));
        r -= D(mu).scaled(v.grade1i(a[nu]));
        if (!r.is_zero()) ok = false;
        v.record("(" + std::to_string(mu) + "," + std::to_string(nu) + ")", r, bad);
      }
    v.push("shift-lorentz", ok, bad);

    bad.clear();
    ok = weyl_mul(Z, Zinv) == WeylOp::one(n, order);
    v.push("shift-inverse", ok, ok ? "" : weyl_mul(Z, Zinv).str());
  }

  return v.checks;
}

}  // namespace ksny
