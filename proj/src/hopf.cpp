#include "ksny/hopf.hpp"

namespace ksny {

PlaneWave star_plane_waves(const RealizationSpec& spec, const DeformParams& params,
                           const PlaneWave& f, const PlaneWave& g,
                           const NewtonOptions& opts, int steps) {
  ComposeResult r = compose(spec, params, f.momentum, g.momentum, opts, steps);
  return {r.value, f.amplitude * g.amplitude};
}

namespace {

/// One term of the bidifferential correction operator: coefficient times a
/// multiplication monomial in X times derivative monomials acting on the two
/// polynomial slots.
struct BiTerm {
  XSeries coeff;
  std::uint32_t xmult;
  std::uint32_t yd;
  std::uint32_t zd;
};

Rational raised_a(const DeformParams& p, int mu) {
  return mu == 0 ? -p.a[mu] : p.a[mu];
}

/// Correction terms of the second-order composition law with every momentum
/// factor replaced by -i times a slot derivative, contracted with i X. The
/// grade-1 part of the exponent ends up imaginary, the grade-2 part real.
std::vector<BiTerm> correction_terms(const Rational& u, const DeformParams& p, int order) {
  const int n = p.dim();
  const Rational a2 = p.a_sq();
  const Rational a2ms = p.a2ms();
  std::vector<BiTerm> out;
  auto push = [&](int grade, const CRational& c, std::uint32_t xm, std::uint32_t yd,
                  std::uint32_t zd) {
    if (c.is_zero()) return;
    out.push_back({XSeries::graded(order, grade, c), xm, yd, zd});
  };
  const Rational half(1, 2);
  for (int mu = 0; mu < n; ++mu) {
    const Rational em(metric_sign(mu));
    const std::uint32_t xm = mono::unit(mu);
    for (int nu = 0; nu < n; ++nu) {
      const Rational en(metric_sign(nu));
      // grade 1, two slot derivatives, net factor -i:
      //   (aq) k_mu : a^nu D_Z^nu x D_Y^mu
      push(1, CRational(Rational(0), -(em * raised_a(p, nu))), xm, mono::unit(mu),
           mono::unit(nu));
      //   -(kq) a_mu
      push(1, CRational(Rational(0), em * p.a[mu] * en), xm, mono::unit(nu),
           mono::unit(nu));
      // grade 2, three slot derivatives, net factor -1:
      //   -(1-2u)(a^2-s) q_mu (kq)
      push(2, CRational(em * (Rational(1) - Rational(2) * u) * a2ms * en), xm,
           mono::unit(nu), mono::inc(mono::unit(mu), nu));
      //   -(1-2u)(a^2-s)/2 q_mu k^2
      push(2, CRational(em * half * (Rational(1) - Rational(2) * u) * a2ms * en), xm,
           mono::set(0, nu, 2), mono::unit(mu));
      //   u (a^2-s) k_mu q^2
      push(2, CRational(-(em * u * a2ms * en)), xm, mono::unit(mu), mono::set(0, nu, 2));
      //   -(a^2/2) k_mu (kq) - (1-4u)(a^2-s)/2 k_mu (kq)
      push(2,
           CRational(em * half * en * (a2 + (Rational(1) - Rational(4) * u) * a2ms)),
           xm, mono::inc(mono::unit(mu), nu), mono::unit(nu));
      for (int rho = 0; rho < n; ++rho) {
        const Rational er(metric_sign(rho));
        //   a_mu (ak)(kq) : a^nu D_Y^nu . D_Y^rho D_Z^rho
        push(2, CRational(-(em * p.a[mu] * raised_a(p, nu) * er)), xm,
             mono::inc(mono::unit(nu), rho), mono::unit(rho));
        //   -a_mu (aq) k^2 / 2
        push(2, CRational(em * half * p.a[mu] * raised_a(p, nu) * er), xm,
             mono::set(0, rho, 2), mono::unit(nu));
      }
    }
  }
  return out;
}

}  // namespace

PolyField star_poly(const PolyField& f, const PolyField& g, const Rational& u,
                    const DeformParams& params) {
  if (f.dim() != g.dim() || f.order() != g.order())
    throw std::invalid_argument("star_poly: operand mismatch");
  const int n = f.dim();
  const int order = f.order();
  if (order > 2)
    throw std::invalid_argument(
        "star_poly: the closed correction data stops at grade 2; lower the order");
  if (2 * n > mono::kMaxDim)
    throw std::invalid_argument("star_poly: dimension too large for the two-slot stage");

  // two-slot tensor product: slot Y on coordinates [0,n), slot Z on [n,2n)
  PolyField fg(2 * n, order);
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      std::uint32_t m = mf;
      for (int mu = 0; mu < n; ++mu) m = mono::set(m, n + mu, mono::get(mg, mu));
      fg.add_term(m, cf * cg);
    }

  // exponential of the correction operator through grade 2
  std::vector<BiTerm> lin = correction_terms(u, params, order);
  std::vector<BiTerm> expo = lin;
  const Rational half(1, 2);
  for (const auto& t1 : lin)
    for (const auto& t2 : lin) {
      XSeries c = (t1.coeff * t2.coeff).scaled(CRational(half));
      if (c.is_zero()) continue;
      expo.push_back({c, mono::add(t1.xmult, t2.xmult, n),
                      mono::add(t1.yd, t2.yd, n), mono::add(t1.zd, t2.zd, n)});
    }

  PolyField limit(n, order);
  auto apply_into = [&](const XSeries& coeff, std::uint32_t xmult, std::uint32_t yd,
                        std::uint32_t zd) {
    for (const auto& [m, c] : fg.terms()) {
      long long factor = 1;
      bool kills = false;
      std::uint32_t rest = m;
      for (int mu = 0; mu < 2 * n && !kills; ++mu) {
        const int want = mu < n ? mono::get(yd, mu) : mono::get(zd, mu - n);
        if (want == 0) continue;
        const int have = mono::get(m, mu);
        if (want > have) {
          kills = true;
          break;
        }
        for (int t = 0; t < want; ++t) factor *= (have - t);
        if (want % 2 == 1) factor *= metric_sign(mu < n ? mu : mu - n);
        rest = mono::inc(rest, mu, -want);
      }
      if (kills) continue;
      // merge both slots back onto X and append the multiplication monomial
      std::uint32_t mx = xmult;
      for (int mu = 0; mu < n; ++mu)
        mx = mono::inc(mx, mu, mono::get(rest, mu) + mono::get(rest, n + mu));
      limit.add_term(mx, (coeff * c).scaled(CRational(Rational(factor))));
    }
  };

  apply_into(XSeries::one(order), 0, 0, 0);
  for (const auto& t : expo) apply_into(t.coeff, t.xmult, t.yd, t.zd);
  return limit;
}

MinkVec associator_defect(const RealizationSpec& spec, const DeformParams& params,
                          const MinkVec& p, const MinkVec& k, const MinkVec& q,
                          const NewtonOptions& opts, int steps) {
  MinkVec inner_r = compose(spec, params, k, q, opts, steps).value;
  MinkVec right = compose(spec, params, p, inner_r, opts, steps).value;
  MinkVec inner_l = compose(spec, params, p, k, opts, steps).value;
  MinkVec left = compose(spec, params, inner_l, q, opts, steps).value;
  return right - left;
}

BracketTree BracketTree::leaf(int index) {
  BracketTree t;
  t.impl_ = std::make_shared<Node>(Node{index, nullptr, nullptr});
  return t;
}

BracketTree BracketTree::node(BracketTree l, BracketTree r) {
  BracketTree t;
  t.impl_ = std::make_shared<Node>(
      Node{-1, std::make_shared<BracketTree>(std::move(l)),
           std::make_shared<BracketTree>(std::move(r))});
  return t;
}

BracketTree BracketTree::right_comb(int count) {
  if (count < 1) throw std::invalid_argument("BracketTree: need at least one momentum");
  BracketTree t = leaf(count - 1);
  for (int i = count - 2; i >= 0; --i) t = node(leaf(i), std::move(t));
  return t;
}

BracketTree BracketTree::left_comb(int count) {
  if (count < 1) throw std::invalid_argument("BracketTree: need at least one momentum");
  BracketTree t = leaf(0);
  for (int i = 1; i < count; ++i) t = node(std::move(t), leaf(i));
  return t;
}

MinkVec compose_nested(const RealizationSpec& spec, const DeformParams& params,
                       const std::vector<MinkVec>& momenta, const BracketTree& tree,
                       const NewtonOptions& opts, int steps) {
  if (momenta.size() < 2) throw std::invalid_argument("compose_nested: need two momenta");
  if (tree.is_leaf()) {
    const int i = tree.index();
    if (i < 0 || i >= static_cast<int>(momenta.size()))
      throw std::invalid_argument("compose_nested: leaf index out of range");
    return momenta[i];
  }
  MinkVec l = compose_nested(spec, params, momenta, tree.left(), opts, steps);
  MinkVec r = compose_nested(spec, params, momenta, tree.right(), opts, steps);
  return compose(spec, params, l, r, opts, steps).value;
}

namespace {

double leibniz_defect_printed(const DeformParams& params, const MinkVec& k,
                              const MinkVec& q, int mu, int nu,
                              const NewtonOptions& opts) {
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const MinkVec D0 = compose(RealizationSpec::maggiore(), params, k, q, opts).value;
  ComposeJacobians J = compose_jacobians(params, k, q, opts);

  // deformed left-leg factor (k^lam - a^lam box(k)/2) Z(k), common to both
  // correction terms; the overall factor i of every term is divided out
  const double zk = 1.0 / zinv_of_k(params, k);
  const double boxk = box_of_k(params, k);
  MinkVec g(n);
  for (int lam = 0; lam < n; ++lam)
    g[lam] = (metric_sign(lam) * k[lam] - 0.5 * metric_sign(lam) * a[lam] * boxk) * zk;

  double norm2 = 0.0;
  for (int al = 0; al < n; ++al) {
    const double lhs = D0[nu] * (mu == al ? metric_sign(mu) : 0.0) -
                       D0[mu] * (nu == al ? metric_sign(nu) : 0.0);
    double rhs = 0.0;
    // undeformed legs
    rhs += metric_sign(mu) * k[nu] * J.Jk[al][mu] - metric_sign(nu) * k[mu] * J.Jk[al][nu];
    rhs += metric_sign(mu) * q[nu] * J.Jq[al][mu] - metric_sign(nu) * q[mu] * J.Jq[al][nu];
    // deformed legs: -a_mu g^lam (q_nu eta_{lam be} - q_lam eta_{nu be}) dD/dq_be
    //                +a_nu g^lam (q_mu eta_{lam be} - q_lam eta_{mu be}) dD/dq_be
    for (int lam = 0; lam < n; ++lam) {
      rhs -= a[mu] * g[lam] *
             (q[nu] * metric_sign(lam) * J.Jq[al][lam] -
              q[lam] * metric_sign(nu) * J.Jq[al][nu]);
      rhs += a[nu] * g[lam] *
             (q[mu] * metric_sign(lam) * J.Jq[al][lam] -
              q[lam] * metric_sign(mu) * J.Jq[al][mu]);
    }
    norm2 += (lhs - rhs) * (lhs - rhs);
  }
  return std::sqrt(norm2);
}

/// Conjugates the generator through exp(i kappa.xhat) by integrating the
/// adjoint flow, which closes linearly on span{xhat_al, M_{al<be}} with
/// constant coefficients. Returns the complex coordinates of the transported
/// generator in that basis (xhat first, then M pairs in lexicographic order).
std::vector<std::complex<double>> adjoint_transport(const DeformParams& params,
                                                    const MinkVec& kappa, int mu, int nu,
                                                    int steps) {
  const int n = kappa.dim();
  const MinkVec a = params.a_dbl();
  const double s = params.s_dbl();
  const int npair = n * (n - 1) / 2;
  const int dimv = n + npair;
  auto pair_index = [&](int al, int be) {
    // signed lookup: M_{al be} = sign * basis[M_{min,max}]
    int lo = std::min(al, be), hi = std::max(al, be);
    int idx = 0;
    for (int i = 0; i < lo; ++i) idx += n - 1 - i;
    idx += hi - lo - 1;
    return std::pair<int, double>(n + idx, al < be ? 1.0 : -1.0);
  };
  MinkVec ku(n);
  for (int i = 0; i < n; ++i) ku[i] = metric_sign(i) * kappa[i];
  const double akap = mink_dot(a, kappa);

  using C = std::complex<double>;
  const C I(0.0, 1.0);
  // generator matrix G: d y / dt = G y on basis coordinates
  std::vector<std::vector<C>> G(dimv, std::vector<C>(dimv, C(0.0)));
  // [xhat_al, i kappa.xhat] = (a kappa) xhat_al - a_al (kappa.xhat) + i s k^la M_{al la}
  for (int al = 0; al < n; ++al) {
    G[al][al] += akap;
    for (int la = 0; la < n; ++la) {
      G[la][al] -= a[al] * ku[la];
      if (la != al && s != 0.0) {
        auto [idx, sg] = pair_index(al, la);
        G[idx][al] += I * s * ku[la] * sg;
      }
    }
  }
  // [M_{al be}, i kappa.xhat] = i(kappa_be xhat_al - kappa_al xhat_be)
  //                             + k^la (a_al M_{be la} - a_be M_{al la})
  for (int al = 0; al < n; ++al)
    for (int be = al + 1; be < n; ++be) {
      auto [row, rsg] = pair_index(al, be);
      (void)rsg;
      G[al][row] += I * kappa[be];
      G[be][row] -= I * kappa[al];
      for (int la = 0; la < n; ++la) {
        if (la != be) {
          auto [idx, sg] = pair_index(be, la);
          G[idx][row] += a[al] * ku[la] * sg;
        }
        if (la != al) {
          auto [idx, sg] = pair_index(al, la);
          G[idx][row] -= a[be] * ku[la] * sg;
        }
      }
    }

  std::vector<C> y(dimv, C(0.0));
  {
    auto [idx, sg] = pair_index(mu, nu);
    y[idx] = sg;
  }
  auto deriv = [&](const std::vector<C>& v) {
    std::vector<C> d(dimv, C(0.0));
    for (int i = 0; i < dimv; ++i)
      for (int j = 0; j < dimv; ++j) d[i] += G[i][j] * v[j];
    return d;
  };
  const double h = 1.0 / steps;
  for (int it = 0; it < steps; ++it) {
    auto k1 = deriv(y);
    std::vector<C> t(dimv);
    for (int i = 0; i < dimv; ++i) t[i] = y[i] + 0.5 * h * k1[i];
    auto k2 = deriv(t);
    for (int i = 0; i < dimv; ++i) t[i] = y[i] + 0.5 * h * k2[i];
    auto k3 = deriv(t);
    for (int i = 0; i < dimv; ++i) t[i] = y[i] + h * k3[i];
    auto k4 = deriv(t);
    for (int i = 0; i < dimv; ++i)
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return y;
}

double leibniz_defect_transport(const DeformParams& params, const MinkVec& k,
                                const MinkVec& q, int mu, int nu,
                                const NewtonOptions& opts) {
  if (mu == nu) return 0.0;  // vanishing generator
  const int n = k.dim();
  using C = std::complex<double>;
  const C I(0.0, 1.0);
  MinkVec kappa = kvec_inverse(RealizationSpec::maggiore(), params, k, opts);
  const MinkVec D0 = compose(RealizationSpec::maggiore(), params, k, q, opts).value;
  ComposeJacobians J = compose_jacobians(params, k, q, opts);
  std::vector<C> y = adjoint_transport(params, kappa, mu, nu, 1200);

  // transported generator acting on the right wave: linear polynomial with
  // coefficients on the raised coordinate basis
  auto Phi = phi_matrix(RealizationSpec::maggiore(), params, q);
  std::vector<C> L(n, C(0.0));
  for (int ga = 0; ga < n; ++ga) {
    for (int al = 0; al < n; ++al) L[ga] += y[al] * Phi[ga][al];
    int idx = n;
    for (int al = 0; al < n; ++al)
      for (int be = al + 1; be < n; ++be, ++idx)
        L[ga] += y[idx] * I *
                 (q[be] * (al == ga ? metric_sign(al) : 0.0) -
                  q[al] * (be == ga ? metric_sign(be) : 0.0));
  }

  double norm2 = 0.0;
  for (int al = 0; al < n; ++al) {
    const C lhs = I * (D0[nu] * (mu == al ? metric_sign(mu) : 0.0) -
                       D0[mu] * (nu == al ? metric_sign(nu) : 0.0));
    C rhs(0.0);
    for (int ga = 0; ga < n; ++ga) rhs += L[ga] * J.Jq[al][ga];
    norm2 += std::norm(lhs - rhs);
  }
  return std::sqrt(norm2);
}

}  // namespace

double lorentz_leibniz_defect(const DeformParams& params, const MinkVec& k,
                              const MinkVec& q, int mu, int nu, LeibnizForm form,
                              const NewtonOptions& opts) {
  k.check_dim(q);
  if (mu < 0 || nu < 0 || mu >= k.dim() || nu >= k.dim())
    throw std::invalid_argument("lorentz_leibniz_defect: bad generator indices");
  if (form == LeibnizForm::PrintedKappa)
    return leibniz_defect_printed(params, k, q, mu, nu, opts);
  return leibniz_defect_transport(params, k, q, mu, nu, opts);
}

}  // namespace ksny
