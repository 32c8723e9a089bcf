#include "ksny/momentum.hpp"

#include <cmath>
#include <functional>

#include "ksny/frame.hpp"

namespace ksny {

namespace {

/// sinh(tW)/W, (cosh(tW)-1)/W^2 and cosh(tW) as even analytic functions of
/// w2 = W^2: hyperbolic branch for w2 > 0, trigonometric for w2 < 0, series
/// near the removable point.
struct WFuncs {
  double sinhc;
  double coshm;
  double cosh;
};

WFuncs w_functions(double w2, double t) {
  // The subtraction in (cosh(tW)-1)/W^2 cancels catastrophically for small
  // W^2, so the series window is wide: at the cut the series tail is below
  // 1e-17 while the closed form would already have lost five digits.
  constexpr double kSeriesCut = 1e-3;
  const double z = w2 * t * t;
  if (std::abs(z) < kSeriesCut) {
    return {t * (1.0 + z / 6.0 + z * z / 120.0 + z * z * z / 5040.0),
            t * t * (0.5 + z / 24.0 + z * z / 720.0 + z * z * z / 40320.0),
            1.0 + z / 2.0 + z * z / 24.0 + z * z * z / 720.0};
  }
  if (w2 > 0.0) {
    const double w = std::sqrt(w2);
    return {std::sinh(t * w) / w, (std::cosh(t * w) - 1.0) / w2, std::cosh(t * w)};
  }
  const double om = std::sqrt(-w2);
  return {std::sin(t * om) / om, (1.0 - std::cos(t * om)) / (-w2), std::cos(t * om)};
}

double w2_of(const DeformParams& p, const MinkVec& k) {
  const MinkVec a = p.a_dbl();
  const double ak = mink_dot(a, k);
  return ak * ak - p.s_dbl() * mink_sq(k);
}

double zinv_of(const DeformParams& p, const MinkVec& q) {
  const MinkVec a = p.a_dbl();
  const double arg = 1.0 + p.a2ms_dbl() * mink_sq(q);
  if (arg < 0.0)
    throw std::domain_error("momentum outside the deformation domain: 1+(a^2-s)q^2 < 0");
  return mink_dot(a, q) + std::sqrt(arg);
}

MinkVec axpy(const MinkVec& base, double c, const MinkVec& dir) {
  MinkVec r = base;
  for (int i = 0; i < r.dim(); ++i) r[i] += c * dir[i];
  return r;
}

using VecField = std::function<MinkVec(const MinkVec&)>;

MinkVec rk4_flow(const VecField& F, const MinkVec& q, int steps) {
  const double h = 1.0 / steps;
  MinkVec P = q;
  for (int i = 0; i < steps; ++i) {
    MinkVec k1 = F(P);
    MinkVec k2 = F(axpy(P, h / 2.0, k1));
    MinkVec k3 = F(axpy(P, h / 2.0, k2));
    MinkVec k4 = F(axpy(P, h, k3));
    for (int c = 0; c < P.dim(); ++c)
      P[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
  }
  return P;
}

/// Gaussian elimination with partial pivoting; a degenerate pivot is
/// reported, not regularized.
MinkVec solve_linear(std::vector<std::vector<double>> J, MinkVec rhs) {
  const int n = rhs.dim();
  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(J[i][j]));
  if (scale == 0.0) throw std::runtime_error("newton: degenerate (zero) Jacobian");
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(J[r][col]) > std::abs(J[piv][col])) piv = r;
    if (std::abs(J[piv][col]) < 1e-13 * scale)
      throw std::runtime_error("newton: degenerate Jacobian");
    std::swap(J[piv], J[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int r = col + 1; r < n; ++r) {
      const double m = J[r][col] / J[col][col];
      for (int j = col; j < n; ++j) J[r][j] -= m * J[col][j];
      rhs[r] -= m * rhs[col];
    }
  }
  MinkVec x(n);
  for (int i = n - 1; i >= 0; --i) {
    double acc = rhs[i];
    for (int j = i + 1; j < n; ++j) acc -= J[i][j] * x[j];
    x[i] = acc / J[i][i];
  }
  return x;
}

/// Newton iteration on F(x) = 0 with forward-difference Jacobian. After the
/// tolerance is met one more step is taken and kept if it improves the
/// residual, so returned points sit near the attainable floor rather than
/// just under the tolerance.
MinkVec newton_solve(const VecField& F, MinkVec x, const NewtonOptions& opts, int* iters_out) {
  const int n = x.dim();
  int iters = 0;
  MinkVec fx = F(x);
  auto step = [&]() {
    std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
      MinkVec xh = x;
      xh[j] += opts.fd_step;
      MinkVec fh = F(xh);
      for (int i = 0; i < n; ++i) J[i][j] = (fh[i] - fx[i]) / opts.fd_step;
    }
    MinkVec delta = solve_linear(std::move(J), fx);
    // full step, backtracking on non-improvement
    double lambda = 1.0;
    for (int bt = 0; bt < 8; ++bt, lambda *= 0.5) {
      MinkVec xn = x;
      for (int i = 0; i < n; ++i) xn[i] -= lambda * delta[i];
      MinkVec fn = F(xn);
      if (comp_norm(fn) < comp_norm(fx)) {
        x = xn;
        fx = fn;
        return true;
      }
    }
    return false;
  };
  while (comp_norm(fx) > opts.tol) {
    if (++iters > opts.max_iters)
      throw std::runtime_error("newton: no convergence within the iteration limit");
    if (!step() && comp_norm(fx) > opts.tol)
      throw std::runtime_error("newton: stalled above the requested tolerance");
  }
  step();  // polish
  if (iters_out) *iters_out = iters;
  return x;
}

MinkVec kvec_dispatch(const RealizationSpec& spec, const DeformParams& p, const MinkVec& k,
                      int steps) {
  if (spec.is_maggiore()) return kvec_maggiore(p, k);
  return compose_ode(spec, p, k, MinkVec(k.dim()), steps).value;
}

}  // namespace

std::vector<std::vector<double>> phi_matrix(const RealizationSpec& spec,
                                            const DeformParams& params, const MinkVec& P) {
  const int n = P.dim();
  const MinkVec a = params.a_dbl();
  const double a2ms = params.a2ms_dbl();
  const double aP = mink_dot(a, P);
  const double B = -a2ms * mink_sq(P);  // B at D = iP
  const double fval = spec.f_at(B);     // throws if the square root leaves the domain
  const double g2 = gamma2_at(spec, B);
  std::vector<std::vector<double>> Phi(n, std::vector<double>(n, 0.0));
  for (int mu = 0; mu < n; ++mu)
    for (int al = 0; al < n; ++al) {
      double v = 0.0;
      if (mu == al) v += metric_sign(mu) * (aP + fval);
      v += -a[mu] * P[al];
      v += a2ms * P[mu] * P[al] * g2;
      Phi[mu][al] = v;
    }
  return Phi;
}

ComposeResult compose_ode(const RealizationSpec& spec, const DeformParams& params,
                          const MinkVec& k, const MinkVec& q, int steps,
                          double richardson_tol) {
  if (steps < 1) throw std::invalid_argument("compose_ode: steps must be >= 1");
  k.check_dim(q);
  VecField F = [&](const MinkVec& P) {
    auto Phi = phi_matrix(spec, params, P);
    const int n = P.dim();
    MinkVec r(n);
    for (int mu = 0; mu < n; ++mu) {
      double acc = 0.0;
      for (int al = 0; al < n; ++al) acc += Phi[mu][al] * metric_sign(al) * k[al];
      r[mu] = acc;
    }
    return r;
  };
  MinkVec coarse = rk4_flow(F, q, steps);
  MinkVec fine = rk4_flow(F, q, 2 * steps);
  const double est = comp_norm(fine - coarse) / 15.0;
  ComposeResult out{fine, ComposeMethod::Ode, {est, 0, steps, est <= richardson_tol}};
  return out;
}

MinkVec p_exact_maggiore(const DeformParams& params, const MinkVec& k, const MinkVec& q,
                         double t) {
  k.check_dim(q);
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const double s = params.s_dbl();
  const WFuncs w = w_functions(w2_of(params, k), t);
  const double zq = zinv_of(params, q);
  const double ak = mink_dot(a, k);
  const double kq = mink_dot(k, q);
  const double k2 = mink_sq(k);
  MinkVec P(n);
  for (int mu = 0; mu < n; ++mu)
    P[mu] = q[mu] + (k[mu] * zq - a[mu] * kq) * w.sinhc +
            ((k[mu] * ak - a[mu] * k2) * zq + a[mu] * ak * kq - s * k[mu] * kq) * w.coshm;
  return P;
}

MinkVec kvec_maggiore(const DeformParams& params, const MinkVec& k) {
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const WFuncs w = w_functions(w2_of(params, k), 1.0);
  const double ak = mink_dot(a, k);
  const double k2 = mink_sq(k);
  MinkVec K(n);
  for (int mu = 0; mu < n; ++mu)
    K[mu] = (k[mu] * ak - a[mu] * k2) * w.coshm + k[mu] * w.sinhc;
  return K;
}

MinkVec kvec(const RealizationSpec& spec, const DeformParams& params, const MinkVec& k,
             int steps) {
  return kvec_dispatch(spec, params, k, steps);
}

MinkVec kvec_inverse(const RealizationSpec& spec, const DeformParams& params,
                     const MinkVec& k, const NewtonOptions& opts, int steps,
                     ComposeDiagnostics* diag) {
  VecField F = [&](const MinkVec& x) { return kvec_dispatch(spec, params, x, steps) - k; };
  int iters = 0;
  MinkVec x = newton_solve(F, k, opts, &iters);
  if (diag) {
    diag->newton_iters = iters;
    diag->residual = comp_norm(F(x));
  }
  return x;
}

ComposeResult compose(const RealizationSpec& spec, const DeformParams& params,
                      const MinkVec& k, const MinkVec& q, const NewtonOptions& opts,
                      int steps) {
  ComposeDiagnostics diag;
  MinkVec kin = kvec_inverse(spec, params, k, opts, steps, &diag);
  if (spec.is_maggiore()) {
    ComposeResult out{p_exact_maggiore(params, kin, q, 1.0), ComposeMethod::Exact, diag};
    return out;
  }
  ComposeResult flow = compose_ode(spec, params, kin, q, steps);
  flow.diagnostics.newton_iters = diag.newton_iters;
  flow.method = ComposeMethod::Ode;
  return flow;
}

MinkVec compose_closed(ClosedCase cs, const DeformParams& params, const MinkVec& k,
                       const MinkVec& q) {
  k.check_dim(q);
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const double s = params.s_dbl();
  const double kq = mink_dot(k, q);
  const double k2 = mink_sq(k);
  const double q2 = mink_sq(q);
  MinkVec D(n);
  switch (cs) {
    case ClosedCase::Kappa: {
      if (!params.s.is_zero())
        throw std::invalid_argument("compose_closed: kappa case needs s = 0");
      const double zq = zinv_of(params, q);
      const double zk = 1.0 / zinv_of(params, k);
      const double box_k = box_of_k(params, k);
      const double aq = mink_dot(a, q);
      for (int mu = 0; mu < n; ++mu)
        D[mu] = k[mu] * zq + q[mu] - a[mu] * kq * zk + 0.5 * a[mu] * box_k * zk * aq;
      break;
    }
    case ClosedCase::SnyderUnit: {
      // Closed form of the q -> P flow for f(B) = 1 at a = 0 composed with
      // the inverse momentum map, obtained by integrating the Riccati
      // equation for the running contraction (P k); validated against the
      // flow path. Expanding to first order in s reproduces the u = 0
      // perturbative composition.
      for (int mu = 0; mu < n; ++mu)
        if (!params.a[mu].is_zero())
          throw std::invalid_argument("compose_closed: snyder case needs a = 0");
      const double rk = 1.0 + s * k2;
      if (rk < 0.0) throw std::domain_error("compose_closed: 1 + s k^2 < 0");
      const double denom = 1.0 - s * kq;
      for (int mu = 0; mu < n; ++mu)
        D[mu] = (k[mu] * (1.0 - s * kq / (1.0 + std::sqrt(rk))) + std::sqrt(rk) * q[mu]) /
                denom;
      break;
    }
    case ClosedCase::SnyderMaggiore: {
      for (int mu = 0; mu < n; ++mu)
        if (!params.a[mu].is_zero())
          throw std::invalid_argument("compose_closed: snyder case needs a = 0");
      const double rk = 1.0 - s * k2;
      const double rq = 1.0 - s * q2;
      if (rk < 0.0 || rq < 0.0)
        throw std::domain_error("compose_closed: 1 - s p^2 < 0 on a leg");
      for (int mu = 0; mu < n; ++mu)
        D[mu] = q[mu] + k[mu] * (std::sqrt(rq) - s * kq / (1.0 + std::sqrt(rk)));
      break;
    }
  }
  return D;
}

MinkVec compose_perturbative(double u, const DeformParams& params, const MinkVec& k,
                             const MinkVec& q) {
  k.check_dim(q);
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const double a2ms = params.a2ms_dbl();
  const double a2 = mink_sq(a);
  const double ak = mink_dot(a, k);
  const double aq = mink_dot(a, q);
  const double kq = mink_dot(k, q);
  const double k2 = mink_sq(k);
  const double q2 = mink_sq(q);
  const double qc = 1.0 - (1.0 - 2.0 * u) * a2ms * kq - 0.5 * (1.0 - 2.0 * u) * a2ms * k2;
  const double kc = 1.0 + aq + u * a2ms * q2 - 0.5 * a2 * kq - 0.5 * (1.0 - 4.0 * u) * a2ms * kq;
  const double ac = kq * (ak - 1.0) - 0.5 * aq * k2;
  MinkVec D(n);
  for (int mu = 0; mu < n; ++mu) D[mu] = q[mu] * qc + k[mu] * kc + a[mu] * ac;
  return D;
}

MinkVec kvec_perturbative(double u, const DeformParams& params, const MinkVec& k) {
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const double a2ms = params.a2ms_dbl();
  const double a2 = mink_sq(a);
  const double ak = mink_dot(a, k);
  const double k2 = mink_sq(k);
  const double kc = 1.0 + 0.5 * ak + ak * ak / 6.0 - a2 * k2 / 6.0 -
                    (1.0 - 3.0 * u) * a2ms * k2 / 3.0;
  MinkVec K(n);
  for (int mu = 0; mu < n; ++mu) K[mu] = k[mu] * kc - 0.5 * a[mu] * k2;
  return K;
}

MinkVec kvec_inverse_perturbative(double u, const DeformParams& params, const MinkVec& k) {
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const double a2ms = params.a2ms_dbl();
  const double a2 = mink_sq(a);
  const double ak = mink_dot(a, k);
  const double k2 = mink_sq(k);
  const double kc = 1.0 - 0.5 * ak + ak * ak / 3.0 - a2 * k2 / 12.0 +
                    (1.0 - 3.0 * u) * a2ms * k2 / 3.0;
  MinkVec K(n);
  for (int mu = 0; mu < n; ++mu)
    K[mu] = k[mu] * kc + 0.5 * a[mu] * k2 - 0.25 * a[mu] * ak * k2;
  return K;
}

AntipodeResult antipode(const RealizationSpec& spec, const DeformParams& params,
                        const MinkVec& k, const NewtonOptions& opts, int steps) {
  VecField F = [&](const MinkVec& x) {
    return compose(spec, params, x, k, opts, steps).value;
  };
  int iters = 0;
  MinkVec S = newton_solve(F, -k, opts, &iters);
  AntipodeResult out{S, comp_norm(F(S)),
                     comp_norm(compose(spec, params, k, S, opts, steps).value), iters};
  return out;
}

MinkVec antipode_perturbative(const DeformParams& params, const MinkVec& k) {
  for (int i = 1; i < params.dim(); ++i)
    if (!params.a[i].is_zero())
      throw std::invalid_argument("antipode_perturbative: a must be purely timelike");
  const int n = k.dim();
  const MinkVec a = params.a_dbl();
  const double ak = mink_dot(a, k);
  const double a2 = mink_sq(a);
  const double k2 = mink_sq(k);
  // covariant second-order solution of D(S, k) = 0:
  //   S = -k + k (ak) - a k^2 + k (a^2 k^2 / 2 - (ak)^2) + a (ak) k^2 / 2
  MinkVec S(n);
  for (int mu = 0; mu < n; ++mu)
    S[mu] = -k[mu] + k[mu] * ak - a[mu] * k2 + k[mu] * (0.5 * a2 * k2 - ak * ak) +
            0.5 * a[mu] * ak * k2;
  return S;
}

namespace {

// d/dw2 of sinh(W)/W and (cosh(W)-1)/W^2 at t = 1, with the same series
// fallback near the removable point.
double sinhc_prime(double w2, const WFuncs& w) {
  if (std::abs(w2) < 1e-3)
    return 1.0 / 6.0 + w2 / 60.0 + w2 * w2 / 1680.0 + w2 * w2 * w2 / 90720.0;
  return (w.cosh - w.sinhc) / (2.0 * w2);
}
double coshm_prime(double w2, const WFuncs& w) {
  if (std::abs(w2) < 1e-3)
    return 1.0 / 24.0 + w2 / 360.0 + w2 * w2 / 13440.0 + w2 * w2 * w2 / 907200.0;
  return (0.5 * w.sinhc - w.coshm) / w2;
}

MinkVec raise_all(const MinkVec& v) {
  MinkVec r = v;
  for (int i = 0; i < v.dim(); ++i) r[i] *= metric_sign(i);
  return r;
}

/// dP_mu/dkappa_beta of the exact flow endpoint at fixed q.
std::vector<std::vector<double>> dP_dkappa(const DeformParams& p, const MinkVec& kap,
                                           const MinkVec& q) {
  const int n = kap.dim();
  const MinkVec a = p.a_dbl();
  const double s = p.s_dbl();
  const double w2 = w2_of(p, kap);
  const WFuncs w = w_functions(w2, 1.0);
  const double sp = sinhc_prime(w2, w), cp = coshm_prime(w2, w);
  const double zq = zinv_of(p, q);
  const double ak = mink_dot(a, kap), kq = mink_dot(kap, q), k2 = mink_sq(kap);
  const MinkVec au = raise_all(a), qu = raise_all(q), ku = raise_all(kap);
  std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
  for (int mu = 0; mu < n; ++mu)
    for (int be = 0; be < n; ++be) {
      const double dw2 = 2.0 * ak * au[be] - 2.0 * s * ku[be];
      const double del = mu == be ? 1.0 : 0.0;
      const double bracket = (kap[mu] * ak - a[mu] * k2) * zq + a[mu] * ak * kq -
                             s * kap[mu] * kq;
      const double dbracket = (del * ak + kap[mu] * au[be] - 2.0 * a[mu] * ku[be]) * zq +
                              a[mu] * (au[be] * kq + ak * qu[be]) -
                              s * (del * kq + kap[mu] * qu[be]);
      J[mu][be] = (del * zq - a[mu] * qu[be]) * w.sinhc +
                  (kap[mu] * zq - a[mu] * kq) * sp * dw2 + dbracket * w.coshm +
                  bracket * cp * dw2;
    }
  return J;
}

/// dP_mu/dq_beta of the exact flow endpoint at fixed first argument.
std::vector<std::vector<double>> dP_dq(const DeformParams& p, const MinkVec& kap,
                                       const MinkVec& q) {
  const int n = kap.dim();
  const MinkVec a = p.a_dbl();
  const double s = p.s_dbl();
  const WFuncs w = w_functions(w2_of(p, kap), 1.0);
  const double ak = mink_dot(a, kap), k2 = mink_sq(kap);
  const double root = std::sqrt(1.0 + p.a2ms_dbl() * mink_sq(q));
  const MinkVec au = raise_all(a), ku = raise_all(kap), qu = raise_all(q);
  std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
  for (int mu = 0; mu < n; ++mu)
    for (int be = 0; be < n; ++be) {
      const double dzinv = au[be] + p.a2ms_dbl() * qu[be] / root;
      const double del = mu == be ? 1.0 : 0.0;
      J[mu][be] = del + (kap[mu] * dzinv - a[mu] * ku[be]) * w.sinhc +
                  ((kap[mu] * ak - a[mu] * k2) * dzinv + a[mu] * ak * ku[be] -
                   s * kap[mu] * ku[be]) *
                      w.coshm;
    }
  return J;
}

/// dK_mu/dkappa_beta of the one-wave momentum map.
std::vector<std::vector<double>> dK_dkappa(const DeformParams& p, const MinkVec& kap) {
  const int n = kap.dim();
  const MinkVec a = p.a_dbl();
  const double s = p.s_dbl();
  const double w2 = w2_of(p, kap);
  const WFuncs w = w_functions(w2, 1.0);
  const double sp = sinhc_prime(w2, w), cp = coshm_prime(w2, w);
  const double ak = mink_dot(a, kap), k2 = mink_sq(kap);
  const MinkVec au = raise_all(a), ku = raise_all(kap);
  std::vector<std::vector<double>> J(n, std::vector<double>(n, 0.0));
  for (int mu = 0; mu < n; ++mu)
    for (int be = 0; be < n; ++be) {
      const double dw2 = 2.0 * ak * au[be] - 2.0 * s * ku[be];
      const double del = mu == be ? 1.0 : 0.0;
      J[mu][be] = (del * ak + kap[mu] * au[be] - 2.0 * a[mu] * ku[be]) * w.coshm +
                  (kap[mu] * ak - a[mu] * k2) * cp * dw2 + del * w.sinhc +
                  kap[mu] * sp * dw2;
    }
  return J;
}

std::vector<std::vector<double>> invert_matrix(std::vector<std::vector<double>> M) {
  const int n = static_cast<int>(M.size());
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (M[piv][col] == 0.0) throw std::runtime_error("compose_jacobians: singular map");
    std::swap(M[piv], M[col]);
    std::swap(inv[piv], inv[col]);
    const double d = M[col][col];
    for (int j = 0; j < n; ++j) {
      M[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double m = M[r][col];
      for (int j = 0; j < n; ++j) {
        M[r][j] -= m * M[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

ComposeJacobians compose_jacobians(const DeformParams& params, const MinkVec& k,
                                   const MinkVec& q, const NewtonOptions& opts) {
  const int n = k.dim();
  MinkVec kap = kvec_inverse(RealizationSpec::maggiore(), params, k, opts);
  auto dPdk = dP_dkappa(params, kap, q);
  auto JKinv = invert_matrix(dK_dkappa(params, kap));
  ComposeJacobians out;
  out.Jk.assign(n, std::vector<double>(n, 0.0));
  for (int al = 0; al < n; ++al)
    for (int be = 0; be < n; ++be)
      for (int ga = 0; ga < n; ++ga) out.Jk[al][be] += dPdk[al][ga] * JKinv[ga][be];
  out.Jq = dP_dq(params, kap, q);
  return out;
}

double zinv_of_k(const DeformParams& params, const MinkVec& k) { return zinv_of(params, k); }

double box_of_k(const DeformParams& params, const MinkVec& k) {
  const double k2 = mink_sq(k);
  const double arg = 1.0 + params.a2ms_dbl() * k2;
  if (arg < 0.0)
    throw std::domain_error("box_of_k: 1+(a^2-s)k^2 < 0");
  // 2/(a^2-s) (1 - sqrt(1+x)) rewritten as -2k^2/(1+sqrt(1+x)), regular at
  // a^2 = s
  return -2.0 * k2 / (1.0 + std::sqrt(arg));
}

MomentumInvariants momentum_invariants(const DeformParams& params, const MinkVec& k,
                                       const NewtonOptions& opts) {
  const MinkVec a = params.a_dbl();
  MinkVec kin = kvec_inverse(RealizationSpec::maggiore(), params, k, opts);
  const WFuncs w = w_functions(w2_of(params, kin), 1.0);
  const double akin = mink_dot(a, kin);
  MomentumInvariants out{};
  out.zinv_direct = zinv_of(params, k);
  out.zinv_via_inverse = w.cosh + akin * w.sinhc;
  out.box_direct = box_of_k(params, k);
  out.box_via_inverse = -2.0 * mink_sq(kin) * w.coshm;
  return out;
}

}  // namespace ksny
