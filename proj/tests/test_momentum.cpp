#include <doctest.h>

#include <random>

#include "ksny/momentum.hpp"

using namespace ksny;

namespace {

DeformParams timelike(int dim, Rational a0, Rational s) {
  MinkVecQ a(dim);
  a[0] = a0;
  return DeformParams(a, s);
}

DeformParams snyder(int dim, Rational s) { return DeformParams(MinkVecQ(dim), s); }

DeformParams flat(int dim) { return DeformParams(MinkVecQ(dim), Rational(0)); }

DeformParams scaled_by(double eps, const MinkVec& a_base, double s_base, int dim) {
  MinkVecQ a(dim);
  for (int i = 0; i < dim; ++i)
    a[i] = Rational(static_cast<long long>(a_base[i] * eps * 1e6), 1000000);
  Rational s(static_cast<long long>(s_base * eps * eps * 1e6), 1000000);
  return DeformParams(a, s);
}

}  // namespace

TEST_CASE("phi matrix: boundary value and closed-form rows") {
  auto spec = RealizationSpec::maggiore();
  auto p = timelike(3, Rational(1, 10), Rational(1, 20));
  MinkVec zero(3);
  auto Phi0 = phi_matrix(spec, p, zero);
  for (int mu = 0; mu < 3; ++mu)
    for (int al = 0; al < 3; ++al)
      CHECK(Phi0[mu][al] == (mu == al ? metric_sign(mu) : 0.0));

  // maggiore: Phi(iP).k = k (aP + sqrt(1+(a^2-s)P^2)) - a (kP)
  MinkVec P{0.3, -0.4, 0.2};
  MinkVec k{0.5, 0.1, -0.2};
  auto Phi = phi_matrix(spec, p, P);
  MinkVec a = p.a_dbl();
  double root = std::sqrt(1.0 + p.a2ms_dbl() * mink_sq(P));
  for (int mu = 0; mu < 3; ++mu) {
    double lhs = 0;
    for (int al = 0; al < 3; ++al) lhs += Phi[mu][al] * metric_sign(al) * k[al];
    double rhs = k[mu] * (mink_dot(a, P) + root) - a[mu] * mink_dot(k, P);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("phi matrix: unit realization against direct substitution") {
  // f = 1, gamma2 = -1: Phi(iP).k = k (1 + aP) - a (kP) + (a^2-s) P (kP)
  auto p = timelike(2, Rational(1, 8), Rational(1, 16));
  MinkVec P{0.25, -0.5}, k{0.4, 0.3};
  auto Phi = phi_matrix(RealizationSpec::unit(), p, P);
  MinkVec a = p.a_dbl();
  for (int mu = 0; mu < 2; ++mu) {
    double lhs = 0;
    for (int al = 0; al < 2; ++al) lhs += Phi[mu][al] * metric_sign(al) * k[al];
    double rhs = k[mu] * (1.0 + mink_dot(a, P)) - a[mu] * mink_dot(k, P) -
                 p.a2ms_dbl() * P[mu] * mink_dot(k, P);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}

TEST_CASE("flow at zero deformation is plain addition") {
  auto p = flat(2);
  MinkVec k{0.7, -0.3}, q{0.2, 0.5};
  auto r = compose_ode(RealizationSpec::maggiore(), p, k, q, 10);
  CHECK(comp_norm(r.value - (k + q)) < 1e-14);
  CHECK(r.diagnostics.converged);
}

TEST_CASE("flow against the exact maggiore solution") {
  MinkVecQ a(2);
  a[0] = Rational(1, 10);
  DeformParams p(a, Rational(1, 20));
  MinkVec k{0.3, 0.2}, q{-0.1, 0.4};
  auto ode = compose_ode(RealizationSpec::maggiore(), p, k, q, 1000);
  MinkVec exact = p_exact_maggiore(p, k, q, 1.0);
  CHECK(comp_norm(ode.value - exact) < 1e-10);
}

TEST_CASE("flow with q = 0 lands on the one-wave momentum map") {
  auto p = timelike(2, Rational(3, 20), Rational(-1, 20));
  MinkVec k{0.6, -0.4}, zero(2);
  auto ode = compose_ode(RealizationSpec::maggiore(), p, k, zero, 600);
  CHECK(comp_norm(ode.value - kvec_maggiore(p, k)) < 1e-10);
}

TEST_CASE("exact solution: boundary, free limit, derivative consistency") {
  auto p = timelike(2, Rational(1, 10), Rational(1, 20));
  MinkVec k{0.3, 0.2}, q{-0.1, 0.4};
  CHECK(comp_norm(p_exact_maggiore(p, k, q, 0.0) - q) == 0.0);
  CHECK(comp_norm(p_exact_maggiore(flat(2), k, q, 1.0) - (k + q)) < 1e-15);

  // centered finite difference of the trajectory against the flow field
  MinkVecQ a2(2);
  a2[0] = Rational(1, 10);
  a2[1] = Rational(-1, 8);
  DeformParams pg(a2, Rational(1, 20));
  const double t = 0.37;
  auto field_at = [&](const MinkVec& P) {
    auto Phi = phi_matrix(RealizationSpec::maggiore(), pg, P);
    MinkVec r(2);
    for (int mu = 0; mu < 2; ++mu)
      for (int al = 0; al < 2; ++al) r[mu] += Phi[mu][al] * metric_sign(al) * k[al];
    return r;
  };
  MinkVec rhs = field_at(p_exact_maggiore(pg, k, q, t));
  for (double h : {1e-4, 5e-5}) {
    MinkVec fd = p_exact_maggiore(pg, k, q, t + h) - p_exact_maggiore(pg, k, q, t - h);
    for (int mu = 0; mu < 2; ++mu) fd[mu] /= 2.0 * h;
    CHECK(comp_norm(fd - rhs) < 10.0 * h * h);
  }
}

TEST_CASE("exact solution stays real when W^2 goes negative") {
  // pure Snyder with s > 0 drives W^2 = -s k^2 below zero for spacelike k
  auto p = snyder(2, Rational(1, 10));
  MinkVec k{0.1, 0.9}, q{0.0, 0.3};
  MinkVec P = p_exact_maggiore(p, k, q, 1.0);
  for (int mu = 0; mu < 2; ++mu) CHECK(std::isfinite(P[mu]));
  auto ode = compose_ode(RealizationSpec::maggiore(), p, k, q, 800);
  CHECK(comp_norm(ode.value - P) < 1e-10);
}

TEST_CASE("domain guard rejects momenta past the deformation horizon") {
  auto p = snyder(2, Rational(2));  // s = 2: 1 - s q^2 < 0 for q^2 > 1/2
  MinkVec k{0.0, 0.2}, q{0.0, 0.9};
  CHECK_THROWS_AS(p_exact_maggiore(p, k, q, 1.0), std::domain_error);
}

TEST_CASE("one-wave momentum map: zero, flow agreement, perturbative expansion") {
  auto p = timelike(4, Rational(3, 20), Rational(1, 20));
  MinkVec zero(4);
  CHECK(comp_norm(kvec_maggiore(p, zero)) == 0.0);

  MinkVec k{0.4, -0.2, 0.3, 0.1};
  auto viaflow = kvec(RealizationSpec::maggiore(), p, k);
  auto viaode = compose_ode(RealizationSpec::maggiore(), p, k, zero, 1000).value;
  CHECK(comp_norm(viaflow - viaode) < 1e-10);

  // second-order formula at u = 1/2 approaches the exact map at cubic rate
  MinkVec abase{1.2, 0.4, -0.3, 0.2};
  double prev = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto pe = scaled_by(eps, abase, 0.6, 4);
    double d = comp_norm(kvec_perturbative(0.5, pe, k) - kvec_maggiore(pe, k));
    if (prev > 0) CHECK(prev / d == doctest::Approx(8.0).epsilon(0.25));
    prev = d;
  }
}

TEST_CASE("newton inversion of the momentum map") {
  auto p = timelike(2, Rational(1, 5), Rational(1, 10));
  MinkVec zero(2);
  CHECK(comp_norm(kvec_inverse(RealizationSpec::maggiore(), p, zero)) < 1e-12);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dist(-0.7, 0.7);
  for (int trial = 0; trial < 8; ++trial) {
    MinkVec k{dist(rng), dist(rng)};
    ComposeDiagnostics diag;
    MinkVec kin = kvec_inverse(RealizationSpec::maggiore(), p, k, {}, 1000, &diag);
    CHECK(comp_norm(kvec_maggiore(p, kin) - k) <= 1e-12);
    CHECK(diag.newton_iters <= 10);
  }

  // inverse map second-order formula, cubic approach
  MinkVec k{0.4, -0.2, 0.3, 0.1};
  MinkVec abase{1.2, 0.4, -0.3, 0.2};
  double prev = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto pe = scaled_by(eps, abase, 0.6, 4);
    MinkVec kin = kvec_inverse(RealizationSpec::maggiore(), pe, k);
    double d = comp_norm(kvec_inverse_perturbative(0.5, pe, k) - kin);
    if (prev > 0) CHECK(prev / d == doctest::Approx(8.0).epsilon(0.25));
    prev = d;
  }
}

TEST_CASE("composition: unit laws and the free limit") {
  for (auto spec : {RealizationSpec::maggiore(), RealizationSpec::unit()}) {
    auto p = timelike(2, spec.is_maggiore() ? Rational(1, 5) : Rational(1, 10),
                      Rational(1, 20));
    MinkVec k{0.5, -0.3}, zero(2);
    auto dk0 = compose(spec, p, k, zero, {}, 400);
    auto d0q = compose(spec, p, zero, k, {}, 400);
    CHECK(comp_norm(dk0.value - k) <= 2e-12);
    CHECK(comp_norm(d0q.value - k) <= 2e-12);
  }
  MinkVec k{1.0, 0.0}, q{0.0, 1.0};
  auto r = compose(RealizationSpec::maggiore(), flat(2), k, q);
  CHECK(r.value[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.value[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.method == ComposeMethod::Exact);
}

TEST_CASE("composition: exact path against the flow path on a parameter grid") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dist(-0.6, 0.6);
  for (double a0 : {0.0, 0.1, 0.2})
    for (double s : {-0.1, 0.05, 0.1}) {
      auto p = timelike(2, Rational(static_cast<long long>(a0 * 10), 10),
                        Rational(static_cast<long long>(s * 100), 100));
      MinkVec k{dist(rng), dist(rng)}, q{dist(rng), dist(rng)};
      MinkVec exact = compose(RealizationSpec::maggiore(), p, k, q).value;
      MinkVec kin = kvec_inverse(RealizationSpec::maggiore(), p, k);
      MinkVec viaode = compose_ode(RealizationSpec::maggiore(), p, kin, q, 1000).value;
      CHECK(comp_norm(exact - viaode) < 1e-9);
    }
}

TEST_CASE("closed composition laws match their oracles") {
  // kappa: s = 0
  auto pk = timelike(2, Rational(1, 10), Rational(0));
  {
    MinkVecQ a(2);
    a[0] = Rational(1, 10);
    a[1] = Rational(1, 16);
    DeformParams p(a, Rational(0));
    MinkVec k{0.3, -0.2}, q{0.25, 0.4}, zero(2);
    CHECK(comp_norm(compose_closed(ClosedCase::Kappa, p, k, zero) - k) < 1e-14);
    CHECK(comp_norm(compose_closed(ClosedCase::Kappa, p, zero, q) - q) < 1e-14);
    MinkVec exact = compose(RealizationSpec::maggiore(), p, k, q).value;
    CHECK(comp_norm(compose_closed(ClosedCase::Kappa, p, k, q) - exact) < 1e-9);
  }
  // snyder, maggiore realization: a = 0
  {
    auto p = snyder(2, Rational(1, 10));
    MinkVec k{0.3, -0.2}, q{0.25, 0.4}, zero(2);
    CHECK(comp_norm(compose_closed(ClosedCase::SnyderMaggiore, p, k, zero) - k) < 1e-14);
    CHECK(comp_norm(compose_closed(ClosedCase::SnyderMaggiore, p, zero, q) - q) < 1e-14);
    MinkVec viaexact = compose(RealizationSpec::maggiore(), p, k, q).value;
    CHECK(comp_norm(compose_closed(ClosedCase::SnyderMaggiore, p, k, q) - viaexact) < 1e-12);
  }
  // snyder, unit realization: a = 0, against the flow path
  for (Rational s : {Rational(1, 10), Rational(-1, 10)}) {
    auto p = snyder(4, s);
    MinkVec k{0.3, -0.2, 0.1, 0.4}, q{0.25, 0.4, -0.3, 0.1}, zero(4);
    CHECK(comp_norm(compose_closed(ClosedCase::SnyderUnit, p, k, zero) - k) < 1e-14);
    CHECK(comp_norm(compose_closed(ClosedCase::SnyderUnit, p, zero, q) - q) < 1e-14);
    MinkVec viaode = compose(RealizationSpec::unit(), p, k, q, {}, 1000).value;
    CHECK(comp_norm(compose_closed(ClosedCase::SnyderUnit, p, k, q) - viaode) < 1e-9);
  }
  // wrong-case parameters are rejected
  MinkVec k{0.1, 0.1}, q{0.1, 0.1};
  CHECK_THROWS_AS(compose_closed(ClosedCase::Kappa, snyder(2, Rational(1, 10)), k, q),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose_closed(ClosedCase::SnyderUnit, pk, k, q), std::invalid_argument);
  CHECK_THROWS_AS(compose_closed(ClosedCase::SnyderMaggiore, pk, k, q),
                  std::invalid_argument);
}

TEST_CASE("perturbative composition: free limit and cubic convergence") {
  MinkVec k{0.5, -0.3}, q{0.2, 0.4};
  auto d = compose_perturbative(0.3, flat(2), k, q);
  CHECK(comp_norm(d - (k + q)) == 0.0);
  CHECK(comp_norm(kvec_perturbative(0.3, flat(2), k) - k) == 0.0);
  CHECK(comp_norm(kvec_inverse_perturbative(0.3, flat(2), k) - k) == 0.0);

  MinkVec k4{0.3, -0.2, 0.1, 0.25}, q4{0.15, 0.3, -0.2, 0.1};
  MinkVec abase{1.5, 0.5, 0.0, 0.0};
  // u = 1/2 against the exact maggiore path
  double prev = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto pe = scaled_by(eps, abase, 0.5, 4);
    double defect = comp_norm(compose_perturbative(0.5, pe, k4, q4) -
                              compose(RealizationSpec::maggiore(), pe, k4, q4).value);
    if (prev > 0) CHECK(prev / defect == doctest::Approx(8.0).epsilon(0.25));
    prev = defect;
  }
  // u = 0 against the flow path with the unit realization
  prev = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto pe = scaled_by(eps, abase, 0.5, 4);
    double defect = comp_norm(compose_perturbative(0.0, pe, k4, q4) -
                              compose(RealizationSpec::unit(), pe, k4, q4, {}, 600).value);
    if (prev > 0) CHECK(prev / defect == doctest::Approx(8.0).epsilon(0.25));
    prev = defect;
  }
}

TEST_CASE("second-order translation coproduct display equals the u = 1/2 formula") {
  // coproduct terms evaluated with every leg derivative at i times the leg
  // momentum, then divided by i
  MinkVecQ aq(3);
  aq[0] = Rational(1, 5);
  aq[1] = Rational(-1, 10);
  DeformParams p(aq, Rational(1, 25));
  MinkVec k{0.3, -0.2, 0.5}, q{0.15, 0.3, -0.25};
  MinkVec a = p.a_dbl();
  const double aq_ = mink_dot(a, q), kq = mink_dot(k, q), k2 = mink_sq(k),
               q2 = mink_sq(q), ak = mink_dot(a, k);
  const double a2 = mink_sq(a), s = p.s_dbl();
  MinkVec D(3);
  for (int mu = 0; mu < 3; ++mu)
    D[mu] = k[mu] + q[mu] + k[mu] * aq_ - a[mu] * kq + 0.5 * (a2 - s) * k[mu] * q2 +
            a[mu] * ak * kq - 0.5 * a[mu] * aq_ * k2 - 0.5 * s * k[mu] * kq;
  CHECK(comp_norm(D - compose_perturbative(0.5, p, k, q)) < 1e-15);
}

TEST_CASE("antipode: free, snyder, and general residuals") {
  MinkVec k{0.3, 0.4};
  auto free = antipode(RealizationSpec::maggiore(), flat(2), k);
  CHECK(comp_norm(free.value - (-k)) < 1e-13);

  for (auto spec : {RealizationSpec::maggiore(), RealizationSpec::unit()}) {
    auto p = snyder(2, Rational(1, 10));
    auto r = antipode(spec, p, k, {}, 400);
    CHECK(comp_norm(r.value - (-k)) <= 1e-12);
    CHECK(r.residual_left <= 1e-12);
    CHECK(r.residual_right <= 1e-12);
  }

  auto pg = timelike(2, Rational(1, 5), Rational(1, 10));
  auto r = antipode(RealizationSpec::maggiore(), pg, k);
  CHECK(r.residual_left <= 1e-12);
  CHECK(r.residual_right <= 1e-12);
}

TEST_CASE("perturbative antipode: domain, square preservation, agreement") {
  MinkVec k{0.31, 0.23, -0.17, 0.11};
  CHECK(comp_norm(antipode_perturbative(flat(4), k) - (-k)) == 0.0);

  MinkVecQ bad(4);
  bad[1] = Rational(1, 10);
  CHECK_THROWS_AS(antipode_perturbative(DeformParams(bad, Rational(0)), k),
                  std::invalid_argument);

  const double k2 = mink_sq(k);
  double prev_sq = 0, prev_num = 0;
  for (double eps : {0.2, 0.1, 0.05}) {
    auto p = timelike(4, Rational(static_cast<long long>(eps * 1000), 1000), Rational(0));
    MinkVec S = antipode_perturbative(p, k);
    double dsq = std::abs(mink_sq(S) - k2);
    double dnum = comp_norm(S - antipode(RealizationSpec::maggiore(), p, k).value);
    if (prev_sq > 0) CHECK(prev_sq / dsq == doctest::Approx(8.0).epsilon(0.25));
    if (prev_num > 0) CHECK(prev_num / dnum == doctest::Approx(8.0).epsilon(0.25));
    prev_sq = dsq;
    prev_num = dnum;
  }
}

TEST_CASE("shift operator and d'Alembertian on momenta") {
  auto p = timelike(2, Rational(1, 10), Rational(1, 20));
  MinkVec zero(2);
  CHECK(zinv_of_k(p, zero) == 1.0);
  CHECK(box_of_k(p, zero) == 0.0);

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> dist(-0.7, 0.7);
  for (int trial = 0; trial < 6; ++trial) {
    MinkVec k{dist(rng), dist(rng)};
    auto mi = momentum_invariants(p, k);
    CHECK(std::abs(mi.zinv_direct - mi.zinv_via_inverse) < 1e-10);
    CHECK(std::abs(mi.box_direct - mi.box_via_inverse) < 1e-10);
  }

  // box stays regular at s = a^2 where the prefactor degenerates
  MinkVecQ a(2);
  a[1] = Rational(1, 5);
  DeformParams pdeg(a, mink_sq(a));
  MinkVec k{0.4, -0.3};
  CHECK(box_of_k(pdeg, k) == doctest::Approx(-mink_sq(k)).epsilon(1e-14));
}
