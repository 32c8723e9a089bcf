#include "ksny/suites.hpp"

#include <cmath>

namespace ksny {

namespace {

double coeff_mag(const XSeries& s) {
  double m = 0;
  for (int d = 0; d <= s.order(); ++d) m = std::max(m, std::abs(s[d].to_complex()));
  return m;
}

double residual_mag(const WeylOp& op) {
  double m = 0;
  for (const auto& [k, c] : op.terms()) m = std::max(m, coeff_mag(c));
  return m;
}

double residual_mag(const NCOp& op) {
  double m = 0;
  for (const auto& [k, c] : op.terms()) m = std::max(m, coeff_mag(c));
  return m;
}

struct Collector {
  std::vector<CheckReport> out;

  void exact(const std::string& name, bool pass, double mag, const std::string& details) {
    out.push_back({name, pass ? 0.0 : mag, pass, details});
  }
  void bounded(const std::string& name, double residual, double gate,
               std::string details = {}) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", gate);
    if (!details.empty()) details += ", ";
    details += std::string("gate ") + buf;
    out.push_back({name, residual, residual <= gate, details});
  }
};

DeformParams draw_params(SeededRng& rng, int dim) {
  MinkVecQ a(dim);
  for (int i = 0; i < dim; ++i) a[i] = rng.dyadic(6, 16);
  return DeformParams(a, rng.dyadic(12, 64));
}

MinkVec draw_vec(SeededRng& rng, int dim, double scale) {
  MinkVec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = scale * rng.sym() / std::sqrt(double(dim));
  return v;
}

DeformParams timelike_params(double a0, double s, int dim) {
  MinkVecQ a(dim);
  a[0] = Rational(static_cast<long long>(std::llround(a0 * 100)), 100);
  return DeformParams(a, Rational(static_cast<long long>(std::llround(s * 100)), 100));
}

}  // namespace

std::vector<CheckReport> suite_realizations(const SuiteConfig& cfg) {
  Collector col;
  SeededRng rng(cfg.seed * 0x9e37u + 11);

  struct Run {
    std::string label;
    RealizationSpec spec;
    DeformParams params;
  };
  std::vector<Run> runs;
  runs.push_back({"config/" + cfg.spec.name(), cfg.spec, DeformParams(cfg.a, cfg.s)});
  for (int d = 0; d < cfg.draws; ++d) {
    DeformParams p = draw_params(rng, cfg.dim);
    runs.push_back({"draw" + std::to_string(d) + "/maggiore", RealizationSpec::maggiore(), p});
    runs.push_back({"draw" + std::to_string(d) + "/unit", RealizationSpec::unit(), p});
  }

  for (const auto& run : runs) {
    RealizedFrame fr = build_frame(run.spec, run.params, cfg.order);
    for (const auto& check : verify_algebra(fr))
      col.exact("identities/" + run.label + "/" + check.name, check.pass,
                check.pass ? 0.0 : 1.0, check.detail.substr(0, 160));

    // Lorentz generators rebuilt from the realized coordinates
    auto rebuilt = build_M(fr, MMode::FromXhat);
    bool ok = true;
    double mag = 0;
    for (int mu = 0; mu < fr.dim; ++mu)
      for (int nu = 0; nu < fr.dim; ++nu) {
        WeylOp r = rebuilt[mu][nu] - fr.M[mu][nu];
        if (!r.is_zero()) {
          ok = false;
          mag = std::max(mag, residual_mag(r));
        }
      }
    col.exact("lorentz-rebuild/" + run.label, ok, mag, "");

    // inverse map round trip
    ok = true;
    mag = 0;
    for (int mu = 0; mu < fr.dim; ++mu) {
      WeylOp r = fr.xinv[mu] - WeylOp::x(mu, fr.dim, fr.order);
      if (!r.is_zero()) {
        ok = false;
        mag = std::max(mag, residual_mag(r));
      }
    }
    col.exact("inverse-round-trip/" + run.label, ok, mag, "");

    // Snyder map: commutator, transformation law, explicit representation
    auto eta = [](int mu, int nu) { return mu == nu ? metric_sign(mu) : 0; };
    Rational sma = run.params.s - run.params.a_sq();
    bool okc = true, okt = true, okr = true;
    double magc = 0, magt = 0, magr = 0;
    WeylOp xd = WeylOp::zero(fr.dim, fr.order);
    for (int al = 0; al < fr.dim; ++al)
      xd += weyl_mul(WeylOp::x(al, fr.dim, fr.order), WeylOp::d(al, fr.dim, fr.order))
                .scaled(CRational(Rational(metric_sign(al))));
    for (int mu = 0; mu < fr.dim; ++mu) {
      for (int nu = 0; nu < fr.dim; ++nu) {
        WeylOp rc = weyl_commutator(fr.xtilde[mu], fr.xtilde[nu]) -
                    fr.M[mu][nu].scaled(XSeries::graded(fr.order, 2, CRational(sma)));
        if (!rc.is_zero()) {
          okc = false;
          magc = std::max(magc, residual_mag(rc));
        }
        for (int la = 0; la < fr.dim; ++la) {
          WeylOp rt = weyl_commutator(fr.M[mu][nu], fr.xtilde[la]);
          if (eta(nu, la)) rt -= fr.xtilde[mu].scaled(CRational(Rational(eta(nu, la))));
          if (eta(mu, la)) rt += fr.xtilde[nu].scaled(CRational(Rational(eta(mu, la))));
          if (!rt.is_zero()) {
            okt = false;
            magt = std::max(magt, residual_mag(rt));
          }
        }
      }
      WeylOp expect = weyl_mul(WeylOp::x(mu, fr.dim, fr.order), fr.f_op);
      expect += weyl_mul(weyl_mul(xd, WeylOp::d(mu, fr.dim, fr.order)), fr.gamma2_op)
                    .scaled(XSeries::graded(fr.order, 2, CRational(-run.params.a2ms())));
      WeylOp rr = fr.xtilde[mu] - expect;
      if (!rr.is_zero()) {
        okr = false;
        magr = std::max(magr, residual_mag(rr));
      }
    }
    col.exact("snyder-map/commutator/" + run.label, okc, magc, "");
    col.exact("snyder-map/transformation/" + run.label, okt, magt, "");
    col.exact("snyder-map/representation/" + run.label, okr, magr, "");
  }
  return col.out;
}

std::vector<CheckReport> suite_ncorder(const SuiteConfig& cfg) {
  Collector col;
  SeededRng rng(cfg.seed * 0x85ebu + 7);
  const int n = cfg.dim;

  MinkVecQ a(n);
  for (int i = 0; i < n; ++i) a[i] = rng.dyadic(6, 16);
  DeformParams pmix(a, rng.dyadic(12, 64));
  DeformParams pkappa(a, Rational(0));
  const int order = std::min(cfg.order, 4);
  NCContext ctx(RealizationSpec::maggiore(), pmix, order);
  NCContext ctx0(RealizationSpec::maggiore(), pkappa, order);

  // ordering an ordered word changes nothing
  {
    NCWord w{FXhat{0}, FXhat{0}, FXhat{1}, FD{0}};
    if (n > 2) w.insert(w.begin() + 3, FXhat{2});
    NCOp once = nc_normal_order(w, ctx);
    NCOp again = NCOp::zero(n, order);
    bool ok = true;
    // replay each canonical term as a word; the result must reproduce it
    for (const auto& [k, c] : once.terms()) {
      NCWord replay;
      for (int mu = 0; mu < n; ++mu)
        for (int e = 0; e < mono::get(key_x(k), mu); ++e) replay.push_back(FXhat{mu});
      for (int mu = 0; mu < n; ++mu)
        for (int e = 0; e < mono::get(key_d(k), mu); ++e) replay.push_back(FD{mu});
      NCOp t = nc_normal_order(replay, ctx);
      NCOp expect(n, order);
      expect.add_term(key_x(k), key_d(k), XSeries::one(order));
      if (!(t == expect)) ok = false;
      again += t.scaled(c);
    }
    col.exact("ncorder/ordering-idempotent", ok && again == once,
              ok ? 0.0 : 1.0, "");
  }

  // projected swap defect is the kappa commutator, and the s = 0 slice keeps
  // no derivative terms
  {
    bool ok = true;
    double mag = 0;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        NCOp comm = nc_normal_order({FXhat{mu}, FXhat{nu}}, ctx) -
                    nc_normal_order({FXhat{nu}, FXhat{mu}}, ctx);
        NCOp expect =
            NCOp::xhat(nu, n, order)
                .scaled(XSeries::graded(order, 1, CRational(Rational(0), pmix.a[mu])));
        expect -= NCOp::xhat(mu, n, order)
                      .scaled(XSeries::graded(order, 1, CRational(Rational(0), pmix.a[nu])));
        NCOp r = circ_project(comm) - expect;
        if (!r.is_zero()) {
          ok = false;
          mag = std::max(mag, residual_mag(r));
        }
      }
    col.exact("ncorder/commutator-projection", ok, mag, "");

    bool lossless = true;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        NCOp comm = nc_normal_order({FXhat{mu}, FXhat{nu}}, ctx0) -
                    nc_normal_order({FXhat{nu}, FXhat{mu}}, ctx0);
        if (comm.has_d_terms() || !(circ_project(comm) == comm)) lossless = false;
      }
    col.exact("ncorder/kappa-projection-lossless", lossless, lossless ? 0.0 : 1.0, "");
  }

  // permutation defects project onto strictly lower degree
  {
    bool ok2 = true, ok3 = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        NCOp d = pbw_defect({1, 0}, {i, j}, ctx);
        if (!pbw_defect({0, 1}, {i, j}, ctx).is_zero()) ok2 = false;
        if (circ_project(d).xhat_degree() > 1) ok2 = false;
      }
    const std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> idx{static_cast<int>(rng.next() % n), static_cast<int>(rng.next() % n),
                           static_cast<int>(rng.next() % n)};
      for (const auto& perm : perms) {
        NCOp d = pbw_defect(perm, idx, ctx);
        if (circ_project(d).xhat_degree() > 2) ok3 = false;
      }
    }
    col.exact("ncorder/pbw-degree-bound-m2", ok2, ok2 ? 0.0 : 1.0, "");
    col.exact("ncorder/pbw-degree-bound-m3", ok3, ok3 ? 0.0 : 1.0, "");
  }

  // ordering commutes with the realization
  {
    RealizedFrame fr = build_frame(RealizationSpec::maggiore(), pmix, order);
    bool ok = true;
    double mag = 0;
    for (int trial = 0; trial < 6; ++trial) {
      NCWord w;
      int len = 2 + static_cast<int>(rng.next() % 2);
      for (int i = 0; i < len; ++i) {
        int mu = static_cast<int>(rng.next() % n);
        if (rng.next() % 3 == 0)
          w.push_back(FD{mu});
        else
          w.push_back(FXhat{mu});
      }
      WeylOp r = realize_word(w, fr) - realize_nc(nc_normal_order(w, ctx), fr);
      if (!r.is_zero()) {
        ok = false;
        mag = std::max(mag, residual_mag(r));
      }
    }
    col.exact("ncorder/realization-consistency", ok, mag, "");
  }

  // quadratic invariant at grade 2
  {
    NCContext ctx2(RealizationSpec::maggiore(), pmix, 2);
    auto inv = invariant_I2(ctx2);
    NCOp diff = inv.value - inv.closed_form;
    col.exact("ncorder/invariant-quadratic", diff.is_zero(), residual_mag(diff),
              "projected X.X rewrite vs closed form");
    bool ok = true;
    double mag = 0;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu)
        if (!inv.lorentz_defect[mu][nu].is_zero()) {
          ok = false;
          mag = std::max(mag, residual_mag(inv.lorentz_defect[mu][nu]));
        }
    col.exact("ncorder/invariant-lorentz-defect", ok, mag, "");
  }

  return col.out;
}

std::vector<CheckReport> suite_momentum(const SuiteConfig& cfg) {
  Collector col;
  SeededRng rng(cfg.seed * 0xc2b2u + 3);
  const auto maggiore = RealizationSpec::maggiore();
  const auto unit = RealizationSpec::unit();

  double flow_vs_exact = 0, kvec_rt = 0, anti_res = 0, snyder_anti = 0;
  double closed_kappa = 0, closed_sm = 0, closed_su = 0, invar = 0;
  for (int dim : {2, cfg.dim}) {
    for (double a0 : {0.0, 0.1, 0.2})
      for (double s : {-0.1, 0.0, 0.05, 0.1}) {
        DeformParams p = timelike_params(a0, s, dim);
        for (int rep = 0; rep < 2; ++rep) {
          MinkVec k = draw_vec(rng, dim, 1.0);
          MinkVec q = draw_vec(rng, dim, 1.0);
          // flow vs exact solution
          auto ode = compose_ode(maggiore, p, k, q, 1000);
          flow_vs_exact = std::max(
              flow_vs_exact, comp_norm(ode.value - p_exact_maggiore(p, k, q, 1.0)));
          // Newton round trip
          MinkVec kin = kvec_inverse(maggiore, p, k);
          kvec_rt = std::max(kvec_rt, comp_norm(kvec_maggiore(p, kin) - k));
          // antipode residuals; the mirror condition is evaluated at the
          // solved point, not minimized, so the polish step matters here
          auto ar = antipode(maggiore, p, k);
          anti_res = std::max({anti_res, ar.residual_left, ar.residual_right});
          if (a0 == 0.0) {
            snyder_anti = std::max(snyder_anti, comp_norm(ar.value + k));
            closed_sm = std::max(
                closed_sm, comp_norm(compose_closed(ClosedCase::SnyderMaggiore, p, k, q) -
                                     compose(maggiore, p, k, q).value));
            closed_su = std::max(
                closed_su, comp_norm(compose_closed(ClosedCase::SnyderUnit, p, k, q) -
                                     compose(unit, p, k, q, {}, 1000).value));
          }
          if (s == 0.0)
            closed_kappa = std::max(
                closed_kappa, comp_norm(compose_closed(ClosedCase::Kappa, p, k, q) -
                                        compose(maggiore, p, k, q).value));
          auto mi = momentum_invariants(p, k);
          invar = std::max({invar, std::abs(mi.zinv_direct - mi.zinv_via_inverse),
                            std::abs(mi.box_direct - mi.box_via_inverse)});
        }
      }
  }
  col.bounded("momentum/flow-vs-exact", flow_vs_exact, 1e-9, "1000 steps");
  col.bounded("momentum/kvec-roundtrip", kvec_rt, 1e-12);
  col.bounded("momentum/antipode-residuals", anti_res, 1e-12);
  col.bounded("momentum/snyder-antipode", snyder_anti, 1e-12);
  col.bounded("momentum/closed-kappa", closed_kappa, 1e-9);
  col.bounded("momentum/closed-snyder-maggiore", closed_sm, 1e-9);
  col.bounded("momentum/closed-snyder-unit", closed_su, 1e-9);
  col.bounded("momentum/invariants-identity", invar, 1e-10);

  // second-order formulas approach the exact paths at cubic rate under
  // halving of the deformation scale
  {
    // fixed generic momenta: this measures a convergence order, and poorly
    // conditioned draws would blur the cubic signal with fourth-order terms
    const int dim = 4;
    MinkVec k{0.3, -0.2, 0.1, 0.25};
    MinkVec q{0.15, 0.3, -0.2, 0.1};
    MinkVec abase{1.5, 0.5, -0.3, 0.2};
    auto ratio_dev = [](double d1, double d2) { return std::abs(d1 / d2 / 8.0 - 1.0); };
    for (double u : {0.5, 0.0}) {
      RealizationSpec spec = u == 0.5 ? maggiore : unit;
      double dD[3], dK[3], dKi[3];
      int i = 0;
      for (double eps : {0.2, 0.1, 0.05}) {
        DeformParams p = timelike_params(0, 0, dim);  // placeholder, replaced below
        MinkVecQ av(dim);
        for (int c = 0; c < dim; ++c)
          av[c] = Rational(static_cast<long long>(std::llround(abase[c] * eps * 1000)), 1000);
        p = DeformParams(av, Rational(static_cast<long long>(std::llround(0.5 * eps * eps * 1000)),
                                      1000));
        dD[i] = comp_norm(compose_perturbative(u, p, k, q) -
                          compose(spec, p, k, q, {}, 800).value);
        dK[i] = comp_norm(kvec_perturbative(u, p, k) - kvec(spec, p, k, 800));
        dKi[i] = comp_norm(kvec_inverse_perturbative(u, p, k) -
                           kvec_inverse(spec, p, k, {}, 800));
        ++i;
      }
      std::string label = u == 0.5 ? "u05" : "u0";
      col.bounded("momentum/perturbative-composition-" + label,
                  std::max(ratio_dev(dD[0], dD[1]), ratio_dev(dD[1], dD[2])), 0.25,
                  "deviation of the halving ratio from 8");
      col.bounded("momentum/perturbative-kvec-" + label,
                  std::max(ratio_dev(dK[0], dK[1]), ratio_dev(dK[1], dK[2])), 0.25,
                  "deviation of the halving ratio from 8");
      col.bounded("momentum/perturbative-kvec-inverse-" + label,
                  std::max(ratio_dev(dKi[0], dKi[1]), ratio_dev(dKi[1], dKi[2])), 0.25,
                  "deviation of the halving ratio from 8");
    }
    // antipode: second-order formula vs Newton (s = 0), and the square
    MinkVec kk{0.31, 0.23, -0.17, 0.11};
    double dS[3], dSq[3];
    int i = 0;
    for (double eps : {0.2, 0.1, 0.05}) {
      MinkVecQ av(dim);
      av[0] = Rational(static_cast<long long>(std::llround(eps * 1000)), 1000);
      DeformParams p(av, Rational(0));
      MinkVec S = antipode_perturbative(p, kk);
      dS[i] = comp_norm(S - antipode(maggiore, p, kk).value);
      dSq[i] = std::abs(mink_sq(S) - mink_sq(kk));
      ++i;
    }
    col.bounded("momentum/perturbative-antipode",
                std::max(ratio_dev(dS[0], dS[1]), ratio_dev(dS[1], dS[2])), 0.25,
                "deviation of the halving ratio from 8");
    col.bounded("momentum/perturbative-antipode-square",
                std::max(ratio_dev(dSq[0], dSq[1]), ratio_dev(dSq[1], dSq[2])), 0.25,
                "deviation of the halving ratio from 8");
  }
  return col.out;
}

std::vector<CheckReport> suite_hopf(const SuiteConfig& cfg) {
  Collector col;
  SeededRng rng(cfg.seed * 0x27d4u + 5);
  const auto maggiore = RealizationSpec::maggiore();
  const int dim = cfg.dim;

  // unit laws for both paths
  {
    double worst = 0;
    for (double a0 : {0.0, 0.1, 0.2})
      for (double s : {-0.1, 0.0, 0.05, 0.1}) {
        DeformParams p = timelike_params(a0, s, dim);
        MinkVec k = draw_vec(rng, dim, 1.0), zero(dim);
        worst = std::max(worst, comp_norm(compose(maggiore, p, k, zero).value - k));
        worst = std::max(worst, comp_norm(compose(maggiore, p, zero, k).value - k));
        worst = std::max(worst,
                         comp_norm(compose(RealizationSpec::unit(), p, k, zero, {}, 600).value - k));
        worst = std::max(worst,
                         comp_norm(compose(RealizationSpec::unit(), p, zero, k, {}, 600).value - k));
      }
    col.bounded("hopf/unit-laws", worst, 1e-11);
  }

  // associator: vanishes exactly on the kappa slice, pinned away from zero
  // at the snyder witness, and degenerate for collinear input
  {
    double kappa_worst = 0;
    for (int rep = 0; rep < 4; ++rep) {
      MinkVecQ a(dim);
      for (int i = 0; i < dim; ++i) a[i] = rng.dyadic(3, 16);
      DeformParams p(a, Rational(0));
      MinkVec x = draw_vec(rng, dim, 0.7), y = draw_vec(rng, dim, 0.7),
              z = draw_vec(rng, dim, 0.7);
      kappa_worst = std::max(kappa_worst, comp_norm(associator_defect(maggiore, p, x, y, z)));
    }
    col.bounded("hopf/associator-kappa", kappa_worst, 1e-12);

    DeformParams ps(MinkVecQ(2), Rational(1, 10));
    MinkVec p{0.1, 0.5}, k{0.3, -0.2}, q{-0.2, 0.4};
    double witness = comp_norm(associator_defect(maggiore, ps, p, k, q));
    col.out.push_back({"hopf/associator-witness", witness,
                       witness >= 1e-4 && std::abs(witness - 0.0038154881302033226) < 1e-9,
                       "frozen anchor 0.0038154881302033226, gate >= 1e-4"});

    MinkVec v{0.0, 0.5};
    double collinear = comp_norm(associator_defect(maggiore, ps, v, v, v));
    col.bounded("hopf/associator-collinear-degeneracy", collinear, 1e-12,
                "equal momenta flow along one line, hence associate");
  }

  // snyder covariance under random boosts and rotations
  {
    DeformParams p(MinkVecQ(dim), Rational(1, 10));
    MinkVec k = draw_vec(rng, dim, 0.8), q = draw_vec(rng, dim, 0.8);
    double worst = 0;
    int done = 0;
    while (done < 20) {
      int i = static_cast<int>(rng.next() % dim);
      int j = static_cast<int>(rng.next() % dim);
      if (i == j) continue;
      ++done;
      double chi = rng.sym();
      MinkVec lk = lorentz_boost(k, chi, i, j), lq = lorentz_boost(q, chi, i, j);
      MinkVec lhs = compose(maggiore, p, lk, lq).value;
      MinkVec rhs = lorentz_boost(compose(maggiore, p, k, q).value, chi, i, j);
      worst = std::max(worst, comp_norm(lhs - rhs));
    }
    col.bounded("hopf/covariance", worst, 1e-10, "20 random boosts/rotations");
  }

  // star phase equals the composition by construction; keep it pinned
  {
    DeformParams p = timelike_params(0.1, 0.05, dim);
    PlaneWave f{draw_vec(rng, dim, 0.8), {0.7, 0.1}};
    PlaneWave g{draw_vec(rng, dim, 0.8), {0.2, -0.4}};
    PlaneWave fg = star_plane_waves(maggiore, p, f, g);
    double r = comp_norm(fg.momentum - compose(maggiore, p, f.momentum, g.momentum).value);
    col.bounded("hopf/star-phase-consistency", r, 0.0);
  }

  // degree-one star products match the realized action exactly
  {
    MinkVecQ a(2);
    a[0] = Rational(1, 8);
    a[1] = Rational(-1, 16);
    DeformParams p(a, Rational(1, 32));
    bool ok = true;
    for (Rational u : {Rational(0), Rational(1, 2), Rational(1)}) {
      RealizedFrame fr = build_frame(RealizationSpec::general_u(u), p, 2);
      for (int mu = 0; mu < 2 && ok; ++mu)
        for (int nu = 0; nu < 2 && ok; ++nu) {
          PolyField lhs = star_poly(PolyField::coordinate(mu, 2, 2),
                                    PolyField::coordinate(nu, 2, 2), u, p);
          if (!(lhs == weyl_act(fr.xhat[mu], PolyField::coordinate(nu, 2, 2)))) ok = false;
        }
    }
    col.exact("hopf/star-poly-degree-one-action", ok, ok ? 0.0 : 1.0, "u in {0, 1/2, 1}");
  }

  // deformed Leibniz rule for the Lorentz generators
  {
    double transport_worst = 0, printed_slices = 0, printed_mixed = 0;
    for (double a0 : {0.0, 0.1, 0.2})
      for (double s : {-0.1, 0.0, 0.05, 0.1}) {
        DeformParams p = timelike_params(a0, s, dim);
        MinkVec k = draw_vec(rng, dim, 0.7), q = draw_vec(rng, dim, 0.7);
        for (int mu = 0; mu < dim; ++mu)
          for (int nu = mu + 1; nu < dim; ++nu) {
            double dt =
                lorentz_leibniz_defect(p, k, q, mu, nu, LeibnizForm::AdjointTransport);
            transport_worst = std::max(transport_worst, dt);
            double dp = lorentz_leibniz_defect(p, k, q, mu, nu, LeibnizForm::PrintedKappa);
            if (a0 == 0.0 || s == 0.0)
              printed_slices = std::max(printed_slices, dp);
            else
              printed_mixed = std::max(printed_mixed, dp);
          }
      }
    col.bounded("hopf/lorentz-leibniz-adjoint", transport_worst, 1e-9,
                "first-principles legs across the full grid");
    col.bounded("hopf/lorentz-leibniz-printed-slices", printed_slices, 1e-9,
                "pure-kappa legs, exact on the s=0 and a=0 slices");
    col.out.push_back(
        {"hopf/lorentz-leibniz-printed-mixed-discrepancy", printed_mixed,
         printed_mixed > 1e-8 && printed_mixed < 1e-3,
         "pure-kappa legs acquire a genuine third-order defect at mixed a,s; "
         "pinned as a finding, see the adjoint form for the exact rule"});
  }

  return col.out;
}

std::vector<CheckReport> run_all_suites(const SuiteConfig& cfg) {
  std::vector<CheckReport> all;
  for (auto&& part : {suite_realizations(cfg), suite_ncorder(cfg), suite_momentum(cfg),
                      suite_hopf(cfg)})
    all.insert(all.end(), part.begin(), part.end());
  sort_reports(all);
  return all;
}

}  // namespace ksny
