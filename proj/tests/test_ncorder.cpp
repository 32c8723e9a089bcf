#include <doctest.h>

#include <random>

#include "ksny/ncorder.hpp"

using namespace ksny;

namespace {

DeformParams dyadic_params(int dim, bool with_s = true) {
  MinkVecQ a(dim);
  a[0] = Rational(3, 16);
  a[1] = Rational(-5, 16);
  if (dim > 2) a[2] = Rational(1, 8);
  if (dim > 3) a[3] = Rational(-1, 4);
  return DeformParams(a, with_s ? Rational(5, 64) : Rational(0));
}

NCWord rand_word(std::mt19937_64& rng, int dim, int max_len) {
  NCWord w;
  int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i) {
    int mu = static_cast<int>(rng() % dim);
    if (rng() % 3 == 0)
      w.push_back(FD{mu});
    else
      w.push_back(FXhat{mu});
  }
  return w;
}

}  // namespace

TEST_CASE("ordered monomials are fixed points of the rewriting") {
  auto p = dyadic_params(3);
  NCContext ctx(RealizationSpec::maggiore(), p, 4);
  NCWord ordered{FXhat{0}, FXhat{0}, FXhat{1}, FXhat{2}, FD{1}};
  NCOp once = nc_normal_order(ordered, ctx);
  NCOp expect(3, 4);
  expect.add_term(mono::set(mono::set(mono::set(0, 0, 2), 1, 1), 2, 1), mono::unit(1),
                  XSeries::one(4));
  CHECK(once == expect);
}

TEST_CASE("swap rewrite reproduces the coordinate commutator with shift operator") {
  auto p = dyadic_params(2);
  const int order = 4;
  NCContext ctx(RealizationSpec::maggiore(), p, order);
  const int mu = 0, nu = 1;
  NCOp lhs = nc_normal_order({FXhat{mu}, FXhat{nu}}, ctx) -
             nc_normal_order({FXhat{nu}, FXhat{mu}}, ctx);
  // i(a_mu xhat_nu - a_nu xhat_mu) + s (xhat_mu D_nu - xhat_nu D_mu) Z
  NCOp rhs = NCOp::xhat(nu, 2, order)
                 .scaled(XSeries::graded(order, 1, CRational(Rational(0), p.a[mu])));
  rhs -= NCOp::xhat(mu, 2, order)
             .scaled(XSeries::graded(order, 1, CRational(Rational(0), p.a[nu])));
  NCOp mterm = nc_mul_series(nc_mul_d(NCOp::xhat(mu, 2, order), nu), ctx.Z) -
               nc_mul_series(nc_mul_d(NCOp::xhat(nu, 2, order), mu), ctx.Z);
  rhs += mterm.scaled(XSeries::graded(order, 2, CRational(p.s)));
  CHECK(lhs == rhs);
}

TEST_CASE("derivative past a coordinate inserts the deformed Heisenberg right side") {
  auto p = dyadic_params(2);
  NCContext ctx(RealizationSpec::maggiore(), p, 4);
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) {
      NCOp lhs = nc_normal_order({FD{mu}, FXhat{nu}}, ctx);
      NCOp rhs = nc_mul_d(NCOp::xhat(nu, 2, 4), mu);
      for (const auto& [k, c] : ctx.Phi[mu][nu].terms()) rhs.add_term(0, key_d(k), c);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rewriting is confluent across association orders") {
  std::mt19937_64 rng(31);
  auto p = dyadic_params(3);
  NCContext ctx(RealizationSpec::maggiore(), p, 4);
  for (int trial = 0; trial < 10; ++trial) {
    NCWord w1 = rand_word(rng, 3, 2);
    NCWord w2 = rand_word(rng, 3, 2);
    NCWord w3 = rand_word(rng, 3, 2);
    NCWord joined = w1;
    joined.insert(joined.end(), w2.begin(), w2.end());
    joined.insert(joined.end(), w3.begin(), w3.end());
    NCOp direct = nc_normal_order(joined, ctx);
    NCOp left = nc_mul(nc_mul(nc_normal_order(w1, ctx), nc_normal_order(w2, ctx), ctx),
                       nc_normal_order(w3, ctx), ctx);
    NCOp right = nc_mul(nc_normal_order(w1, ctx),
                        nc_mul(nc_normal_order(w2, ctx), nc_normal_order(w3, ctx), ctx), ctx);
    CHECK(direct == left);
    CHECK(direct == right);
  }
}

TEST_CASE("ordering is invariant under the realization") {
  std::mt19937_64 rng(37);
  auto p = dyadic_params(2);
  const int order = 4;
  NCContext ctx(RealizationSpec::maggiore(), p, order);
  RealizedFrame fr = build_frame(RealizationSpec::maggiore(), p, order);
  for (int trial = 0; trial < 12; ++trial) {
    NCWord w = rand_word(rng, 2, 3);
    WeylOp direct = realize_word(w, fr);
    WeylOp ordered = realize_nc(nc_normal_order(w, ctx), fr);
    CHECK(direct == ordered);
  }
}

TEST_CASE("projection drops derivative terms and is idempotent") {
  auto p = dyadic_params(2);
  const int order = 4;
  NCContext ctx(RealizationSpec::maggiore(), p, order);
  NCOp comm = nc_normal_order({FXhat{0}, FXhat{1}}, ctx) -
              nc_normal_order({FXhat{1}, FXhat{0}}, ctx);

  NCOp projected = circ_project(comm);
  NCOp expect = NCOp::xhat(1, 2, order)
                    .scaled(XSeries::graded(order, 1, CRational(Rational(0), p.a[0])));
  expect -= NCOp::xhat(0, 2, order)
                .scaled(XSeries::graded(order, 1, CRational(Rational(0), p.a[1])));
  CHECK(projected == expect);
  CHECK(circ_project(projected) == projected);

  // with s != 0 the ordered commutator keeps derivative terms the projection kills
  CHECK(comm.has_d_terms());
  CHECK(projected != comm);

  // single coordinate passes through
  CHECK(circ_project(NCOp::xhat(0, 2, order)) == NCOp::xhat(0, 2, order));
}

TEST_CASE("pure kappa case: commutator survives projection losslessly") {
  auto p = dyadic_params(2, /*with_s=*/false);
  NCContext ctx(RealizationSpec::maggiore(), p, 4);
  NCOp comm = nc_normal_order({FXhat{0}, FXhat{1}}, ctx) -
              nc_normal_order({FXhat{1}, FXhat{0}}, ctx);
  CHECK(!comm.has_d_terms());
  CHECK(circ_project(comm) == comm);
}

TEST_CASE("pbw defect: identity permutation and degree bounds") {
  auto p = dyadic_params(3);
  NCContext ctx(RealizationSpec::maggiore(), p, 4);

  CHECK(pbw_defect({0, 1}, {0, 1}, ctx).is_zero());
  CHECK(pbw_defect({0, 1, 2}, {0, 1, 2}, ctx).is_zero());

  // two-letter swap: projected defect is the degree-1 commutator polynomial
  NCOp d2 = pbw_defect({1, 0}, {0, 1}, ctx);
  NCOp proj = circ_project(d2);
  CHECK(proj.xhat_degree() == 1);
  NCOp expect = NCOp::xhat(1, 3, 4)
                    .scaled(XSeries::graded(4, 1, CRational(Rational(0), -p.a[0])));
  expect -= NCOp::xhat(0, 3, 4)
                .scaled(XSeries::graded(4, 1, CRational(Rational(0), -p.a[1])));
  CHECK(proj == expect);

  // all three-letter permutations: projected defect has degree <= 2
  std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& perm : perms) {
    for (const std::vector<int>& idx :
         {std::vector<int>{0, 1, 2}, std::vector<int>{0, 1, 1}, std::vector<int>{2, 1, 0}}) {
      NCOp defect = pbw_defect(perm, idx, ctx);
      CHECK(circ_project(defect).xhat_degree() <= 2);
    }
  }
}

TEST_CASE("quadratic invariant: undeformed limit") {
  DeformParams p(MinkVecQ(2), Rational(0));
  NCContext ctx(RealizationSpec::maggiore(), p, 2);
  auto inv = invariant_I2(ctx);
  NCOp expect = NCOp::zero(2, 2);
  for (int mu = 0; mu < 2; ++mu) {
    NCOp sq(2, 2);
    sq.add_term(mono::set(0, mu, 2), 0,
                XSeries::constant(2, CRational(Rational(metric_sign(mu)))));
    expect += sq;
  }
  CHECK(inv.value == expect);
  CHECK(inv.closed_form == expect);
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) CHECK(inv.lorentz_defect[mu][nu].is_zero());
}

TEST_CASE("quadratic invariant matches its closed form and is Lorentz-invariant") {
  for (int dim : {2, 3}) {
    auto p = dyadic_params(dim);
    NCContext ctx(RealizationSpec::maggiore(), p, 2);
    auto inv = invariant_I2(ctx);
    INFO("value: ", inv.value.str());
    INFO("closed: ", inv.closed_form.str());
    CHECK(inv.value == inv.closed_form);
    for (int mu = 0; mu < dim; ++mu)
      for (int nu = 0; nu < dim; ++nu) {
        INFO("defect ", mu, nu, ": ", inv.lorentz_defect[mu][nu].str());
        CHECK(inv.lorentz_defect[mu][nu].is_zero());
      }
  }
}

TEST_CASE("non-maggiore specs are rejected") {
  auto p = dyadic_params(2);
  CHECK_THROWS_AS(NCContext(RealizationSpec::unit(), p, 4), std::domain_error);
}
