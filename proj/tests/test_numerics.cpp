#include <doctest.h>

#include <random>

#include "ksny/minkvec.hpp"
#include "ksny/params.hpp"
#include "ksny/series.hpp"

using namespace ksny;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
  long long num = static_cast<long long>(rng() % 7) - 3;
  long long den = 1 + static_cast<long long>(rng() % 4);
  return Rational(num, den);
}

QSeries rand_series(std::mt19937_64& rng, int order) {
  QSeries s(order);
  for (int d = 0; d <= order; ++d) s[d] = rand_rational(rng);
  return s;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational::parse("0.1") == Rational(1, 10));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("7/20") == Rational(7, 20));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("minkowski dot follows diag(-1,1,...) signature") {
  MinkVec e0{1.0, 0.0};
  MinkVec e1{0.0, 1.0};
  CHECK(mink_dot(e0, e0) == -1.0);
  CHECK(mink_dot(e1, e1) == 1.0);
  MinkVec u{3.0, 4.0};
  MinkVec v{1.0, 2.0};
  CHECK(mink_dot(u, v) == 5.0);
  CHECK(mink_dot(v, u) == 5.0);
  MinkVec w{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(mink_dot(u, w), std::invalid_argument);
}

TEST_CASE("minkowski dot is symmetric and bilinear") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    MinkVec u(4), v(4), w(4);
    for (int i = 0; i < 4; ++i) {
      u[i] = dist(rng);
      v[i] = dist(rng);
      w[i] = dist(rng);
    }
    double al = dist(rng);
    CHECK(mink_dot(u, v) == doctest::Approx(mink_dot(v, u)).epsilon(1e-14));
    CHECK(mink_dot(u, v + (al * w)) ==
          doctest::Approx(mink_dot(u, v) + al * mink_dot(u, w)).epsilon(1e-12));
  }
}

TEST_CASE("series forms a commutative ring on exact scalars") {
  std::mt19937_64 rng(11);
  const int order = 4;
  for (int trial = 0; trial < 40; ++trial) {
    QSeries a = rand_series(rng, order);
    QSeries b = rand_series(rng, order);
    QSeries c = rand_series(rng, order);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("series reciprocal inverts within the truncated ring") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries a = rand_series(rng, 4);
    a[0] = Rational(1 + static_cast<long long>(rng() % 3));
    CHECK(a * a.reciprocal() == QSeries::one(4));
  }
}

TEST_CASE("analytic application: sqrt(1-t) on a grade-2 argument") {
  // sqrt(1-t) Taylor: 1, -1/2, -1/8, -1/16, -5/128
  auto sqrt_taylor = [](int m) -> Rational {
    static const Rational c[] = {Rational(1), Rational(-1, 2), Rational(-1, 8),
                                 Rational(-1, 16), Rational(-5, 128)};
    return m < 5 ? c[m] : Rational(0);
  };
  Rational cval(3, 7);
  QSeries arg = QSeries::graded(4, 2, cval);
  QSeries out = series_apply_analytic(sqrt_taylor, arg);
  CHECK(out[0] == Rational(1));
  CHECK(out[1] == Rational(0));
  CHECK(out[2] == -cval / Rational(2));
  CHECK(out[3] == Rational(0));
  CHECK(out[4] == -(cval * cval) / Rational(8));
}

TEST_CASE("analytic application: identity Taylor returns the argument") {
  std::mt19937_64 rng(17);
  QSeries arg = rand_series(rng, 4);
  arg[0] = Rational(0);
  auto ident = [](int m) { return m == 1 ? Rational(1) : Rational(0); };
  CHECK(series_apply_analytic(ident, arg) == arg);
}

TEST_CASE("analytic application: geometric series against long division") {
  // 1/(1-t) applied to S equals the long-division reciprocal of (1 - S).
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries s = rand_series(rng, 4);
    s[0] = Rational(0);
    auto geom = [](int) { return Rational(1); };
    QSeries via_taylor = series_apply_analytic(geom, s);

    // long-division oracle: q with (1 - s) * q = 1, solved degree by degree
    QSeries denom = QSeries::one(4) - s;
    QSeries q(4);
    q[0] = Rational(1) / denom[0];
    for (int d = 1; d <= 4; ++d) {
      Rational acc(0);
      for (int j = 1; j <= d; ++j) acc += denom[j] * q[d - j];
      q[d] = -acc / denom[0];
    }
    CHECK(via_taylor == q);
  }
}

TEST_CASE("analytic application composes with inner series") {
  // Applying the Taylor of sqrt(1+x) to x = -t reproduces the Taylor of
  // sqrt(1-t), and squaring recovers 1 - t within the truncated ring.
  auto sqrt1p = [](int m) -> Rational {
    static const Rational b[] = {Rational(1), Rational(1, 2), Rational(-1, 8),
                                 Rational(1, 16), Rational(-5, 128)};
    return m < 5 ? b[m] : Rational(0);
  };
  QSeries t = QSeries::graded(4, 1, Rational(1));
  QSeries direct = series_apply_analytic(sqrt1p, -t);
  const Rational expect[] = {Rational(1), Rational(-1, 2), Rational(-1, 8),
                             Rational(-1, 16), Rational(-5, 128)};
  for (int m = 0; m <= 4; ++m) CHECK(direct[m] == expect[m]);
  CHECK(direct * direct == QSeries::one(4) - t);
}

TEST_CASE("analytic application rejects nonzero constant term") {
  QSeries bad = QSeries::one(4);
  auto geom = [](int) { return Rational(1); };
  CHECK_THROWS_AS(series_apply_analytic(geom, bad), std::domain_error);
}

TEST_CASE("polynomial application allows nonzero constant term") {
  QSeries arg = QSeries::one(4) + QSeries::graded(4, 1, Rational(2));
  std::vector<Rational> poly{Rational(1), Rational(3)};  // 1 + 3t
  QSeries out = series_apply_poly(poly, arg);
  CHECK(out[0] == Rational(4));
  CHECK(out[1] == Rational(6));
}

TEST_CASE("lorentz boost and rotation preserve the interval") {
  MinkVec v{1.0, 0.0};
  MinkVec same = lorentz_boost(v, 0.0, 0, 1);
  CHECK(same[0] == 1.0);
  CHECK(same[1] == 0.0);

  double chi = 0.37;
  MinkVec boosted = lorentz_boost(v, chi, 0, 1);
  CHECK(boosted[0] == doctest::Approx(std::cosh(chi)).epsilon(1e-15));
  CHECK(boosted[1] == doctest::Approx(std::sinh(chi)).epsilon(1e-15));

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    MinkVec u(4);
    for (int i = 0; i < 4; ++i) u[i] = dist(rng);
    int p = static_cast<int>(rng() % 4);
    int q = static_cast<int>(rng() % 4);
    if (p == q) continue;
    MinkVec img = lorentz_boost(u, dist(rng), p, q);
    CHECK(std::abs(mink_dot(img, img) - mink_dot(u, u)) < 1e-13);
  }
  CHECK_THROWS_AS(lorentz_boost(v, 1.0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(lorentz_boost(v, 1.0, 0, 5), std::invalid_argument);
}
