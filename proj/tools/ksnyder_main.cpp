// Command-line surface for the verification suites and the individual
// momentum-space computations.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "ksny/suites.hpp"

using namespace ksny;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string vec_json(const MinkVec& v) {
  std::string s = "[";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += fmt(v[i]);
  }
  return s + "]";
}

std::string vec_text(const MinkVec& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ", ";
    s += fmt(v[i]);
  }
  return s + ")";
}

struct CommonOpts {
  std::string a_str = "0.1,0,0,0";
  std::string s_str = "0.01";
  std::string realization = "maggiore";
  std::string format = "text";
  std::string out_path;
  int order = 4;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int dim = 4;

  void attach(CLI::App* app) {
    app->add_option("--dim", dim, "dimension (time component first)");
    app->add_option("--a", a_str, "deformation vector, comma separated, time first");
    app->add_option("--s", s_str, "scalar deformation parameter");
    app->add_option("--realization", realization, "maggiore | unit | u=<value>");
    app->add_option("--order", order, "grading truncation order")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "seed for the sampled sweeps");
    app->add_option("--tol", tol, "tolerance for numeric checks")->check(CLI::PositiveNumber);
    app->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    app->add_option("--out", out_path, "also write the report to this path");
  }

  RealizationSpec spec() const {
    if (realization == "maggiore") return RealizationSpec::maggiore();
    if (realization == "unit") return RealizationSpec::unit();
    if (realization.rfind("u=", 0) == 0)
      return RealizationSpec::general_u(Rational::parse(realization.substr(2)));
    throw std::invalid_argument("unknown realization: " + realization);
  }

  MinkVecQ a_exact() const {
    std::vector<Rational> comps;
    std::string cur;
    for (char c : a_str + ",") {
      if (c == ',') {
        if (!cur.empty()) comps.push_back(Rational::parse(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (static_cast<int>(comps.size()) != dim)
      throw std::invalid_argument("--a must have exactly --dim components");
    return MinkVecQ(std::vector<Rational>(comps.begin(), comps.end()));
  }

  DeformParams params() const { return DeformParams(a_exact(), Rational::parse(s_str)); }

  void emit(const std::string& text) const {
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << text;
    }
  }
};

MinkVec parse_vec(const std::string& s, int dim) {
  std::vector<double> comps;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) comps.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (static_cast<int>(comps.size()) != dim)
    throw std::invalid_argument("vector needs exactly " + std::to_string(dim) +
                                " components: " + s);
  return MinkVec(comps);
}

/// Grade-by-grade table of a quantity that is polynomial of degree two in
/// the deformation scale: three evaluations pin the three coefficients.
std::vector<MinkVec> grade_table(const std::function<MinkVec(double)>& at_scale, int dim) {
  MinkVec f0 = at_scale(0.0), fp = at_scale(1.0), fm = at_scale(-1.0);
  MinkVec g0 = f0, g1(dim), g2(dim);
  for (int i = 0; i < dim; ++i) {
    g1[i] = (fp[i] - fm[i]) / 2.0;
    g2[i] = (fp[i] + fm[i]) / 2.0 - f0[i];
  }
  return {g0, g1, g2};
}

DeformParams scaled_params(const DeformParams& p, double eps) {
  const long long den = 1000000;
  MinkVecQ a(p.dim());
  for (int i = 0; i < p.dim(); ++i)
    a[i] = p.a[i] * Rational(static_cast<long long>(std::llround(eps * den)), den);
  Rational s = p.s * Rational(static_cast<long long>(std::llround(eps * eps * den)), den);
  return DeformParams(a, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic-numeric verification kit for kappa-Snyder deformed Minkowski space"};
  app.require_subcommand(1);

  CommonOpts common;

  auto* verify = app.add_subcommand("verify", "run the full verification suites");
  common.attach(verify);

  auto* comp = app.add_subcommand("compose", "deformed momentum composition D(k,q)");
  std::string k_str = "0.3,0.2", q_str = "0.1,-0.2", method = "exact";
  double u_val = 0.5;
  int steps = 1000;
  common.attach(comp);
  comp->add_option("--k", k_str, "first momentum");
  comp->add_option("--q", q_str, "second momentum");
  comp->add_option("--method", method, "exact | ode | perturbative")
      ->check(CLI::IsMember({"exact", "ode", "perturbative"}));
  comp->add_option("--u", u_val, "realization parameter for perturbative evaluation");
  comp->add_option("--steps", steps, "flow steps for the ode method");

  auto* anti = app.add_subcommand("antipode", "deformed inverse momentum S(k)");
  std::string ak_str = "0.3,0.4", amethod = "numeric";
  common.attach(anti);
  anti->add_option("--k", ak_str, "momentum");
  anti->add_option("--method", amethod, "numeric | perturbative")
      ->check(CLI::IsMember({"numeric", "perturbative"}));

  auto* kv = app.add_subcommand("kvec", "one-wave momentum map K(k) or its inverse");
  std::string kk_str = "0.3,0.4";
  bool inverse = false;
  int ksteps = 1000;
  common.attach(kv);
  kv->add_option("--k", kk_str, "momentum");
  kv->add_flag("--inverse", inverse, "apply the Newton inverse instead");
  kv->add_option("--steps", ksteps, "flow steps for non-closed realizations");

  auto* ode = app.add_subcommand("ode", "integrate the composition flow directly");
  std::string ok_str = "0.3,0.2", oq_str = "0.1,-0.2";
  int osteps = 1000;
  common.attach(ode);
  ode->add_option("--k", ok_str, "first momentum");
  ode->add_option("--q", oq_str, "initial momentum");
  ode->add_option("--steps", osteps, "fixed step count")->check(CLI::PositiveNumber);

  auto* star = app.add_subcommand("star", "plane-wave star product phase");
  std::string sk_str = "0.3,0.2", sq_str = "0.1,-0.2";
  common.attach(star);
  star->add_option("--k", sk_str, "left momentum");
  star->add_option("--q", sq_str, "right momentum");

  auto* expand = app.add_subcommand(
      "expand", "grade-by-grade tables of the composition, momentum maps and antipode");
  std::string ek_str = "0.3,0.2", eq_str = "0.1,-0.2";
  double eu = 0.5;
  common.attach(expand);
  expand->add_option("--k", ek_str, "first momentum");
  expand->add_option("--q", eq_str, "second momentum");
  expand->add_option("--u", eu, "realization parameter of the second-order formulas");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      SuiteConfig cfg;
      cfg.dim = common.dim;
      cfg.order = common.order;
      cfg.spec = common.spec();
      DeformParams p = common.params();
      cfg.a = p.a;
      cfg.s = p.s;
      cfg.seed = common.seed;
      cfg.tol = common.tol;
      auto reports = run_all_suites(cfg);
      common.emit(common.format == "json" ? report_json(reports) : report_text(reports));
      return all_pass(reports) ? 0 : 1;
    }

    DeformParams p = common.params();
    auto spec = common.spec();

    if (comp->parsed()) {
      MinkVec k = parse_vec(k_str, common.dim), q = parse_vec(q_str, common.dim);
      MinkVec value(common.dim);
      ComposeDiagnostics diag;
      if (method == "exact") {
        if (!spec.is_maggiore())
          throw std::invalid_argument("exact path requires --realization maggiore");
        auto r = compose(spec, p, k, q);
        value = r.value;
        diag = r.diagnostics;
      } else if (method == "ode") {
        MinkVec kin = kvec_inverse(spec, p, k, {}, steps, &diag);
        auto r = compose_ode(spec, p, kin, q, steps);
        value = r.value;
        diag.residual = std::max(diag.residual, r.diagnostics.residual);
        diag.ode_steps = steps;
      } else {
        value = compose_perturbative(u_val, p, k, q);
      }
      if (common.format == "json")
        common.emit("{\"value\": " + vec_json(value) + ", \"method\": \"" + method +
                    "\", \"residual\": " + fmt(diag.residual) +
                    ", \"newton_iters\": " + std::to_string(diag.newton_iters) +
                    ", \"ode_steps\": " + std::to_string(diag.ode_steps) + "}\n");
      else
        common.emit("D(k,q) = " + vec_text(value) + "  [" + method + ", residual " +
                    fmt(diag.residual) + "]\n");
      return 0;
    }

    if (anti->parsed()) {
      MinkVec k = parse_vec(ak_str, common.dim);
      if (amethod == "perturbative") {
        MinkVec s = antipode_perturbative(p, k);
        if (common.format == "json")
          common.emit("{\"value\": " + vec_json(s) + ", \"method\": \"perturbative\"}\n");
        else
          common.emit("S(k) = " + vec_text(s) + "  [perturbative]\n");
        return 0;
      }
      auto r = antipode(spec, p, k);
      if (common.format == "json")
        common.emit("{\"value\": " + vec_json(r.value) +
                    ", \"method\": \"numeric\", \"residual_left\": " + fmt(r.residual_left) +
                    ", \"residual_right\": " + fmt(r.residual_right) +
                    ", \"newton_iters\": " + std::to_string(r.newton_iters) + "}\n");
      else
        common.emit("S(k) = " + vec_text(r.value) + "  [residuals " + fmt(r.residual_left) +
                    " / " + fmt(r.residual_right) + "]\n");
      return 0;
    }

    if (kv->parsed()) {
      MinkVec k = parse_vec(kk_str, common.dim);
      MinkVec value =
          inverse ? kvec_inverse(spec, p, k, {}, ksteps) : kvec(spec, p, k, ksteps);
      if (common.format == "json")
        common.emit("{\"value\": " + vec_json(value) + ", \"inverse\": " +
                    (inverse ? std::string("true") : std::string("false")) + "}\n");
      else
        common.emit(std::string(inverse ? "Kinv(k)" : "K(k)") + " = " + vec_text(value) +
                    "\n");
      return 0;
    }

    if (ode->parsed()) {
      MinkVec k = parse_vec(ok_str, common.dim), q = parse_vec(oq_str, common.dim);
      auto r = compose_ode(spec, p, k, q, osteps, common.tol);
      if (common.format == "json")
        common.emit("{\"value\": " + vec_json(r.value) +
                    ", \"richardson_estimate\": " + fmt(r.diagnostics.residual) +
                    ", \"steps\": " + std::to_string(osteps) + ", \"converged\": " +
                    (r.diagnostics.converged ? "true" : "false") + "}\n");
      else
        common.emit("P(1) = " + vec_text(r.value) + "  [richardson " +
                    fmt(r.diagnostics.residual) + ", " + std::to_string(osteps) +
                    " steps]\n");
      return 0;
    }

    if (star->parsed()) {
      MinkVec k = parse_vec(sk_str, common.dim), q = parse_vec(sq_str, common.dim);
      PlaneWave fg =
          star_plane_waves(spec, p, PlaneWave{k, {1.0, 0.0}}, PlaneWave{q, {1.0, 0.0}});
      if (common.format == "json")
        common.emit("{\"momentum\": " + vec_json(fg.momentum) + ", \"amplitude\": [" +
                    fmt(fg.amplitude.real()) + ", " + fmt(fg.amplitude.imag()) + "]}\n");
      else
        common.emit("phase momentum = " + vec_text(fg.momentum) + "\n");
      return 0;
    }

    if (expand->parsed()) {
      MinkVec k = parse_vec(ek_str, common.dim), q = parse_vec(eq_str, common.dim);
      auto tbl_D = grade_table(
          [&](double e) { return compose_perturbative(eu, scaled_params(p, e), k, q); },
          common.dim);
      auto tbl_K = grade_table(
          [&](double e) { return kvec_perturbative(eu, scaled_params(p, e), k); },
          common.dim);
      auto tbl_Ki = grade_table(
          [&](double e) { return kvec_inverse_perturbative(eu, scaled_params(p, e), k); },
          common.dim);
      bool timelike = true;
      for (int i = 1; i < common.dim; ++i) timelike = timelike && p.a[i].is_zero();
      std::string out;
      auto table = [&](const std::string& name, const std::vector<MinkVec>& t) {
        if (common.format == "json") {
          out += "  \"" + name + "\": [" + vec_json(t[0]) + ", " + vec_json(t[1]) + ", " +
                 vec_json(t[2]) + "]";
        } else {
          out += name + ":\n  grade 0: " + vec_text(t[0]) + "\n  grade 1: " +
                 vec_text(t[1]) + "\n  grade 2: " + vec_text(t[2]) + "\n";
        }
      };
      if (common.format == "json") out += "{\n";
      table("composition", tbl_D);
      if (common.format == "json") out += ",\n";
      table("momentum_map", tbl_K);
      if (common.format == "json") out += ",\n";
      table("momentum_map_inverse", tbl_Ki);
      if (timelike) {
        auto tbl_S = grade_table(
            [&](double e) { return antipode_perturbative(scaled_params(p, e), k); },
            common.dim);
        if (common.format == "json") out += ",\n";
        table("antipode", tbl_S);
      }
      if (common.format == "json") out += "\n}\n";
      common.emit(out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
