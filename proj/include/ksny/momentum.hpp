#ifndef KSNY_MOMENTUM_HPP
#define KSNY_MOMENTUM_HPP

#include "ksny/params.hpp"

namespace ksny {

enum class ComposeMethod { Exact, Ode, ClosedCase, Perturbative };

struct ComposeDiagnostics {
  double residual = 0.0;  // Newton residual or Richardson error estimate
  int newton_iters = 0;
  int ode_steps = 0;
  bool converged = true;
};

struct ComposeResult {
  MinkVec value;
  ComposeMethod method = ComposeMethod::Exact;
  ComposeDiagnostics diagnostics;
};

struct NewtonOptions {
  double tol = 1e-12;
  int max_iters = 50;
  double fd_step = 1e-7;
};

/// Phi_{mu alpha} evaluated at D = i P; real for real momenta. Throws a
/// domain error when a closed-form square root turns negative.
std::vector<std::vector<double>> phi_matrix(const RealizationSpec& spec,
                                            const DeformParams& params, const MinkVec& P);

/// Flows dP/dt = Phi(iP) . k from P(0) = q to t = 1 with the classical
/// fourth-order one-step method; the returned value is the doubled-step run
/// and the diagnostics carry the step-doubling error estimate.
ComposeResult compose_ode(const RealizationSpec& spec, const DeformParams& params,
                          const MinkVec& k, const MinkVec& q, int steps = 1000,
                          double richardson_tol = 1e-8);

/// Exact flow for the maggiore realization. All dependence on
/// W = sqrt((ak)^2 - s k^2) goes through even analytic functions, so the
/// result is real for every real input with 1 + (a^2-s) q^2 >= 0.
MinkVec p_exact_maggiore(const DeformParams& params, const MinkVec& k, const MinkVec& q,
                         double t);

/// K(k): closed form for maggiore, the q = 0 flow otherwise.
MinkVec kvec(const RealizationSpec& spec, const DeformParams& params, const MinkVec& k,
             int steps = 1000);
MinkVec kvec_maggiore(const DeformParams& params, const MinkVec& k);

/// Newton inversion of K with finite-difference Jacobian, initial guess k.
MinkVec kvec_inverse(const RealizationSpec& spec, const DeformParams& params,
                     const MinkVec& k, const NewtonOptions& opts = {}, int steps = 1000,
                     ComposeDiagnostics* diag = nullptr);

/// Deformed momentum sum: the composition law evaluated as P(K^{-1}(k), q);
/// exact closed form plus Newton for maggiore, the flow path otherwise.
ComposeResult compose(const RealizationSpec& spec, const DeformParams& params,
                      const MinkVec& k, const MinkVec& q, const NewtonOptions& opts = {},
                      int steps = 1000);

/// Closed-form composition laws for the three special cases. The leg
/// convention is fixed against the flow: the left tensor slot acts on k, the
/// right on q, with every derivative evaluated at i times the leg momentum.
enum class ClosedCase { Kappa, SnyderUnit, SnyderMaggiore };
MinkVec compose_closed(ClosedCase cs, const DeformParams& params, const MinkVec& k,
                       const MinkVec& q);

/// Second-order formulas for f(B) = 1 - uB; literal polynomial evaluation.
MinkVec compose_perturbative(double u, const DeformParams& params, const MinkVec& k,
                             const MinkVec& q);
MinkVec kvec_perturbative(double u, const DeformParams& params, const MinkVec& k);
MinkVec kvec_inverse_perturbative(double u, const DeformParams& params, const MinkVec& k);

struct AntipodeResult {
  MinkVec value;
  double residual_left = 0.0;   // |D(S, k)|
  double residual_right = 0.0;  // |D(k, S)|
  int newton_iters = 0;
};

/// Deformed inverse momentum: Newton on D(x, k) = 0 from the guess -k; the
/// mirror condition is evaluated at the solution and reported.
AntipodeResult antipode(const RealizationSpec& spec, const DeformParams& params,
                        const MinkVec& k, const NewtonOptions& opts = {}, int steps = 1000);

/// Second-order antipode for purely timelike a = (a0, 0, ..., 0).
MinkVec antipode_perturbative(const DeformParams& params, const MinkVec& k);

/// Analytic Jacobians of the exact maggiore composition law with respect to
/// both arguments (lower-index derivatives): Jk[al][be] = dD_al/dk_be and
/// Jq[al][be] = dD_al/dq_be.
struct ComposeJacobians {
  std::vector<std::vector<double>> Jk, Jq;
};
ComposeJacobians compose_jacobians(const DeformParams& params, const MinkVec& k,
                                   const MinkVec& q, const NewtonOptions& opts = {});

/// Shift operator and d'Alembertian evaluated on momenta, together with
/// their expressions through the inverse momentum map (maggiore); both sides
/// are returned so callers can assert the identity.
struct MomentumInvariants {
  double zinv_direct, zinv_via_inverse;
  double box_direct, box_via_inverse;
};
double zinv_of_k(const DeformParams& params, const MinkVec& k);
double box_of_k(const DeformParams& params, const MinkVec& k);
MomentumInvariants momentum_invariants(const DeformParams& params, const MinkVec& k,
                                       const NewtonOptions& opts = {});

}  // namespace ksny

#endif
