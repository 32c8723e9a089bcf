#ifndef KSNY_FRAME_HPP
#define KSNY_FRAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "ksny/params.hpp"
#include "ksny/weyl.hpp"

namespace ksny {

/// Taylor expansion of gamma2(B) = -(1 + 2 f f')/(f - 2 B f') in powers of B,
/// through degree deg. Exact; the denominator has constant term 1.
QSeries gamma2_taylor(const RealizationSpec& spec, int deg);

/// Numeric gamma2 at a given value of B (exact closed forms per kind; the
/// custom kind is a polynomial so the quotient is evaluated directly).
double gamma2_at(const RealizationSpec& spec, double B);

enum class MMode { Coordinate, FromXhat };

/// All realized operators of one (spec, params, order) choice, as
/// normal-ordered elements of the undeformed algebra. Immutable after build.
struct RealizedFrame {
  RealizationSpec spec;
  DeformParams params;
  int dim;
  int order;

  WeylOp op_A;       // i a.D, grade 1
  WeylOp op_D2;      // D.D, grade 0
  WeylOp op_B;       // (a^2-s) D.D, grade 2
  WeylOp f_op;       // f(B)
  WeylOp gamma2_op;  // gamma2(B)
  WeylOp phi;        // -A + f(B)
  WeylOp phi_inv;    // 1/phi

  std::vector<WeylOp> xhat;            // realized coordinates
  std::vector<std::vector<WeylOp>> M;  // coordinate-mode Lorentz generators
  WeylOp box;                          // generalized d'Alembertian
  std::vector<WeylOp> xinv;            // images of X under the inverse map
  std::vector<WeylOp> xtilde;          // Snyder-mapped coordinates

  std::optional<WeylOp> Z, Zinv;  // shift operator, maggiore only

  /// Phi_{mu nu}(D), the right side of the deformed Heisenberg relation.
  WeylOp phi_matrix_op(int mu, int nu) const;
};

RealizedFrame build_frame(const RealizationSpec& spec, const DeformParams& params,
                          int order);

/// Lorentz generators either as X_mu D_nu - X_nu D_mu or rebuilt from the
/// realized coordinates via 1/phi (shift operator for maggiore). Both modes
/// must agree.
std::vector<std::vector<WeylOp>> build_M(const RealizedFrame& frame, MMode mode);

/// (Z, Z^{-1}) for the maggiore realization; rejects other specs.
std::pair<WeylOp, WeylOp> build_Z(const RealizedFrame& frame);

struct IdentityCheck {
  std::string name;
  bool pass;
  std::string detail;
};

/// Computes every defining-relation residual as an operator; each must be the
/// zero element. Stops detail reporting at the first nonzero residual per
/// relation family but always evaluates all of them.
std::vector<IdentityCheck> verify_algebra(const RealizedFrame& frame);

}  // namespace ksny

#endif
