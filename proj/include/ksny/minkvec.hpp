#ifndef KSNY_MINKVEC_HPP
#define KSNY_MINKVEC_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ksny/rational.hpp"

namespace ksny {

/// Metric sign of coordinate mu for diag(-1,1,...,1); index 0 is time.
inline int metric_sign(int mu) { return mu == 0 ? -1 : 1; }

/// n-component vector in Minkowski signature diag(-1,1,...,1).
template <typename S>
struct MinkVecT {
  std::vector<S> c;

  MinkVecT() = default;
  explicit MinkVecT(int dim) : c(dim, S(0)) {
    if (dim < 2) throw std::invalid_argument("MinkVec: dimension must be >= 2");
  }
  MinkVecT(std::initializer_list<S> init) : c(init) {
    if (c.size() < 2) throw std::invalid_argument("MinkVec: dimension must be >= 2");
  }
  explicit MinkVecT(std::vector<S> comps) : c(std::move(comps)) {
    if (c.size() < 2) throw std::invalid_argument("MinkVec: dimension must be >= 2");
  }

  int dim() const { return static_cast<int>(c.size()); }
  const S& operator[](int i) const { return c[i]; }
  S& operator[](int i) { return c[i]; }

  friend MinkVecT operator+(const MinkVecT& u, const MinkVecT& v) {
    u.check_dim(v);
    MinkVecT r(u.dim());
    for (int i = 0; i < u.dim(); ++i) r.c[i] = u.c[i] + v.c[i];
    return r;
  }
  friend MinkVecT operator-(const MinkVecT& u, const MinkVecT& v) {
    u.check_dim(v);
    MinkVecT r(u.dim());
    for (int i = 0; i < u.dim(); ++i) r.c[i] = u.c[i] - v.c[i];
    return r;
  }
  MinkVecT operator-() const {
    MinkVecT r(dim());
    for (int i = 0; i < dim(); ++i) r.c[i] = -c[i];
    return r;
  }
  friend MinkVecT operator*(const S& s, const MinkVecT& v) {
    MinkVecT r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r.c[i] = s * v.c[i];
    return r;
  }

  void check_dim(const MinkVecT& o) const {
    if (c.size() != o.c.size())
      throw std::invalid_argument("MinkVec: dimension mismatch");
  }
};

/// -u0*v0 + sum_{i>=1} ui*vi.
template <typename S>
S mink_dot(const MinkVecT<S>& u, const MinkVecT<S>& v) {
  u.check_dim(v);
  S acc = -(u[0] * v[0]);
  for (int i = 1; i < u.dim(); ++i) acc = acc + u[i] * v[i];
  return acc;
}

template <typename S>
S mink_sq(const MinkVecT<S>& v) {
  return mink_dot(v, v);
}

using MinkVec = MinkVecT<double>;
using MinkVecQ = MinkVecT<Rational>;

inline MinkVec to_double(const MinkVecQ& v) {
  MinkVec r(v.dim());
  for (int i = 0; i < v.dim(); ++i) r[i] = v[i].to_double();
  return r;
}

/// Euclidean norm of the component vector, used for numeric residuals.
inline double comp_norm(const MinkVec& v) {
  double acc = 0;
  for (int i = 0; i < v.dim(); ++i) acc += v[i] * v[i];
  return std::sqrt(acc);
}

/// Standard boost in the (0,i) plane or rotation in an (i,j) plane, i,j >= 1.
/// Preserves mink_dot to machine precision.
inline MinkVec lorentz_boost(const MinkVec& v, double rapidity, int p, int q) {
  if (p == q || p < 0 || q < 0 || p >= v.dim() || q >= v.dim())
    throw std::invalid_argument("lorentz_boost: invalid plane");
  MinkVec r = v;
  if (p > q) std::swap(p, q);
  if (p == 0) {
    r[0] = std::cosh(rapidity) * v[0] + std::sinh(rapidity) * v[q];
    r[q] = std::sinh(rapidity) * v[0] + std::cosh(rapidity) * v[q];
  } else {
    r[p] = std::cos(rapidity) * v[p] - std::sin(rapidity) * v[q];
    r[q] = std::sin(rapidity) * v[p] + std::cos(rapidity) * v[q];
  }
  return r;
}

}  // namespace ksny

#endif
