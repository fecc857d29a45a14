#pragma once

#include <cmath>

#include "quasinv/starlike.hpp"
#include "quasinv/vec.hpp"

namespace quasinv {

// Pi(x) = x / |x|, the radial projection onto the unit sphere.
template <int N>
UnitDirection<N> radial_projection(const Vec<N>& x) {
  return UnitDirection<N>(x);
}

template <int N>
double boundary_radius(const StarlikeBoundary<N>& M, const Vec<N>& x) {
  return M.radius_at(x);
}

// phi(u) = r(u) * u, the polar parametrization of the boundary.
template <int N>
Vec<N> polar_point(const StarlikeBoundary<N>& M, const UnitDirection<N>& u) {
  return M.radius_dir(u.u) * u.u;
}

// phi_a(x) = |x|^a * phi(x/|x|), with 0 -> 0 and inf -> inf.
template <int N>
ExtendedPoint<N> radial_extension(const StarlikeBoundary<N>& M, double a,
                                  const ExtendedPoint<N>& x) {
  if (!(a > 0)) throw std::domain_error("radial extension exponent must be positive");
  if (x.infinite) return ExtendedPoint<N>::infinity();
  if (x.is_origin()) return ExtendedPoint<N>::finite(Vec<N>{});
  const UnitDirection<N> u(x.p);
  const double mag = std::pow(norm(x.p), a) * M.radius_dir(u.u);
  return ExtendedPoint<N>::finite(mag * u.u);
}

template <int N>
ExtendedPoint<N> radial_extension_inverse(const StarlikeBoundary<N>& M, double a,
                                          const ExtendedPoint<N>& y) {
  if (!(a > 0)) throw std::domain_error("radial extension exponent must be positive");
  if (y.infinite) return ExtendedPoint<N>::infinity();
  if (y.is_origin()) return ExtendedPoint<N>::finite(Vec<N>{});
  const UnitDirection<N> u(y.p);
  const double mag = std::pow(norm(y.p) / M.radius_dir(u.u), 1.0 / a);
  return ExtendedPoint<N>::finite(mag * u.u);
}

// Inversion in the sphere S(center, r): center -> inf, inf -> center.
template <int N>
ExtendedPoint<N> sphere_inversion(const Vec<N>& center, double r, const ExtendedPoint<N>& x) {
  if (!(r > 0)) throw std::domain_error("inversion radius must be positive");
  if (x.infinite) return ExtendedPoint<N>::finite(center);
  const Vec<N> d = x.p - center;
  const double q = norm_sq(d);
  if (q == 0.0) return ExtendedPoint<N>::infinity();
  return ExtendedPoint<N>::finite(center + (r * r / q) * d);
}

// Quasi-inversion in the starlike boundary M: f(x) = (r_x^2 / |x|^2) x, where
// r_x is the boundary radius along the ray of x. Fixes M pointwise, swaps
// 0 and inf, and preserves every ray through the origin by construction
// (the output direction is the input's normalized direction).
template <int N>
ExtendedPoint<N> quasi_inversion(const StarlikeBoundary<N>& M, const ExtendedPoint<N>& x) {
  if (x.infinite) return ExtendedPoint<N>::finite(Vec<N>{});
  if (x.is_origin()) return ExtendedPoint<N>::infinity();
  const UnitDirection<N> u(x.p);
  const double r = M.radius_dir(u.u);
  return ExtendedPoint<N>::finite((r * r / norm(x.p)) * u.u);
}

// Finite-input conveniences for hot loops (callers guarantee x != 0).
template <int N>
Vec<N> quasi_inversion_finite(const StarlikeBoundary<N>& M, const Vec<N>& x) {
  const UnitDirection<N> u(x);
  const double r = M.radius_dir(u.u);
  return (r * r / norm(x)) * u.u;
}

}  // namespace quasinv
