#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace quasinv {

// Fixed-dimension Euclidean vector. N is 2 or 3 everywhere in this library,
// but nothing below depends on that.
template <int N>
struct Vec {
  std::array<double, N> v{};

  constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  friend constexpr Vec operator+(Vec a, const Vec& b) {
    for (int i = 0; i < N; ++i) a.v[i] += b.v[i];
    return a;
  }
  friend constexpr Vec operator-(Vec a, const Vec& b) {
    for (int i = 0; i < N; ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend constexpr Vec operator*(double s, Vec a) {
    for (int i = 0; i < N; ++i) a.v[i] *= s;
    return a;
  }
  friend constexpr Vec operator*(Vec a, double s) { return s * a; }
  friend constexpr Vec operator/(Vec a, double s) {
    for (int i = 0; i < N; ++i) a.v[i] /= s;
    return a;
  }
  constexpr Vec operator-() const {
    Vec r;
    for (int i = 0; i < N; ++i) r.v[i] = -v[i];
    return r;
  }
  Vec& operator+=(const Vec& b) {
    for (int i = 0; i < N; ++i) v[i] += b.v[i];
    return *this;
  }
  friend constexpr bool operator==(const Vec& a, const Vec& b) { return a.v == b.v; }
};

template <int N>
constexpr double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0;
  for (int i = 0; i < N; ++i) s += a.v[i] * b.v[i];
  return s;
}

template <int N>
constexpr double norm_sq(const Vec<N>& x) {
  return dot(x, x);
}

// Overflow/underflow-safe Euclidean norm: scale by the largest component first.
template <int N>
double norm(const Vec<N>& x) {
  double m = 0;
  for (int i = 0; i < N; ++i) m = std::max(m, std::fabs(x.v[i]));
  if (m == 0.0) return 0.0;
  double s = 0;
  for (int i = 0; i < N; ++i) {
    const double t = x.v[i] / m;
    s += t * t;
  }
  return m * std::sqrt(s);
}

template <int N>
double dist(const Vec<N>& a, const Vec<N>& b) {
  return norm(a - b);
}

template <int N>
double max_abs(const Vec<N>& x) {
  double m = 0;
  for (int i = 0; i < N; ++i) m = std::max(m, std::fabs(x.v[i]));
  return m;
}

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

inline constexpr Vec2 vec2(double x, double y) { return Vec2{{x, y}}; }
inline constexpr Vec3 vec3(double x, double y, double z) { return Vec3{{x, y, z}}; }

// Direction on the unit sphere. Construction normalizes once through the
// largest component, so tiny and huge inputs land on the same direction.
template <int N>
struct UnitDirection {
  Vec<N> u;

  explicit UnitDirection(const Vec<N>& x) {
    const double m = max_abs(x);
    if (m == 0.0 || !std::isfinite(m))
      throw std::domain_error("projection undefined at origin");
    Vec<N> w = x / m;
    u = w / norm(w);
  }

  static UnitDirection from_unit(const Vec<N>& already_unit) {
    UnitDirection d(already_unit);
    return d;
  }
};

// Point of the one-point compactification of R^n. The point at infinity is
// a separate flag; the coordinate payload of an infinite point is ignored.
template <int N>
struct ExtendedPoint {
  Vec<N> p{};
  bool infinite = false;

  static ExtendedPoint infinity() {
    ExtendedPoint e;
    e.infinite = true;
    return e;
  }
  static ExtendedPoint finite(const Vec<N>& x) { return ExtendedPoint{x, false}; }
  bool is_origin() const { return !infinite && norm_sq(p) == 0.0; }

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.p == b.p;
  }
};

struct geometry_error : std::runtime_error {
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double pi() { return 3.141592653589793238462643383279502884; }

}  // namespace quasinv
