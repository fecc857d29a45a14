#pragma once

#include <cstdint>
#include <string_view>

#include "quasinv/vec.hpp"

namespace quasinv {

// FNV-1a, used to derive stable per-task seeds from human-readable labels.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic generator with a fixed algorithm so results do not depend on
// the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Decorrelate trivially related seeds.
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Log-uniform over [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return lo * std::exp(uniform() * std::log(hi / lo));
  }

  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  // Standard normal via Box-Muller (single value; the twin is discarded to
  // keep the call sequence independent of downstream consumption).
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi() * u2);
  }

  template <int N>
  Vec<N> unit_vector() {
    while (true) {
      Vec<N> g;
      for (int i = 0; i < N; ++i) g[i] = normal();
      const double n = norm(g);
      if (n > 1e-8) return g / n;
    }
  }

  // Unit vector within angle `theta` of `axis` (uniform over the spherical cap
  // in 3D, uniform in angle in 2D).
  template <int N>
  Vec<N> cap_vector(const Vec<N>& axis, double theta);

 private:
  std::uint64_t state_;
};

template <>
inline Vec2 Rng::cap_vector<2>(const Vec2& axis, double theta) {
  const double a = uniform(-theta, theta);
  const double c = std::cos(a), s = std::sin(a);
  return vec2(c * axis[0] - s * axis[1], s * axis[0] + c * axis[1]);
}

template <>
inline Vec3 Rng::cap_vector<3>(const Vec3& axis, double theta) {
  // Uniform on the cap: cos(angle) uniform in [cos(theta), 1].
  const double cz = 1.0 - uniform() * (1.0 - std::cos(theta));
  const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
  const double phi = uniform(0.0, 2.0 * pi());
  // Orthonormal frame around the axis.
  Vec3 e1 = std::fabs(axis[0]) < 0.9 ? vec3(1, 0, 0) : vec3(0, 1, 0);
  e1 = e1 - dot(e1, axis) * axis;
  e1 = e1 / norm(e1);
  Vec3 e2 = vec3(axis[1] * e1[2] - axis[2] * e1[1], axis[2] * e1[0] - axis[0] * e1[2],
                 axis[0] * e1[1] - axis[1] * e1[0]);
  return cz * axis + (sz * std::cos(phi)) * e1 + (sz * std::sin(phi)) * e2;
}

}  // namespace quasinv
