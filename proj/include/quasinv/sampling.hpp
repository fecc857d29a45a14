#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "quasinv/maps.hpp"
#include "quasinv/rng.hpp"
#include "quasinv/starlike.hpp"

namespace quasinv {

// Running sup/inf of a sampled ratio together with the witness pairs.
template <int N>
struct RatioEstimate {
  double sup_value = -std::numeric_limits<double>::infinity();
  double inf_value = std::numeric_limits<double>::infinity();
  Vec<N> sup_x{}, sup_y{}, inf_x{}, inf_y{};
  long n_pairs = 0;
  std::string sampler;
  std::uint64_t seed = 0;

  void consider(double ratio, const Vec<N>& x, const Vec<N>& y) {
    ++n_pairs;
    if (ratio > sup_value) {
      sup_value = ratio;
      sup_x = x;
      sup_y = y;
    }
    if (ratio < inf_value) {
      inf_value = ratio;
      inf_x = x;
      inf_y = y;
    }
  }

  void merge(const RatioEstimate& o) {
    n_pairs += o.n_pairs;
    if (o.sup_value > sup_value) {
      sup_value = o.sup_value;
      sup_x = o.sup_x;
      sup_y = o.sup_y;
    }
    if (o.inf_value < inf_value) {
      inf_value = o.inf_value;
      inf_x = o.inf_x;
      inf_y = o.inf_y;
    }
  }
};

template <int N>
Vec<N> rotate_toward(const Vec<N>& u, const Vec<N>& w, double angle) {
  return std::cos(angle) * u + std::sin(angle) * w;
}

template <int N>
Vec<N> random_tangent(Rng& rng, const Vec<N>& u) {
  if constexpr (N == 2) {
    const Vec2 t = vec2(-u[1], u[0]);
    return rng.uniform() < 0.5 ? t : -t;
  } else {
    while (true) {
      Vec<N> g = rng.template unit_vector<N>();
      g = g - dot(g, u) * u;
      const double n = norm(g);
      if (n > 1e-6) return g / n;
    }
  }
}

// Boundary pair sampler with three strata: independent pairs, nearby pairs,
// and symmetric pairs anchored at the minimal-radius point (the locus where
// the radial-projection Lipschitz bound is attained on starlike boundaries).
template <int N>
struct BoundaryPairSampler {
  const StarlikeBoundary<N>& M;

  std::pair<Vec<N>, Vec<N>> operator()(Rng& rng) const {
    const double pick = rng.uniform();
    if (pick < 0.5) {
      const Vec<N> u = rng.template unit_vector<N>();
      const Vec<N> v = rng.template unit_vector<N>();
      return {M.radius_dir(u) * u, M.radius_dir(v) * v};
    }
    if (pick < 0.9) {
      const Vec<N> u = rng.template unit_vector<N>();
      const double delta = rng.log_uniform(1e-7, 0.3);
      const Vec<N> v = rng.template cap_vector<N>(u, delta);
      return {M.radius_dir(u) * u, M.radius_dir(v) * v};
    }
    // Anchored stratum: symmetric offsets about the minimal-radius direction.
    const Vec<N> u0 = M.r_min_dir();
    const Vec<N> w = random_tangent<N>(rng, u0);
    const double delta = rng.log_uniform(1e-7, 1e-2);
    const Vec<N> u = rotate_toward(u0, w, delta);
    const Vec<N> v = rotate_toward(u0, w, -delta);
    return {M.radius_dir(u) * u, M.radius_dir(v) * v};
  }
};

// Pairs of finite nonzero points spanning several decades of radius, with
// near-coincident and same-ray strata mixed in.
template <int N>
struct SpacePairSampler {
  const StarlikeBoundary<N>& M;
  double radius_lo_factor = 1e-3;
  double radius_hi_factor = 1e3;

  Vec<N> point(Rng& rng) const {
    const Vec<N> u = rng.template unit_vector<N>();
    const double s = rng.log_uniform(radius_lo_factor * M.r_min(), radius_hi_factor * M.r_max());
    return s * u;
  }

  std::pair<Vec<N>, Vec<N>> operator()(Rng& rng) const {
    const double pick = rng.uniform();
    const Vec<N> x = point(rng);
    if (pick < 0.6) return {x, point(rng)};
    if (pick < 0.9) {
      const double delta = rng.log_uniform(1e-9, 1e-3) * norm(x);
      return {x, x + delta * rng.template unit_vector<N>()};
    }
    // Same ray: exercises the equality cases of the radial estimates.
    const double s = rng.log_uniform(0.1, 10.0);
    return {x, s * x};
  }
};

// Points of the open starlike region minus the origin: x = s * r(u) * u.
template <int N>
struct InteriorPointSampler {
  const StarlikeBoundary<N>& M;
  double s_lo = 1e-3, s_hi = 1.0;

  Vec<N> operator()(Rng& rng) const {
    const Vec<N> u = rng.template unit_vector<N>();
    const double s = rng.log_uniform(s_lo, s_hi);
    return (s * M.radius_dir(u)) * u;
  }
};

}  // namespace quasinv
