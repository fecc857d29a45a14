#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "quasinv/maps.hpp"
#include "quasinv/optim.hpp"
#include "quasinv/parallel.hpp"
#include "quasinv/sampling.hpp"
#include "quasinv/starlike.hpp"

namespace quasinv {

// Shrinking neighborhood radii (fractions of r_min) used when estimating the
// liminf tangent angle by chord sampling.
struct EpsSchedule {
  std::vector<double> radius_fractions = {1e-2, 1e-3, 1e-4};
  int samples_2d = 256;
  int samples_3d = 4096;

  void validate() const {
    if (radius_fractions.empty()) throw std::invalid_argument("empty eps schedule");
    double prev = std::numeric_limits<double>::infinity();
    for (double f : radius_fractions) {
      if (!(f > 0) || !(f < prev)) throw std::invalid_argument("eps radii must decrease");
      prev = f;
    }
  }
};

// cot(alpha_t) = r'(t) / r(t) on the smooth pieces of a polar curve.
inline double cot_alpha_smooth(const PolarCurve2D& curve, double t) {
  return curve.derivative(t) / curve.value(t);
}

// Acute fold of the tangent angle: atan2(r, |r'|) = min(alpha_t, pi - alpha_t).
inline double alpha_fold(const PolarCurve2D& curve, double t) {
  return std::atan2(curve.value(t), std::fabs(curve.derivative(t)));
}

template <int N>
struct AlphaAtResult {
  double alpha = 0;                 // finest-level minimum
  std::vector<double> per_level;    // minimum per schedule radius (coarse -> fine)
  Vec<N> witness_z{};               // boundary point realizing the finest minimum
};

namespace detail {

// Acute angle between the chord [z, x] and the ray through 0 and x.
template <int N>
double chord_angle(const Vec<N>& x_dir, const Vec<N>& x, const Vec<N>& z) {
  const Vec<N> d = z - x;
  const double L = norm(d);
  if (!(L > 0)) return std::numeric_limits<double>::infinity();
  const double c = std::fabs(dot(d, x_dir)) / L;
  return std::acos(std::clamp(c, 0.0, 1.0));
}

// Deterministic direction lattice inside the cap of angular radius delta
// around `axis`: area-uniform spiral plus a log-scaled tail so chords of many
// lengths appear at every level.
template <int N>
Vec<N> cap_lattice_dir(const Vec<N>& axis, double delta, int j, int m) {
  const double frac = (static_cast<double>(j) + 0.5) / static_cast<double>(m);
  double rho;
  if (j % 4 == 3) {
    rho = delta * std::pow(10.0, -3.0 * frac);
  } else {
    rho = delta * std::sqrt(frac);
  }
  if constexpr (N == 2) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double a = sign * rho;
    return vec2(std::cos(a) * axis[0] - std::sin(a) * axis[1],
                std::sin(a) * axis[0] + std::cos(a) * axis[1]);
  } else {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    const double phi = 2.0 * pi() * static_cast<double>(j) / golden;
    Vec3 e1 = std::fabs(axis[0]) < 0.9 ? vec3(1, 0, 0) : vec3(0, 1, 0);
    e1 = e1 - dot(e1, axis) * axis;
    e1 = e1 / norm(e1);
    const Vec3 e2 = vec3(axis[1] * e1[2] - axis[2] * e1[1],
                         axis[2] * e1[0] - axis[0] * e1[2],
                         axis[0] * e1[1] - axis[1] * e1[0]);
    return std::cos(rho) * axis + (std::sin(rho) * std::cos(phi)) * e1 +
           (std::sin(rho) * std::sin(phi)) * e2;
  }
}

// Quick chord-angle minimum at a single radius; used for ranking and descent.
template <int N>
double alpha_probe(const StarlikeBoundary<N>& M, const Vec<N>& u, double eps, int m) {
  const double r = M.radius_dir(u);
  const Vec<N> x = r * u;
  const double delta = std::min(pi() * 0.9, 1.5 * eps / r);
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    const Vec<N> v = cap_lattice_dir(u, delta, j, m);
    const Vec<N> z = M.radius_dir(v) * v;
    const double L = dist(z, x);
    if (L > eps || L < 1e-14 * r) continue;
    best = std::min(best, chord_angle(u, x, z));
  }
  return best;
}

}  // namespace detail

// Liminf tangent angle at a boundary point, estimated over the shrinking
// neighborhoods of the schedule. The reported alpha is the finest-level
// minimum; the per-level values expose the (nondecreasing) convergence.
template <int N>
AlphaAtResult<N> alpha_at(const StarlikeBoundary<N>& M, const Vec<N>& x,
                          const EpsSchedule& sched = {}) {
  sched.validate();
  const UnitDirection<N> u(x);
  const double r = M.radius_dir(u.u);
  if (std::fabs(norm(x) - r) > 1e-9 * M.r_max())
    throw std::domain_error("alpha_at needs a boundary point");
  const Vec<N> xb = r * u.u;
  const int m = (N == 2) ? sched.samples_2d : sched.samples_3d;

  AlphaAtResult<N> out;
  for (double frac : sched.radius_fractions) {
    const double eps = frac * M.r_min();
    const double delta = std::min(pi() * 0.9, 1.5 * eps / r);
    double best = std::numeric_limits<double>::infinity();
    Vec<N> bz{};
    for (int j = 0; j < m; ++j) {
      const Vec<N> v = detail::cap_lattice_dir(u.u, delta, j, m);
      const Vec<N> z = M.radius_dir(v) * v;
      const double L = dist(z, xb);
      if (L > eps || L < 1e-14 * r) continue;
      const double a = detail::chord_angle(u.u, xb, z);
      if (a < best) {
        best = a;
        bz = z;
      }
    }
    if (!std::isfinite(best)) throw std::runtime_error("schedule too fine for discretization");
    out.per_level.push_back(best);
    out.alpha = best;
    out.witness_z = bz;
  }
  return out;
}

template <int N>
struct AlphaProfile {
  std::vector<std::pair<Vec<N>, double>> samples;  // (boundary point, alpha)
  double alpha_global = 0;
  std::string method;  // "closed-form-polar", "closed-form-normal", "sampled-liminf"
};

struct AlphaGlobalOptions {
  long grid_2d = 1 << 12;
  long grid_3d = 100000;
  int probe_samples = 48;
  int refine_candidates = 512;
  double candidate_margin = 0.15;  // radians above the running minimum
  EpsSchedule schedule{};
};

// Global tangent angle: minimum of the pointwise liminf angle over the
// boundary. Closed forms (polar derivative / outward normal) are used when
// the shape carries them; otherwise a grid scan is refined by full chord
// sampling at the lowest candidates, the shape's corner rays, and a local
// descent around the best basin.
template <int N>
AlphaProfile<N> alpha_global(const StarlikeBoundary<N>& M, const AlphaGlobalOptions& opts = {}) {
  AlphaProfile<N> out;
  opts.schedule.validate();

  if constexpr (N == 2) {
    const PolarCurve2D* curve = M.polar();
    if (curve != nullptr) {
      out.method = "closed-form-polar";
      const long m = opts.grid_2d;
      double best = std::numeric_limits<double>::infinity();
      double tbest = 0;
      for (long i = 0; i < m; ++i) {
        const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(m);
        if (curve->near_breakpoint(t, 1e-9)) continue;
        const double a = alpha_fold(*curve, t);
        if (i % 8 == 0) out.samples.push_back({curve->point(t), a});
        if (a < best) {
          best = a;
          tbest = t;
        }
      }
      // Local refinement on the smooth piece around the grid argmin.
      const double step = 2.0 * pi() / static_cast<double>(m);
      const double tref = golden_min(
          [&](double t) {
            return curve->near_breakpoint(t, 1e-9) ? best + 1.0 : alpha_fold(*curve, t);
          },
          tbest - step, tbest + step);
      if (!curve->near_breakpoint(tref, 1e-9)) best = std::min(best, alpha_fold(*curve, tref));
      // Breakpoints carry their own liminf estimate.
      for (double b : curve->breakpoints()) {
        const auto res = alpha_at(M, curve->point(b), opts.schedule);
        out.samples.push_back({curve->point(b), res.alpha});
        best = std::min(best, res.alpha);
      }
      out.alpha_global = best;
      return out;
    }
  }

  if (M.has_normal() && M.corner_dirs().empty()) {
    // Smooth shape: sin(alpha) = <n(x), x/|x|> pointwise.
    out.method = "closed-form-normal";
    auto angle = [&](const Vec<N>& u) {
      const double s = dot(M.unit_normal(u), u);
      return std::asin(std::clamp(s, -1.0, 1.0));
    };
    const long m = (N == 2) ? opts.grid_2d : opts.grid_3d;
    double best = std::numeric_limits<double>::infinity();
    Vec<N> ubest{};
    for (long i = 0; i < m; ++i) {
      Vec<N> u;
      if constexpr (N == 2) {
        const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(m);
        u = vec2(std::cos(t), std::sin(t));
      } else {
        u = fibonacci_dir(i, m);
      }
      const double a = angle(u);
      if (i % 32 == 0) out.samples.push_back({M.radius_dir(u) * u, a});
      if (a < best) {
        best = a;
        ubest = u;
      }
    }
    const Vec<N> uref = refine_direction_min<N>(angle, ubest, 0.05);
    best = std::min(best, angle(uref));
    out.alpha_global = best;
    return out;
  }

  // Sampled liminf pipeline.
  out.method = "sampled-liminf";
  const long m = (N == 2) ? opts.grid_2d : opts.grid_3d;
  const double probe_eps = opts.schedule.radius_fractions[opts.schedule.radius_fractions.size() / 2] *
                           M.r_min();

  struct Cand {
    double est;
    long idx;
  };
  std::vector<Cand> cands(static_cast<std::size_t>(m));
  struct Block {};
  parallel_blocks<Block>(
      m, 4096,
      [&](long i, Block&) {
        const Vec<N> u = [&] {
          if constexpr (N == 2) {
            const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(m);
            return vec2(std::cos(t), std::sin(t));
          } else {
            return fibonacci_dir(i, m);
          }
        }();
        cands[static_cast<std::size_t>(i)] = {
            detail::alpha_probe(M, u, probe_eps, opts.probe_samples), i};
      },
      [](Block&, const Block&) {});

  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.est < b.est; });
  const double est_min = cands.front().est;

  auto dir_of = [&](long i) {
    if constexpr (N == 2) {
      const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(m);
      return vec2(std::cos(t), std::sin(t));
    } else {
      return fibonacci_dir(i, m);
    }
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<Vec<N>> final_dirs;
  for (std::size_t k = 0; k < cands.size() && k < static_cast<std::size_t>(opts.refine_candidates);
       ++k) {
    if (cands[k].est > est_min + opts.candidate_margin && k >= 32) break;
    final_dirs.push_back(dir_of(cands[k].idx));
  }
  for (const auto& c : M.corner_dirs()) final_dirs.push_back(c);
  // Local descent from the best few basins, on the cheap probe objective.
  for (std::size_t k = 0; k < std::min<std::size_t>(4, cands.size()); ++k) {
    auto obj = [&](const Vec<N>& u) { return detail::alpha_probe(M, u, probe_eps, 64); };
    final_dirs.push_back(refine_direction_min<N>(obj, dir_of(cands[k].idx), 0.05, 30));
  }

  for (const auto& u : final_dirs) {
    const Vec<N> x = M.radius_dir(u) * u;
    const auto res = alpha_at(M, x, opts.schedule);
    out.samples.push_back({x, res.alpha});
    best = std::min(best, res.alpha);
  }
  out.alpha_global = best;
  return out;
}

// ---- interior cone condition ----------------------------------------------

template <int N>
struct ConeViolation {
  Vec<N> vertex;
  Vec<N> sample;
};

// Samples the open cone of aperture beta with vertex at `vertex`, opening
// toward the origin, depth |vertex|; reports samples falling outside the
// starlike region of M.
template <int N>
std::vector<ConeViolation<N>> cone_violations_at(const StarlikeBoundary<N>& M,
                                                 const Vec<N>& vertex, double beta,
                                                 int n_dirs = 64, int n_depths = 16) {
  std::vector<ConeViolation<N>> out;
  const double vn = norm(vertex);
  const Vec<N> axis = (-1.0 / vn) * vertex;  // toward the origin
  for (int j = 0; j < n_dirs; ++j) {
    const Vec<N> w = detail::cap_lattice_dir(axis, beta * 0.999, j, n_dirs);
    for (int k = 0; k < n_depths; ++k) {
      const double d = vn * (static_cast<double>(k) + 0.5) / static_cast<double>(n_depths);
      const Vec<N> z = vertex + d * w;
      if (max_abs(z) == 0.0) continue;
      const double rz = M.radius_at(z);
      if (norm(z) > rz * (1.0 + 1e-9)) out.push_back({vertex, z});
    }
  }
  return out;
}

template <int N>
std::vector<ConeViolation<N>> beta_cone_violations(const StarlikeBoundary<N>& M, double beta,
                                                   long n_boundary = 4096) {
  if (!(beta > 0) || beta > pi() / 4.0 + 1e-15)
    throw std::invalid_argument("cone aperture must lie in (0, pi/4]");
  std::vector<ConeViolation<N>> out;
  for (const auto& x : M.boundary_grid(n_boundary)) {
    auto v = cone_violations_at(M, x, beta);
    out.insert(out.end(), v.begin(), v.end());
    if (out.size() > 4096) break;  // enough evidence
  }
  return out;
}

// ---- Lipschitz scans -------------------------------------------------------

// chord-ratio |Pi(x) - Pi(y)| / |x - y| over sampled boundary pairs.
template <int N>
RatioEstimate<N> lip_radial_projection(const StarlikeBoundary<N>& M, long n_pairs,
                                       std::uint64_t seed) {
  const BoundaryPairSampler<N> sampler{M};
  auto est = parallel_blocks<RatioEstimate<N>>(
      n_pairs, 16384,
      [&](long i, RatioEstimate<N>& st) {
        Rng rng(seed ^ (static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull));
        const auto [x, y] = sampler(rng);
        const double d = dist(x, y);
        if (d < 1e-13 * M.r_max()) return;
        const double ratio = dist(radial_projection(x).u, radial_projection(y).u) / d;
        st.consider(ratio, x, y);
      },
      [](RatioEstimate<N>& a, const RatioEstimate<N>& b) { a.merge(b); });
  est.sampler = "boundary-strata";
  est.seed = seed;
  return est;
}

// Exhaustive pair scan over a finite cloud.
template <int N>
RatioEstimate<N> lip_radial_projection(const PointCloud<N>& A) {
  RatioEstimate<N> est;
  const auto& p = A.points;
  const long n = static_cast<long>(p.size());
  est = parallel_blocks<RatioEstimate<N>>(
      n, 64,
      [&](long i, RatioEstimate<N>& st) {
        const Vec<N>& x = p[static_cast<std::size_t>(i)];
        const Vec<N> ux = radial_projection(x).u;
        for (long j = i + 1; j < n; ++j) {
          const Vec<N>& y = p[static_cast<std::size_t>(j)];
          const double d = dist(x, y);
          if (d < 1e-13) continue;
          st.consider(dist(ux, radial_projection(y).u) / d, x, y);
        }
      },
      [](RatioEstimate<N>& a, const RatioEstimate<N>& b) { a.merge(b); });
  est.sampler = "exhaustive";
  est.n_pairs = n * (n - 1) / 2;
  return est;
}

// Lip(phi) for the polar parametrization of a 2D curve:
// ess sup sqrt(r^2 + r'^2), grid plus breakpoint-approach and local refine.
inline std::pair<double, double> lip_polar_param_witnessed(const StarlikeBoundary<2>& M,
                                                           long grid = 1L << 16) {
  const PolarCurve2D* curve = M.polar();
  if (curve == nullptr) throw std::domain_error("polar parametrization requires a polar curve");
  auto break_dist = [&](double t) {
    double best = std::numeric_limits<double>::infinity();
    const double w = wrap_angle(t);
    for (double b : curve->breakpoints()) {
      double d = std::fabs(w - b);
      best = std::min(best, std::min(d, 2.0 * pi() - d));
    }
    return best;
  };
  // One-sided-safe speed: the analytic derivative is used arbitrarily close
  // to a corner; finite differences keep the step inside the smooth piece.
  auto speed = [&](double t) {
    const double r = curve->value(t);
    double rp;
    if (curve->has_analytic_derivative()) {
      rp = curve->derivative(t, 1e-15);
    } else {
      const double h = std::min(1e-7, 0.05 * break_dist(t));
      rp = curve->derivative_fd(t, h);
    }
    return std::hypot(r, rp);
  };
  double best = 0, tbest = 0;
  for (long i = 0; i < grid; ++i) {
    const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(grid);
    if (curve->near_breakpoint(t, 1e-9)) continue;
    const double s = speed(t);
    if (s > best) {
      best = s;
      tbest = t;
    }
  }
  // The essential sup may live at a one-sided limit into a corner.
  for (double b : curve->breakpoints()) {
    for (int k = 2; k <= 11; ++k) {
      const double h = std::pow(10.0, -k);
      for (double t : {b + h, b - h}) {
        if (curve->near_breakpoint(t, 1e-13)) continue;
        const double s = speed(t);
        if (s > best) {
          best = s;
          tbest = t;
        }
      }
    }
  }
  const double step = 2.0 * pi() / static_cast<double>(grid);
  const double tref = golden_min(
      [&](double t) { return curve->near_breakpoint(t, 1e-13) ? 0.0 : -speed(t); },
      tbest - step, tbest + step);
  if (!curve->near_breakpoint(tref, 1e-13) && speed(tref) > best) {
    best = speed(tref);
    tbest = tref;
  }
  return {best, tbest};
}

inline double lip_polar_param(const StarlikeBoundary<2>& M, long grid = 1L << 16) {
  return lip_polar_param_witnessed(M, grid).first;
}

// sup |x| / sin(alpha(x)) over an alpha profile (any dimension).
template <int N>
double lip_polar_param(const AlphaProfile<N>& profile) {
  double best = 0;
  for (const auto& [x, a] : profile.samples) {
    const double s = std::sin(a);
    if (s > 1e-12) best = std::max(best, norm(x) / s);
  }
  return best;
}

// ---- attainment diagnostic -------------------------------------------------

template <int N>
struct AdmissibilityReport {
  double sampled_sup = 0;
  double bound = 0;  // 1 / dist(A, 0)
  double attainment = 0;
  bool attains = false;
  Vec<N> witness_x{}, witness_y{};
  std::string note;
};

template <int N>
AdmissibilityReport<N> make_admissibility(const RatioEstimate<N>& est, double dist0) {
  AdmissibilityReport<N> rep;
  rep.sampled_sup = est.sup_value;
  rep.bound = 1.0 / dist0;
  rep.attainment = est.sup_value * dist0;
  rep.attains = rep.attainment >= 0.99;
  rep.witness_x = est.sup_x;
  rep.witness_y = est.sup_y;
  rep.note = rep.attains ? "bound attained (starlike-type geometry)"
                         : "bound not attained; supremum below 1/dist";
  return rep;
}

template <int N>
AdmissibilityReport<N> admissibility_diagnostic(const StarlikeBoundary<N>& M, long n_pairs,
                                                std::uint64_t seed) {
  return make_admissibility(lip_radial_projection(M, n_pairs, seed), M.r_min());
}

template <int N>
AdmissibilityReport<N> admissibility_diagnostic(const PointCloud<N>& A) {
  return make_admissibility(lip_radial_projection(A), A.dist0);
}

}  // namespace quasinv
