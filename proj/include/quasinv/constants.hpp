#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasinv/linalg.hpp"
#include "quasinv/parallel.hpp"
#include "quasinv/polar_curve.hpp"
#include "quasinv/rng.hpp"
#include "quasinv/vec.hpp"

namespace quasinv {

namespace detail {

inline void require_angle(double alpha) {
  if (!(alpha > 0) || alpha > pi() / 2.0 + 1e-15)
    throw std::invalid_argument("tangent angle must lie in (0, pi/2]");
}

// sqrt(csc^2(alpha) - 1) + sqrt(csc^2(alpha) + 3), the factor shared by the
// bi-Lipschitz constants of the radial extension.
inline double csc_sum(double alpha) {
  require_angle(alpha);
  const double s = std::sin(alpha);
  const double csc2 = 1.0 / (s * s);
  return std::sqrt(std::max(0.0, csc2 - 1.0)) + std::sqrt(csc2 + 3.0);
}

}  // namespace detail

// Lip(phi_1) in terms of the tangent angle and the outer radius.
inline double lip_phi1(double alpha, double r_max) {
  if (!(r_max > 0)) throw std::invalid_argument("r_max must be positive");
  return 0.5 * r_max * detail::csc_sum(alpha);
}

// Lip(phi_1^{-1}). The planar statement carries an extra factor 1/2 that the
// higher-dimensional statement drops; both forms are exposed.
inline double lip_phi1_inv(double alpha, double r_min, int dimension = 3) {
  if (!(r_min > 0)) throw std::invalid_argument("r_min must be positive");
  const double base = detail::csc_sum(alpha) / r_min;
  return dimension == 2 ? 0.5 * base : base;
}

// Quasiconformality constant of the radial extension with exponent a.
inline double radial_stretch_K(double a, double alpha) {
  detail::require_angle(alpha);
  if (!(a > 0)) throw std::invalid_argument("stretch exponent must be positive");
  const double c = std::cos(alpha) / std::sin(alpha);
  const double sum = std::hypot(a - 1.0, c) + std::hypot(a + 1.0, c);
  return sum * sum / (4.0 * a);
}

struct OptimalStretch {
  double a_opt;   // csc(alpha)
  double K_min;   // cot(alpha/2)
};

inline OptimalStretch optimal_exponent(double alpha) {
  detail::require_angle(alpha);
  return {1.0 / std::sin(alpha), 1.0 / std::tan(alpha / 2.0)};
}

// Modulus bounds of the Beltrami coefficient for the two map families.
struct BeltramiBounds {
  double stretch;    // tan(pi/4 - alpha/2), optimal radial stretch
  double inversion;  // (1 - sin(alpha)) / (1 + sin(alpha)), quasi-inversion
};

inline BeltramiBounds beltrami_bound(double alpha) {
  detail::require_angle(alpha);
  const double s = std::sin(alpha);
  return {std::tan(pi() / 4.0 - alpha / 2.0), (1.0 - s) / (1.0 + s)};
}

// Quasiconformality constant of the quasi-inversion itself.
inline double quasi_inversion_K(double alpha) {
  detail::require_angle(alpha);
  const double t = std::tan(alpha / 2.0);
  return 1.0 / (t * t);
}

struct GvBounds {
  double inner;  // 2^{-1/2} cot(alpha/2) csc(alpha/2)
  double outer;  // 2^{+1/2} cot(alpha/2) cos(alpha/2)
};

inline GvBounds gv_bounds(double alpha) {
  detail::require_angle(alpha);
  const double half = alpha / 2.0;
  const double cot_half = 1.0 / std::tan(half);
  return {cot_half / (std::sqrt(2.0) * std::sin(half)), std::sqrt(2.0) * cot_half * std::cos(half)};
}

// Distortion bound for a convex domain squeezed between balls of radii a < b.
inline double convex_shell_H(double a, double b) {
  if (!(a > 0) || !(a < b)) throw std::invalid_argument("convex shell needs 0 < a < b");
  return (b + std::sqrt(b * b - a * a)) / a;
}

// ---- planar derivative data ------------------------------------------------

struct PlanarDerivatives {
  double Lambda;            // max stretch of phi_a at z
  double lambda;            // min stretch
  double H;                 // Lambda / lambda
  std::complex<double> mu;  // complex dilatation
};

// Closed-form derivative data of the radial stretch phi_a at a finite nonzero
// point z whose direction is a smooth parameter of the curve.
inline PlanarDerivatives planar_stretch_derivatives(const PolarCurve2D& curve, double a,
                                                    const Vec2& z) {
  if (!(a > 0)) throw std::invalid_argument("stretch exponent must be positive");
  const double rho = norm(z);
  if (!(rho > 0)) throw std::domain_error("derivative data undefined at the origin");
  const double t = std::atan2(z[1], z[0]);
  const double r = curve.value(t);
  const double c = curve.derivative(t) / r;  // cot(alpha_t); throws at breakpoints
  const double s1 = std::hypot(a + 1.0, c);
  const double s2 = std::hypot(a - 1.0, c);
  const double scale = std::pow(rho, a - 1.0);
  PlanarDerivatives out;
  out.Lambda = 0.5 * r * scale * (s1 + s2);
  out.lambda = 2.0 * r * a * scale / (s1 + s2);
  out.H = out.Lambda / out.lambda;
  out.mu = std::polar(1.0, 2.0 * t) * std::complex<double>(a - 1.0, c) /
           std::complex<double>(a + 1.0, -c);
  return out;
}

// ---- singular-value dilatations ---------------------------------------------

struct DilatationTriple {
  double H_I;
  double H_O;
  double H;
  std::vector<double> singular;  // ascending
};

inline DilatationTriple linear_dilatations(const SmallMat& j) {
  DilatationTriple out;
  out.singular = singular_values(j);
  const double lo = out.singular.front(), hi = out.singular.back();
  double det = 1.0;
  for (double s : out.singular) det *= s;
  if (!(lo > 1e-300) || !(det > 1e-300) || !std::isfinite(hi))
    throw std::domain_error("dilatation undefined");
  out.H = hi / lo;
  out.H_I = det / std::pow(lo, j.n);
  out.H_O = std::pow(hi, j.n) / det;
  return out;
}

// ---- sampled essential supremum of H ----------------------------------------

template <int N>
struct HEstimate {
  double h_sup = 0;
  DilatationTriple at_sup;
  Vec<N> witness{};
  long n_used = 0;
  long n_excluded = 0;
  long n_degenerate = 0;
};

// Samples finite-difference Jacobians of `f` at points drawn by `sample`,
// skipping points the caller excludes (typically a band around non-smooth
// rays), and returns the largest linear dilatation seen. The step scales
// with |x| because the maps of interest are radially homogeneous.
template <int N>
HEstimate<N> h_estimate_map(const std::function<Vec<N>(const Vec<N>&)>& f,
                            const std::function<Vec<N>(Rng&)>& sample, long n_samples,
                            std::uint64_t seed,
                            const std::function<bool(const Vec<N>&)>& exclude = nullptr,
                            double fd_step_rel = 1e-6) {
  auto est = parallel_blocks<HEstimate<N>>(
      n_samples, 8192,
      [&](long i, HEstimate<N>& st) {
        Rng rng(seed ^ (static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull));
        const Vec<N> x = sample(rng);
        if (exclude && exclude(x)) {
          ++st.n_excluded;
          return;
        }
        const double step = fd_step_rel * norm(x);
        bool ok = step > 0;
        DilatationTriple d;
        if (ok) {
          const SmallMat jac = fd_jacobian<N>(f, x, step);
          try {
            d = linear_dilatations(jac);
          } catch (const std::domain_error&) {
            ok = false;
          }
          if (ok && (!std::isfinite(d.H) || d.singular.front() < 1e-9 * d.singular.back()))
            ok = false;
        }
        if (!ok) {
          ++st.n_degenerate;
          return;
        }
        ++st.n_used;
        if (d.H > st.h_sup) {
          st.h_sup = d.H;
          st.at_sup = d;
          st.witness = x;
        }
      },
      [](HEstimate<N>& acc, const HEstimate<N>& b) {
        acc.n_used += b.n_used;
        acc.n_excluded += b.n_excluded;
        acc.n_degenerate += b.n_degenerate;
        if (b.h_sup > acc.h_sup) {
          acc.h_sup = b.h_sup;
          acc.at_sup = b.at_sup;
          acc.witness = b.witness;
        }
      });
  if (est.n_degenerate * 100 > est.n_used + est.n_degenerate)
    throw std::runtime_error("map not a.e. regular at this resolution");
  return est;
}

// ---- constants bundle --------------------------------------------------------

struct KaEntry {
  double a;
  double K;
};

struct ConstantsReport {
  int dimension = 0;
  double alpha = 0;
  double r_min = 0, r_max = 0;
  double L1 = 0;
  double L2_planar = 0;   // with the factor 1/2 of the two-dimensional statement
  double L2_spatial = 0;  // without it
  double L2 = 0;          // dimension-selected
  double L = 0;           // max(L1, L2)
  std::vector<KaEntry> Ka_at;
  double a_opt = 0;
  double K_min = 0;
  double k_planar = 0;     // Beltrami bound of the optimal stretch
  double k_inversion = 0;  // Beltrami bound of the quasi-inversion
  double K_inversion = 0;  // cot^2(alpha/2)
  double gv_inner = 0, gv_outer = 0;
  double lip_phi_boundary = 0;  // sup |x| / sin(alpha) over the profile
  std::string l2_note;
};

inline ConstantsReport make_constants_report(int dimension, double alpha, double r_min,
                                             double r_max, double lip_phi_boundary) {
  detail::require_angle(alpha);
  if (!(r_min > 0) || !(r_max >= r_min)) throw std::invalid_argument("bad radius range");
  ConstantsReport rep;
  rep.dimension = dimension;
  rep.alpha = alpha;
  rep.r_min = r_min;
  rep.r_max = r_max;
  rep.L1 = lip_phi1(alpha, r_max);
  rep.L2_planar = lip_phi1_inv(alpha, r_min, 2);
  rep.L2_spatial = lip_phi1_inv(alpha, r_min, 3);
  rep.L2 = (dimension == 2) ? rep.L2_planar : rep.L2_spatial;
  rep.L = std::max(rep.L1, rep.L2);
  const auto opt = optimal_exponent(alpha);
  rep.a_opt = opt.a_opt;
  rep.K_min = opt.K_min;
  for (double a : {0.5, 1.0, opt.a_opt, 2.0})
    rep.Ka_at.push_back({a, radial_stretch_K(a, alpha)});
  const auto belt = beltrami_bound(alpha);
  rep.k_planar = belt.stretch;
  rep.k_inversion = belt.inversion;
  rep.K_inversion = quasi_inversion_K(alpha);
  const auto gv = gv_bounds(alpha);
  rep.gv_inner = gv.inner;
  rep.gv_outer = gv.outer;
  rep.lip_phi_boundary = lip_phi_boundary;
  rep.l2_note =
      "the planar inverse constant carries a factor 1/2 absent from the spatial form; "
      "both are reported and L2 follows the domain dimension";
  return rep;
}

}  // namespace quasinv
