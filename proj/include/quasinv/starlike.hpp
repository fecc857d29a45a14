#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quasinv/optim.hpp"
#include "quasinv/polar_curve.hpp"
#include "quasinv/vec.hpp"

namespace quasinv {

// Quasi-uniform point set on S^2 (Fibonacci lattice).
inline Vec3 fibonacci_dir(long i, long n) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = 2.0 * pi() * static_cast<double>(i) / golden;
  return vec3(rho * std::cos(phi), rho * std::sin(phi), z);
}

template <int N>
struct BoundaryDef {
  std::function<double(const Vec<N>&)> radial;  // unit direction -> radius
  std::string descriptor;
  bool have_range = false;
  double rmin = 0, rmax = 0;
  Vec<N> rmin_dir{}, rmax_dir{};
  std::shared_ptr<const PolarCurve2D> polar;               // 2D shapes only
  std::function<Vec<N>(const Vec<N>&)> normal;             // unit dir -> outward unit normal
  std::vector<Vec<N>> corner_dirs;                         // directions of non-smooth boundary points
  std::function<double(const Vec<N>&)> nonsmooth_angle;    // angular clearance to the non-smooth locus
};

// Boundary of a strictly starlike (w.r.t. the origin) compact domain,
// described by its radial function on the unit sphere. Immutable after
// construction; all accessors are safe to call concurrently.
template <int N>
class StarlikeBoundary {
 public:
  explicit StarlikeBoundary(BoundaryDef<N> def) : def_(std::move(def)) {
    if (!def_.radial) throw geometry_error("boundary needs a radial function");
    probe_positivity();
    if (!def_.have_range) estimate_range();
  }

  static constexpr int dimension() { return N; }

  // Radius in a trusted unit direction.
  double radius_dir(const Vec<N>& u) const {
    const double r = def_.radial(u);
    if (!(r > 0.0) || !std::isfinite(r)) throw geometry_error("radial function not positive/finite");
    return r;
  }

  // Radius along the ray through x (any finite nonzero x).
  double radius_at(const Vec<N>& x) const { return radius_dir(UnitDirection<N>(x).u); }

  double r_min() const { return def_.rmin; }
  double r_max() const { return def_.rmax; }
  const Vec<N>& r_min_dir() const { return def_.rmin_dir; }
  const Vec<N>& r_max_dir() const { return def_.rmax_dir; }
  const std::string& descriptor() const { return def_.descriptor; }

  const PolarCurve2D* polar() const { return def_.polar.get(); }
  bool has_normal() const { return static_cast<bool>(def_.normal); }
  Vec<N> unit_normal(const Vec<N>& u) const { return def_.normal(u); }
  const std::vector<Vec<N>>& corner_dirs() const { return def_.corner_dirs; }

  // Angular distance from direction u to the nearest non-smooth boundary ray;
  // +inf when the boundary is smooth (or the clearance map is unknown).
  double nonsmooth_angle(const Vec<N>& u) const {
    if (def_.nonsmooth_angle) return def_.nonsmooth_angle(u);
    if (def_.corner_dirs.empty()) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : def_.corner_dirs) {
      const double d = std::acos(std::clamp(dot(u, c), -1.0, 1.0));
      best = std::min(best, d);
    }
    return best;
  }

  // Quasi-uniform boundary sample. In 2D the parameter grid is uniform, so
  // doubling m refines the sample in a nested way.
  std::vector<Vec<N>> boundary_grid(long m) const {
    std::vector<Vec<N>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
      Vec<N> u;
      if constexpr (N == 2) {
        const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(m);
        u = vec2(std::cos(t), std::sin(t));
      } else {
        u = fibonacci_dir(i, m);
      }
      out.push_back(radius_dir(u) * u);
    }
    return out;
  }

 private:
  void probe_positivity() const {
    const long probes = (N == 2) ? 512 : 2048;
    for (long i = 0; i < probes; ++i) {
      Vec<N> u;
      if constexpr (N == 2) {
        const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(probes);
        u = vec2(std::cos(t), std::sin(t));
      } else {
        u = fibonacci_dir(i, probes);
      }
      radius_dir(u);  // throws on a bad value
    }
  }

  void estimate_range() {
    auto radial = [this](const Vec<N>& u) { return def_.radial(u); };
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0;
    Vec<N> umin{}, umax{};
    const long grid = (N == 2) ? (1L << 14) : 100000L;
    for (long i = 0; i < grid; ++i) {
      Vec<N> u;
      if constexpr (N == 2) {
        const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(grid);
        u = vec2(std::cos(t), std::sin(t));
      } else {
        u = fibonacci_dir(i, grid);
      }
      const double r = radial(u);
      if (r < rmin) {
        rmin = r;
        umin = u;
      }
      if (r > rmax) {
        rmax = r;
        umax = u;
      }
    }
    // One local refinement pass around each extremum.
    umin = refine_direction_min<N>(radial, umin, 0.05);
    umax = refine_direction_min<N>([&](const Vec<N>& u) { return -radial(u); }, umax, 0.05);
    def_.rmin = radial(umin);
    def_.rmax = radial(umax);
    def_.rmin_dir = umin;
    def_.rmax_dir = umax;
    def_.have_range = true;
  }

  BoundaryDef<N> def_;
};

// Finite point set fixture for Lipschitz scans over non-starlike sets.
template <int N>
struct PointCloud {
  std::vector<Vec<N>> points;
  double dist0 = 0;  // min |p| over the cloud

  explicit PointCloud(std::vector<Vec<N>> pts) : points(std::move(pts)) {
    if (points.empty()) throw geometry_error("empty point cloud");
    dist0 = std::numeric_limits<double>::infinity();
    for (const auto& p : points) dist0 = std::min(dist0, norm(p));
    if (!(dist0 > 0.0)) throw geometry_error("point cloud touches the origin");
  }
};

// Unit circle with a radial whisker [1/2, 1] attached: the classical set for
// which the radial-projection Lipschitz bound 1/dist(A, 0) is not attained.
inline PointCloud<2> circle_with_whisker_cloud(long n_total) {
  // Split points proportionally to arc length (2*pi vs 1/2).
  const double circle_len = 2.0 * pi(), seg_len = 0.5;
  long n_seg = std::max<long>(3, static_cast<long>(std::lround(
                                      static_cast<double>(n_total) * seg_len / (circle_len + seg_len))));
  long n_circ = n_total - n_seg;
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(n_total));
  for (long i = 0; i < n_circ; ++i) {
    const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(n_circ);
    pts.push_back(vec2(std::cos(t), std::sin(t)));
  }
  for (long i = 0; i < n_seg; ++i) {
    const double s = 0.5 + 0.5 * static_cast<double>(i) / static_cast<double>(n_seg - 1);
    pts.push_back(vec2(s, 0.0));
  }
  return PointCloud<2>(std::move(pts));
}

namespace shapes {

inline StarlikeBoundary<2> circle(double r) {
  if (!(r > 0)) throw geometry_error("circle radius must be positive");
  BoundaryDef<2> d;
  d.radial = [r](const Vec2&) { return r; };
  d.descriptor = "circle r=" + std::to_string(r);
  d.have_range = true;
  d.rmin = d.rmax = r;
  d.rmin_dir = vec2(1, 0);
  d.rmax_dir = vec2(0, 1);
  d.polar = std::make_shared<PolarCurve2D>(PolarCurve2D::from_functions(
      [r](double) { return r; }, [](double) { return 0.0; }));
  d.normal = [](const Vec2& u) { return u; };
  return StarlikeBoundary<2>(std::move(d));
}

inline StarlikeBoundary<3> ball(double r) {
  if (!(r > 0)) throw geometry_error("ball radius must be positive");
  BoundaryDef<3> d;
  d.radial = [r](const Vec3&) { return r; };
  d.descriptor = "ball r=" + std::to_string(r);
  d.have_range = true;
  d.rmin = d.rmax = r;
  d.rmin_dir = vec3(1, 0, 0);
  d.rmax_dir = vec3(0, 0, 1);
  d.normal = [](const Vec3& u) { return u; };
  return StarlikeBoundary<3>(std::move(d));
}

// Axis-aligned square [-c, c]^2.
inline StarlikeBoundary<2> square(double half_side) {
  const double c = half_side;
  if (!(c > 0)) throw geometry_error("square half_side must be positive");
  BoundaryDef<2> d;
  d.radial = [c](const Vec2& u) { return c / std::max(std::fabs(u[0]), std::fabs(u[1])); };
  d.descriptor = "square half_side=" + std::to_string(c);
  d.have_range = true;
  d.rmin = c;
  d.rmax = c * std::sqrt(2.0);
  d.rmin_dir = vec2(1, 0);
  d.rmax_dir = vec2(std::sqrt(0.5), std::sqrt(0.5));
  // Sector-wise r(t) = c * sec(t - k*pi/2); corners on the diagonals.
  auto rfn = [c](double t) {
    const double q = pi() / 2.0;
    const double k = std::round(t / q);
    return c / std::cos(t - k * q);
  };
  auto rpfn = [c](double t) {
    const double q = pi() / 2.0;
    const double k = std::round(t / q);
    const double a = t - k * q;
    return c * std::tan(a) / std::cos(a);
  };
  std::vector<double> corners;
  for (int k = 0; k < 4; ++k) corners.push_back(pi() / 4.0 + k * pi() / 2.0);
  d.polar = std::make_shared<PolarCurve2D>(
      PolarCurve2D::from_functions(rfn, rpfn, corners));
  for (double t : corners) d.corner_dirs.push_back(vec2(std::cos(t), std::sin(t)));
  d.nonsmooth_angle = [](const Vec2& u) {
    const double t = std::atan2(u[1], u[0]);
    const double q = pi() / 2.0;
    const double nearest = pi() / 4.0 + q * std::round((t - pi() / 4.0) / q);
    return std::fabs(t - nearest);
  };
  return StarlikeBoundary<2>(std::move(d));
}

// Axis-aligned cube [-c, c]^3. The non-smooth locus is the 12 edges; the
// clearance map returns a first-order angular distance to the nearest
// max-component tie, which is what the edge set looks like from the origin.
inline StarlikeBoundary<3> cube(double half_side) {
  const double c = half_side;
  if (!(c > 0)) throw geometry_error("cube half_side must be positive");
  BoundaryDef<3> d;
  d.radial = [c](const Vec3& u) {
    return c / std::max({std::fabs(u[0]), std::fabs(u[1]), std::fabs(u[2])});
  };
  d.descriptor = "cube half_side=" + std::to_string(c);
  d.have_range = true;
  d.rmin = c;
  d.rmax = c * std::sqrt(3.0);
  d.rmin_dir = vec3(1, 0, 0);
  const double s3 = 1.0 / std::sqrt(3.0);
  d.rmax_dir = vec3(s3, s3, s3);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) d.corner_dirs.push_back(vec3(sx * s3, sy * s3, sz * s3));
  d.nonsmooth_angle = [](const Vec3& u) {
    double a[3] = {std::fabs(u[0]), std::fabs(u[1]), std::fabs(u[2])};
    std::sort(a, a + 3);  // ascending; ties of the top two mark an edge
    return (a[2] - a[1]) / std::sqrt(2.0);
  };
  return StarlikeBoundary<3>(std::move(d));
}

inline StarlikeBoundary<2> ellipse(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw geometry_error("ellipse semi-axes must be positive");
  BoundaryDef<2> d;
  d.radial = [a, b](const Vec2& u) {
    const double q = (u[0] / a) * (u[0] / a) + (u[1] / b) * (u[1] / b);
    return 1.0 / std::sqrt(q);
  };
  d.descriptor = "ellipse a=" + std::to_string(a) + " b=" + std::to_string(b);
  d.have_range = true;
  d.rmin = std::min(a, b);
  d.rmax = std::max(a, b);
  d.rmin_dir = a <= b ? vec2(1, 0) : vec2(0, 1);
  d.rmax_dir = a <= b ? vec2(0, 1) : vec2(1, 0);
  auto rfn = [a, b](double t) {
    const double ct = std::cos(t), st = std::sin(t);
    return a * b / std::sqrt(b * b * ct * ct + a * a * st * st);
  };
  auto rpfn = [a, b](double t) {
    const double ct = std::cos(t), st = std::sin(t);
    const double D = b * b * ct * ct + a * a * st * st;
    return a * b * (b * b - a * a) * st * ct / (D * std::sqrt(D));
  };
  d.polar = std::make_shared<PolarCurve2D>(PolarCurve2D::from_functions(rfn, rpfn));
  d.normal = [a, b](const Vec2& u) {
    const double r = 1.0 / std::sqrt((u[0] / a) * (u[0] / a) + (u[1] / b) * (u[1] / b));
    Vec2 g = vec2(r * u[0] / (a * a), r * u[1] / (b * b));
    return g / norm(g);
  };
  return StarlikeBoundary<2>(std::move(d));
}

inline StarlikeBoundary<3> ellipsoid(double a1, double a2, double a3) {
  if (!(a1 > 0) || !(a2 > 0) || !(a3 > 0))
    throw geometry_error("ellipsoid semi-axes must be positive");
  BoundaryDef<3> d;
  const Vec3 ax = vec3(a1, a2, a3);
  d.radial = [ax](const Vec3& u) {
    double q = 0;
    for (int i = 0; i < 3; ++i) q += (u[i] / ax[i]) * (u[i] / ax[i]);
    return 1.0 / std::sqrt(q);
  };
  d.descriptor = "ellipsoid a=" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                 std::to_string(a3);
  d.have_range = true;
  d.rmin = std::min({a1, a2, a3});
  d.rmax = std::max({a1, a2, a3});
  {
    int imin = 0, imax = 0;
    for (int i = 1; i < 3; ++i) {
      if (ax[i] < ax[imin]) imin = i;
      if (ax[i] > ax[imax]) imax = i;
    }
    Vec3 umin{}, umax{};
    umin[imin] = 1;
    umax[imax] = 1;
    d.rmin_dir = umin;
    d.rmax_dir = umax;
  }
  d.normal = [ax](const Vec3& u) {
    double q = 0;
    for (int i = 0; i < 3; ++i) q += (u[i] / ax[i]) * (u[i] / ax[i]);
    const double r = 1.0 / std::sqrt(q);
    Vec3 g;
    for (int i = 0; i < 3; ++i) g[i] = r * u[i] / (ax[i] * ax[i]);
    return g / norm(g);
  };
  return StarlikeBoundary<3>(std::move(d));
}

// Solid cone: apex (0,0,apex_z), base disc at z = base_z with the given
// radius. The origin must be strictly inside (apex_z > 0 > base_z).
inline StarlikeBoundary<3> cone(double apex_z, double base_z, double base_radius) {
  if (!(apex_z > 0) || !(base_z < 0) || !(base_radius > 0))
    throw geometry_error("cone needs apex_z > 0 > base_z and positive base radius");
  const double k = base_radius / (apex_z - base_z);  // lateral slope d(rho)/d(-z)
  BoundaryDef<3> d;
  d.radial = [=](const Vec3& u) {
    const double rho = std::hypot(u[0], u[1]);
    const double w = u[2];
    double best = std::numeric_limits<double>::infinity();
    // Lateral surface: t*rho = k*(apex_z - t*w).
    const double den = rho + k * w;
    if (den > 1e-15) {
      const double t = k * apex_z / den;
      const double z = t * w;
      if (t > 0 && z >= base_z - 1e-12 * (apex_z - base_z) && z <= apex_z + 1e-12)
        best = std::min(best, t);
    }
    // Base disc.
    if (w < -1e-15) {
      const double t = base_z / w;
      if (t > 0 && t * rho <= base_radius * (1 + 1e-12)) best = std::min(best, t);
    }
    if (!std::isfinite(best)) throw geometry_error("cone radial miss");
    return best;
  };
  d.descriptor = "cone apex_z=" + std::to_string(apex_z) + " base_z=" + std::to_string(base_z) +
                 " base_radius=" + std::to_string(base_radius);
  // Non-smooth locus: apex ray + base rim circle.
  const double theta_rim = std::atan2(base_radius, base_z);  // polar angle of rim dirs
  d.corner_dirs.push_back(vec3(0, 0, 1));
  for (int j = 0; j < 8; ++j) {
    const double ph = 2.0 * pi() * j / 8.0;
    Vec3 rim = vec3(base_radius * std::cos(ph), base_radius * std::sin(ph), base_z);
    d.corner_dirs.push_back(rim / norm(rim));
  }
  d.nonsmooth_angle = [theta_rim](const Vec3& u) {
    const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
    return std::min(theta, std::fabs(theta - theta_rim));
  };
  return StarlikeBoundary<3>(std::move(d));
}

// Solid cylinder: |z| <= half_height, rho <= radius.
inline StarlikeBoundary<3> cylinder(double radius, double half_height) {
  if (!(radius > 0) || !(half_height > 0))
    throw geometry_error("cylinder needs positive radius and half height");
  const double R = radius, H = half_height;
  BoundaryDef<3> d;
  d.radial = [R, H](const Vec3& u) {
    const double rho = std::hypot(u[0], u[1]);
    const double w = std::fabs(u[2]);
    double best = std::numeric_limits<double>::infinity();
    if (rho > 1e-15) {
      const double t = R / rho;
      if (t * w <= H * (1 + 1e-12)) best = std::min(best, t);
    }
    if (w > 1e-15) {
      const double t = H / w;
      if (t * rho <= R * (1 + 1e-12)) best = std::min(best, t);
    }
    if (!std::isfinite(best)) throw geometry_error("cylinder radial miss");
    return best;
  };
  d.descriptor = "cylinder radius=" + std::to_string(R) + " half_height=" + std::to_string(H);
  d.have_range = true;
  d.rmin = std::min(R, H);
  d.rmax = std::hypot(R, H);
  d.rmin_dir = R <= H ? vec3(1, 0, 0) : vec3(0, 0, 1);
  {
    Vec3 rimdir = vec3(R, 0, H);
    d.rmax_dir = rimdir / norm(rimdir);
  }
  const double theta_rim = std::atan2(R, H);
  for (int j = 0; j < 8; ++j) {
    const double ph = 2.0 * pi() * j / 8.0;
    for (double sz : {1.0, -1.0}) {
      Vec3 rim = vec3(R * std::cos(ph), R * std::sin(ph), sz * H);
      d.corner_dirs.push_back(rim / norm(rim));
    }
  }
  d.nonsmooth_angle = [theta_rim](const Vec3& u) {
    const double theta = std::acos(std::clamp(std::fabs(u[2]), 0.0, 1.0));
    return std::fabs(theta - theta_rim);
  };
  return StarlikeBoundary<3>(std::move(d));
}

namespace detail {

inline double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

struct PolygonEdges {
  std::vector<Vec2> v;  // vertices, closed implicitly

  // Ray t*u hits edge i at parameter t (s in [0,1) along the edge), or 0.
  double hit(const Vec2& u, std::size_t i, double* s_out = nullptr) const {
    const Vec2& p = v[i];
    const Vec2 d = v[(i + 1) % v.size()] - p;
    const double den = cross2(u, d);
    if (std::fabs(den) < 1e-300) return 0;
    const double t = cross2(p, d) / den;
    const double s = cross2(p, u) / den;
    if (t > 0 && s >= -1e-12 && s < 1.0 - 1e-12) {
      if (s_out) *s_out = s;
      return t;
    }
    return 0;
  }

  // Active edge and radius for a unit direction.
  std::pair<double, std::size_t> radial(const Vec2& u) const {
    double best = std::numeric_limits<double>::infinity();
    std::size_t idx = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double t = hit(u, i);
      if (t > 0 && t < best) {
        best = t;
        idx = i;
      }
    }
    if (idx == v.size()) throw geometry_error("polygon ray miss: boundary not starlike about 0");
    return {best, idx};
  }
};

}  // namespace detail

// Simple polygon, strictly starlike about the origin. Construction verifies
// ray uniqueness on a dense direction grid and rejects anything else.
inline StarlikeBoundary<2> polygon(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) throw geometry_error("polygon needs >= 3 vertices");
  auto edges = std::make_shared<detail::PolygonEdges>(detail::PolygonEdges{std::move(vertices)});
  for (const auto& p : edges->v)
    if (!(norm(p) > 0)) throw geometry_error("polygon vertex at the origin");

  // Starlikeness: every ray must cross exactly one edge.
  for (int i = 0; i < 4096; ++i) {
    const double t = 2.0 * pi() * (static_cast<double>(i) + 0.2345) / 4096.0;
    const Vec2 u = vec2(std::cos(t), std::sin(t));
    int hits = 0;
    for (std::size_t e = 0; e < edges->v.size(); ++e)
      if (edges->hit(u, e) > 0) ++hits;
    if (hits != 1) throw geometry_error("polygon is not strictly starlike about the origin");
  }

  BoundaryDef<2> d;
  d.radial = [edges](const Vec2& u) { return edges->radial(u).first; };
  d.descriptor = "polygon n=" + std::to_string(edges->v.size());
  // Exact range: min distance to an edge segment, max vertex norm.
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0;
  Vec2 umin{}, umax{};
  for (std::size_t i = 0; i < edges->v.size(); ++i) {
    const Vec2& p = edges->v[i];
    const Vec2 q = edges->v[(i + 1) % edges->v.size()];
    const Vec2 dseg = q - p;
    const double L2 = norm_sq(dseg);
    double s = L2 > 0 ? std::clamp(-dot(p, dseg) / L2, 0.0, 1.0) : 0.0;
    const Vec2 closest = p + s * dseg;
    const double dd = norm(closest);
    if (dd < rmin) {
      rmin = dd;
      umin = closest / dd;
    }
    if (norm(p) > rmax) {
      rmax = norm(p);
      umax = p / norm(p);
    }
  }
  d.have_range = true;
  d.rmin = rmin;
  d.rmax = rmax;
  d.rmin_dir = umin;
  d.rmax_dir = umax;
  std::vector<double> corner_params;
  for (const auto& p : edges->v) {
    corner_params.push_back(wrap_angle(std::atan2(p[1], p[0])));
    d.corner_dirs.push_back(p / norm(p));
  }
  auto rfn = [edges](double t) {
    return edges->radial(vec2(std::cos(t), std::sin(t))).first;
  };
  auto rpfn = [edges](double t) {
    const Vec2 u = vec2(std::cos(t), std::sin(t));
    const auto [r, i] = edges->radial(u);
    const Vec2& p = edges->v[i];
    const Vec2 q = edges->v[(i + 1) % edges->v.size()];
    Vec2 n = vec2(-(q - p)[1], (q - p)[0]);
    n = n / norm(n);
    double off = dot(n, p);
    if (off < 0) {
      n = -n;
      off = -off;
    }
    const Vec2 uprime = vec2(-u[1], u[0]);
    return -off * dot(n, uprime) / (dot(n, u) * dot(n, u));
  };
  d.polar = std::make_shared<PolarCurve2D>(
      PolarCurve2D::from_functions(rfn, rpfn, corner_params));
  return StarlikeBoundary<2>(std::move(d));
}

// Generic smooth polar curve r(t) with optional analytic derivative.
inline StarlikeBoundary<2> from_polar(std::function<double(double)> r,
                                      std::function<double(double)> r_prime = nullptr,
                                      std::vector<double> breakpoints = {},
                                      std::string descriptor = "polar-curve") {
  BoundaryDef<2> d;
  auto curve = std::make_shared<PolarCurve2D>(
      r_prime ? PolarCurve2D::from_functions(r, r_prime, breakpoints)
              : PolarCurve2D::from_function_fd(r, breakpoints));
  d.radial = [curve](const Vec2& u) { return curve->value(std::atan2(u[1], u[0])); };
  d.descriptor = std::move(descriptor);
  d.polar = curve;
  for (double b : curve->breakpoints())
    d.corner_dirs.push_back(vec2(std::cos(b), std::sin(b)));
  return StarlikeBoundary<2>(std::move(d));
}

inline StarlikeBoundary<2> polar_table(const std::vector<double>& t,
                                       const std::vector<double>& r) {
  BoundaryDef<2> d;
  auto curve = std::make_shared<PolarCurve2D>(PolarCurve2D::from_table(t, r));
  d.radial = [curve](const Vec2& u) { return curve->value(std::atan2(u[1], u[0])); };
  d.descriptor = "polar-table n=" + std::to_string(t.size());
  d.polar = curve;
  for (double b : curve->breakpoints())
    d.corner_dirs.push_back(vec2(std::cos(b), std::sin(b)));
  return StarlikeBoundary<2>(std::move(d));
}

}  // namespace shapes

}  // namespace quasinv
