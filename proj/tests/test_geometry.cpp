#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "quasinv/maps.hpp"
#include "quasinv/rng.hpp"
#include "quasinv/sampling.hpp"
#include "quasinv/starlike.hpp"

using namespace quasinv;

namespace {

constexpr double kUlps = 5e-15;  // componentwise slack for "same direction"

bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

template <int N>
double rel_dist(const Vec<N>& a, const Vec<N>& b) {
  return dist(a, b) / std::max(1e-300, norm(a));
}

// Independent oracle: intersection parameter of the ray t*u with segment
// [p, q], computed straight from the 2x2 linear system.
double ray_segment_param(const Vec2& u, const Vec2& p, const Vec2& q) {
  const double ax = u[0], ay = u[1];
  const double bx = p[0] - q[0], by = p[1] - q[1];
  const double det = ax * by - ay * bx;
  if (std::fabs(det) < 1e-15) return -1;
  const double t = (p[0] * by - p[1] * bx) / det;
  const double s = (ax * p[1] - ay * p[0]) / det;
  if (t <= 0 || s < -1e-12 || s > 1 + 1e-12) return -1;
  return t;
}

const StarlikeBoundary<2>& unit_square() {
  static const StarlikeBoundary<2> M = shapes::square(1.0);
  return M;
}

const StarlikeBoundary<2>& test_ellipse() {
  static const StarlikeBoundary<2> M = shapes::ellipse(1.0, 2.0);
  return M;
}

}  // namespace

TEST_CASE("radial projection normalizes across scales", "[geometry]") {
  const auto u = radial_projection(vec2(3.0, 4.0));
  REQUIRE(u.u[0] == Catch::Approx(0.6).margin(1e-15));
  REQUIRE(u.u[1] == Catch::Approx(0.8).margin(1e-15));

  const auto tiny = radial_projection(vec2(1e-9, 0.0));
  REQUIRE(tiny.u[0] == 1.0);
  REQUIRE(tiny.u[1] == 0.0);

  const auto denorm = radial_projection(vec3(1e-300, 0.0, 0.0));
  REQUIRE(denorm.u[0] == 1.0);

  REQUIRE_THROWS_AS(radial_projection(vec2(0.0, 0.0)), std::domain_error);

  Rng rng(fnv1a("unit-norm"));
  for (int i = 0; i < 20000; ++i) {
    Vec3 x;
    for (int k = 0; k < 3; ++k) x[k] = rng.uniform(-1, 1) * rng.log_uniform(1e-30, 1e30);
    if (max_abs(x) == 0) continue;
    const auto d = radial_projection(x);
    REQUIRE(std::fabs(norm(d.u) - 1.0) < 1e-12);
  }
}

TEST_CASE("square and polygon radial functions agree with the ray oracle", "[geometry]") {
  const auto& sq = unit_square();
  const std::vector<Vec2> corners = {vec2(1, 1), vec2(-1, 1), vec2(-1, -1), vec2(1, -1)};
  const auto poly = shapes::polygon(corners);

  REQUIRE(boundary_radius(sq, vec2(1, 1)) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-14));
  REQUIRE(boundary_radius(sq, vec2(5, 0)) == Catch::Approx(1.0).epsilon(1e-14));

  Rng rng(fnv1a("square-oracle"));
  for (int i = 0; i < 4096; ++i) {
    const Vec2 u = rng.unit_vector<2>();
    double oracle = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < corners.size(); ++e) {
      const double t = ray_segment_param(u, corners[e], corners[(e + 1) % 4]);
      if (t > 0) oracle = std::min(oracle, t);
    }
    REQUIRE(std::isfinite(oracle));
    REQUIRE(close_rel(sq.radius_dir(u), oracle, 1e-12));
    REQUIRE(close_rel(poly.radius_dir(u), oracle, 1e-12));
  }
}

TEST_CASE("boundary radius is computed from the direction only", "[geometry]") {
  const auto& sq = unit_square();
  const auto cb = shapes::cube(1.0);
  const auto co = shapes::cone(2.0, -1.0, std::sqrt(3.0));
  Rng rng(fnv1a("scale-invariance"));
  for (int i = 0; i < 5000; ++i) {
    const Vec2 x2 = rng.log_uniform(0.1, 10.0) * rng.unit_vector<2>();
    const Vec3 x3 = rng.log_uniform(0.1, 10.0) * rng.unit_vector<3>();
    for (double s : {1e-6, 1.0, 1e6}) {
      REQUIRE(close_rel(boundary_radius(sq, s * x2), boundary_radius(sq, x2), kUlps));
      REQUIRE(close_rel(boundary_radius(cb, s * x3), boundary_radius(cb, x3), kUlps));
      REQUIRE(close_rel(boundary_radius(co, s * x3), boundary_radius(co, x3), kUlps));
    }
  }
}

TEST_CASE("ellipse radial values", "[geometry]") {
  const auto& el = test_ellipse();
  REQUIRE(boundary_radius(el, vec2(1, 0)) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(boundary_radius(el, vec2(0, -3)) == Catch::Approx(2.0).epsilon(1e-14));
  // Cross-check the polar closed form against the implicit-equation radial.
  for (int i = 0; i < 512; ++i) {
    const double t = 2 * pi() * i / 512.0;
    const double r = el.polar()->value(t);
    const Vec2 p = vec2(r * std::cos(t), r * std::sin(t));
    REQUIRE(close_rel(norm(p), boundary_radius(el, p), 1e-12));
    const double lhs = p[0] * p[0] / 1.0 + p[1] * p[1] / 4.0;
    REQUIRE(lhs == Catch::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("named solid radial spot values", "[geometry]") {
  const auto cb = shapes::cube(1.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  REQUIRE(cb.radius_dir(vec3(s3, s3, s3)) == Catch::Approx(std::sqrt(3.0)).epsilon(1e-14));
  REQUIRE(cb.radius_dir(vec3(0, 1, 0)) == Catch::Approx(1.0).epsilon(1e-14));

  const auto co = shapes::cone(2.0, -1.0, std::sqrt(3.0));
  REQUIRE(co.radius_dir(vec3(0, 0, 1)) == Catch::Approx(2.0).epsilon(1e-12));
  REQUIRE(co.radius_dir(vec3(0, 0, -1)) == Catch::Approx(1.0).epsilon(1e-12));
  REQUIRE(co.radius_at(vec3(std::sqrt(3.0), 0, -1)) == Catch::Approx(2.0).epsilon(1e-12));
  REQUIRE(co.radius_dir(vec3(1, 0, 0)) == Catch::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
  REQUIRE(co.r_min() == Catch::Approx(1.0).epsilon(1e-9));
  REQUIRE(co.r_max() == Catch::Approx(2.0).epsilon(1e-9));

  const auto cy = shapes::cylinder(1.0, 1.0);
  REQUIRE(cy.radius_dir(vec3(1, 0, 0)) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(cy.radius_dir(vec3(0, 0, -1)) == Catch::Approx(1.0).epsilon(1e-14));
  REQUIRE(cy.radius_at(vec3(1, 0, 1)) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("cached radius range matches dense sampling", "[geometry]") {
  auto check2 = [](const StarlikeBoundary<2>& M) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (int i = 0; i < 200000; ++i) {
      const double t = 2 * pi() * i / 200000.0;
      const double r = M.radius_dir(vec2(std::cos(t), std::sin(t)));
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    REQUIRE(close_rel(M.r_min(), lo, 1e-3));
    REQUIRE(close_rel(M.r_max(), hi, 1e-3));
    REQUIRE(M.r_min() <= lo * (1 + 1e-12));
    REQUIRE(M.r_max() >= hi * (1 - 1e-12));
  };
  check2(unit_square());
  check2(test_ellipse());

  auto check3 = [](const StarlikeBoundary<3>& M) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0;
    for (long i = 0; i < 200000; ++i) {
      const double r = M.radius_dir(fibonacci_dir(i, 200000));
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    REQUIRE(close_rel(M.r_min(), lo, 1e-3));
    REQUIRE(close_rel(M.r_max(), hi, 1e-3));
  };
  check3(shapes::cone(2.0, -1.0, std::sqrt(3.0)));
  check3(shapes::cylinder(1.0, 1.0));
}

TEST_CASE("polar points and boundary grids sit on the boundary", "[geometry]") {
  const auto& el = test_ellipse();
  const auto cb = shapes::cube(1.0);
  for (const auto& p : el.boundary_grid(2048))
    REQUIRE(std::fabs(norm(p) - boundary_radius(el, p)) < 1e-9 * el.r_max());
  for (const auto& p : cb.boundary_grid(4096))
    REQUIRE(std::fabs(norm(p) - boundary_radius(cb, p)) < 1e-9 * cb.r_max());
}

TEST_CASE("radial extension examples and round trips", "[geometry]") {
  const auto& sq = unit_square();
  const auto y = radial_extension(sq, 2.0, ExtendedPoint<2>::finite(vec2(0.5, 0.0)));
  REQUIRE_FALSE(y.infinite);
  REQUIRE(y.p[0] == Catch::Approx(0.25).epsilon(1e-14));
  REQUIRE(y.p[1] == 0.0);

  REQUIRE(radial_extension(sq, 2.0, ExtendedPoint<2>::infinity()).infinite);
  REQUIRE(radial_extension(sq, 2.0, ExtendedPoint<2>::finite(vec2(0, 0))).is_origin());
  REQUIRE_THROWS_AS(radial_extension(sq, -1.0, ExtendedPoint<2>::finite(vec2(1, 0))),
                    std::domain_error);

  Rng rng(fnv1a("re-roundtrip"));
  for (const double a : {0.5, 1.0, std::sqrt(2.0), 2.0}) {
    for (int i = 0; i < 10000; ++i) {
      const Vec2 x = rng.log_uniform(1e-3, 1e3) * rng.unit_vector<2>();
      const auto fwd = radial_extension(sq, a, ExtendedPoint<2>::finite(x));
      const auto back = radial_extension_inverse(sq, a, fwd);
      REQUIRE(rel_dist(back.p, x) < 1e-9);
    }
  }
}

TEST_CASE("sphere inversion distance law", "[geometry]") {
  const auto h = sphere_inversion(vec2(0, 0), 1.0, ExtendedPoint<2>::finite(vec2(2, 0)));
  REQUIRE(h.p[0] == Catch::Approx(0.5).epsilon(1e-15));

  // h(2,0) = (1/2, 0), h(0,3) = (0, 1/3): distance sqrt(13)/6.
  const auto hx = sphere_inversion(vec2(0, 0), 1.0, ExtendedPoint<2>::finite(vec2(2, 0)));
  const auto hy = sphere_inversion(vec2(0, 0), 1.0, ExtendedPoint<2>::finite(vec2(0, 3)));
  REQUIRE(dist(hx.p, hy.p) == Catch::Approx(std::sqrt(13.0) / 6.0).epsilon(1e-14));

  REQUIRE(sphere_inversion(vec2(1, 2), 3.0, ExtendedPoint<2>::finite(vec2(1, 2))).infinite);
  REQUIRE(sphere_inversion(vec2(1, 2), 3.0, ExtendedPoint<2>::infinity()).p ==
          vec2(1, 2));

  const Vec2 center = vec2(0.3, -0.2);
  const double r = 1.7;
  Rng rng(fnv1a("inversion-distance-law"));
  double worst = 0;
  for (int i = 0; i < 100000; ++i) {
    const Vec2 x = center + rng.log_uniform(1e-2, 1e2) * rng.unit_vector<2>();
    const Vec2 y = center + rng.log_uniform(1e-2, 1e2) * rng.unit_vector<2>();
    if (dist(x, y) < 1e-12) continue;
    const Vec2 hx2 = sphere_inversion(center, r, ExtendedPoint<2>::finite(x)).p;
    const Vec2 hy2 = sphere_inversion(center, r, ExtendedPoint<2>::finite(y)).p;
    const double expected = r * r * dist(x, y) / (dist(x, center) * dist(y, center));
    worst = std::max(worst, std::fabs(dist(hx2, hy2) - expected) / expected);
  }
  REQUIRE(worst < 1e-12);
}

TEST_CASE("quasi-inversion pointwise examples", "[geometry]") {
  const auto& sq = unit_square();
  const auto f = quasi_inversion(sq, ExtendedPoint<2>::finite(vec2(0.25, 0.0)));
  REQUIRE(f.p[0] == Catch::Approx(4.0).epsilon(1e-14));
  REQUIRE(f.p[1] == 0.0);

  const auto c2 = shapes::circle(2.0);
  const auto g = quasi_inversion(c2, ExtendedPoint<2>::finite(vec2(1.0, 0.0)));
  REQUIRE(g.p[0] == Catch::Approx(4.0).epsilon(1e-14));

  REQUIRE(quasi_inversion(sq, ExtendedPoint<2>::finite(vec2(0, 0))).infinite);
  REQUIRE(quasi_inversion(sq, ExtendedPoint<2>::infinity()).is_origin());
}

TEST_CASE("quasi-inversion agrees with sphere inversion on circles", "[geometry]") {
  const auto c2 = shapes::circle(2.0);
  Rng rng(fnv1a("sphere-specialization"));
  for (int i = 0; i < 10000; ++i) {
    const Vec2 x = rng.log_uniform(1e-3, 1e3) * rng.unit_vector<2>();
    const Vec2 a = quasi_inversion_finite(c2, x);
    const Vec2 b = sphere_inversion(vec2(0, 0), 2.0, ExtendedPoint<2>::finite(x)).p;
    REQUIRE(rel_dist(a, b) < 1e-13);
  }
}

TEST_CASE("quasi-inversion is an involution and fixes the boundary", "[geometry]") {
  const auto& sq = unit_square();
  const auto& el = test_ellipse();
  const auto cb = shapes::cube(1.0);

  Rng rng(fnv1a("involution"));
  auto check_involution = [&](const auto& M, auto mkpoint) {
    double worst = 0;
    for (int i = 0; i < 100000; ++i) {
      const auto x = mkpoint();
      const auto y = quasi_inversion_finite(M, x);
      const auto z = quasi_inversion_finite(M, y);
      worst = std::max(worst, rel_dist(z, x));
    }
    REQUIRE(worst < 1e-9);
  };
  check_involution(sq, [&] { return rng.log_uniform(1e-3, 1e3) * rng.unit_vector<2>(); });
  check_involution(el, [&] { return rng.log_uniform(1e-3, 1e3) * rng.unit_vector<2>(); });
  check_involution(cb, [&] { return rng.log_uniform(1e-3, 1e3) * rng.unit_vector<3>(); });

  for (const auto& p : sq.boundary_grid(10000))
    REQUIRE(dist(quasi_inversion_finite(sq, p), p) < 1e-12 * sq.r_max());
  for (const auto& p : el.boundary_grid(10000))
    REQUIRE(dist(quasi_inversion_finite(el, p), p) < 1e-12 * el.r_max());
  for (const auto& p : cb.boundary_grid(10000))
    REQUIRE(dist(quasi_inversion_finite(cb, p), p) < 1e-12 * cb.r_max());
}

TEST_CASE("quasi-inversion preserves rays", "[geometry]") {
  const auto& sq = unit_square();
  const auto co = shapes::cone(2.0, -1.0, std::sqrt(3.0));
  Rng rng(fnv1a("ray-preservation"));
  for (int i = 0; i < 50000; ++i) {
    const Vec2 x = rng.log_uniform(1e-6, 1e6) * rng.unit_vector<2>();
    const Vec2 ux = radial_projection(x).u;
    const Vec2 uf = radial_projection(quasi_inversion_finite(sq, x)).u;
    for (int k = 0; k < 2; ++k) REQUIRE(std::fabs(uf[k] - ux[k]) <= kUlps);

    const Vec3 x3 = rng.log_uniform(1e-6, 1e6) * rng.unit_vector<3>();
    const Vec3 u3 = radial_projection(x3).u;
    const Vec3 f3 = radial_projection(quasi_inversion_finite(co, x3)).u;
    for (int k = 0; k < 3; ++k) REQUIRE(std::fabs(f3[k] - u3[k]) <= kUlps);
  }
}

TEST_CASE("quasi-inversion factors through radial extensions", "[geometry]") {
  const auto& sq = unit_square();
  const auto& el = test_ellipse();
  Rng rng(fnv1a("conjugation"));

  auto unit_inversion = [](const Vec2& x) { return x / norm_sq(x); };
  auto check = [&](const StarlikeBoundary<2>& M, double a) {
    double worst = 0;
    for (int i = 0; i < 100000; ++i) {
      const Vec2 x = rng.log_uniform(1e-2 * M.r_min(), 1e2 * M.r_max()) * rng.unit_vector<2>();
      const auto pre = radial_extension_inverse(M, a, ExtendedPoint<2>::finite(x));
      const Vec2 mid = unit_inversion(pre.p);
      const auto post = radial_extension(M, a, ExtendedPoint<2>::finite(mid));
      const Vec2 direct = quasi_inversion_finite(M, x);
      worst = std::max(worst, dist(post.p, direct) / (1.0 + norm(direct)));
    }
    REQUIRE(worst < 1e-9);
  };

  for (double a : {0.5, 1.0, std::sqrt(2.0), 2.0}) check(sq, a);
  for (double a : {0.5, 1.0, 1.25, 2.0}) check(el, a);
}

TEST_CASE("projected chords obey the polar distance estimate", "[geometry]") {
  Rng rng(fnv1a("polar-distance"));
  long equal_norm_checked = 0;
  for (int i = 0; i < 200000; ++i) {
    const Vec2 x = rng.log_uniform(1e-2, 1e2) * rng.unit_vector<2>();
    Vec2 y = rng.log_uniform(1e-2, 1e2) * rng.unit_vector<2>();
    if (i % 4 == 0) y = norm(x) * rng.unit_vector<2>();  // equal-norm stratum
    const Vec2 px = radial_projection(x).u, py = radial_projection(y).u;
    const double chord = dist(px, py);
    if (chord < 1e-9) continue;
    const double lhs = dist(x, y) / chord;
    const double rhs = 0.5 * (norm(x) + norm(y));
    REQUIRE(lhs >= rhs * (1 - 1e-11));

    // Exact gap identity: lhs^2 - rhs^2 = ((|x|-|y|)/2)^2 * cot^2(theta/2).
    // Checked away from theta in {0, pi}, where 1 -+ cos(theta) cancels.
    const double c = std::clamp(dot(px, py), -1.0, 1.0);
    if (c > -0.999999 && c < 1.0 - 1e-6) {
      const double gap = (norm(x) - norm(y)) * 0.5;
      const double expected = rhs * rhs + gap * gap * (1 + c) / (1 - c);
      REQUIRE(lhs * lhs == Catch::Approx(expected).epsilon(1e-8));
    }
    if (i % 4 == 0) {
      REQUIRE(lhs == Catch::Approx(rhs).epsilon(1e-9));
      ++equal_norm_checked;
    }
  }
  REQUIRE(equal_norm_checked > 10000);
}

TEST_CASE("polar curve derivative plumbing", "[geometry]") {
  const auto& el = test_ellipse();
  const PolarCurve2D* c = el.polar();
  REQUIRE(c != nullptr);
  REQUIRE(c->value(0.0) == Catch::Approx(c->value(2 * pi())).margin(1e-12));

  // Central differences converge at second order on smooth pieces.
  double e3 = 0, e4 = 0;
  for (int i = 1; i < 40; ++i) {
    const double t = 0.15 * i;
    const double exact = c->derivative(t);
    e3 = std::max(e3, std::fabs(c->derivative_fd(t, 1e-3) - exact));
    e4 = std::max(e4, std::fabs(c->derivative_fd(t, 1e-4) - exact));
  }
  const double order = std::log10(e3 / e4);
  REQUIRE(order > 1.5);
  REQUIRE(order < 2.5);

  const auto& sq = unit_square();
  REQUIRE_THROWS_AS(sq.polar()->derivative(pi() / 4.0), std::domain_error);
  REQUIRE(sq.polar()->value(pi() / 4.0) == Catch::Approx(std::sqrt(2.0)).epsilon(1e-13));

  // Square sector derivative: r' = sec(t) tan(t) inside the first sector.
  REQUIRE(sq.polar()->derivative(0.3) ==
          Catch::Approx(std::tan(0.3) / std::cos(0.3)).epsilon(1e-12));
}

TEST_CASE("polar tables interpolate and reject bad data", "[geometry]") {
  std::vector<double> t, r;
  for (int i = 0; i < 64; ++i) {
    const double s = 2 * pi() * i / 64.0;
    t.push_back(s);
    r.push_back(1.0 + 0.2 * std::cos(3 * s));
  }
  const auto M = shapes::polar_table(t, r);
  for (int i = 0; i < 64; ++i)
    REQUIRE(M.polar()->value(t[static_cast<std::size_t>(i)]) ==
            Catch::Approx(r[static_cast<std::size_t>(i)]).epsilon(1e-12));
  for (int i = 0; i < 512; ++i) {
    const double s = 2 * pi() * i / 512.0;
    REQUIRE(std::fabs(M.polar()->value(s) - (1.0 + 0.2 * std::cos(3 * s))) < 2e-3);
  }

  // A table whose interpolant would need the positivity clamp is rejected:
  // the Catmull-Rom segment between the two 0.1 nodes dips to 0.1 - 0.45/4.
  std::vector<double> t2, r2 = {1.0, 1.0, 0.1, 0.1, 1.0, 1.0};
  for (int i = 0; i < 6; ++i) t2.push_back(2 * pi() * i / 6.0);
  REQUIRE_THROWS_AS(shapes::polar_table(t2, r2), geometry_error);
}

TEST_CASE("non-starlike polygons are rejected", "[geometry]") {
  // L-shape with the origin deep in one arm: rays into the other arm cross
  // the boundary twice.
  const std::vector<Vec2> ell = {vec2(-3, -1), vec2(1, -1), vec2(1, 1),
                                 vec2(-1, 1), vec2(-1, 3), vec2(-3, 3)};
  REQUIRE_THROWS_AS(shapes::polygon(ell), geometry_error);

  const std::vector<Vec2> off_center = {vec2(1, 0.5), vec2(2, 0.5), vec2(2, 1.5),
                                        vec2(1, 1.5)};
  REQUIRE_THROWS_AS(shapes::polygon(off_center), geometry_error);

  REQUIRE_THROWS_AS(shapes::ellipse(-1.0, 2.0), geometry_error);
  REQUIRE_THROWS_AS(shapes::cone(2.0, 1.0, 1.0), geometry_error);
}

TEST_CASE("point clouds expose their distance to the origin", "[geometry]") {
  const auto cloud = circle_with_whisker_cloud(10000);
  REQUIRE(cloud.dist0 == Catch::Approx(0.5).epsilon(1e-12));
  REQUIRE(cloud.points.size() == 10000);
  REQUIRE_THROWS_AS(PointCloud<2>({vec2(0, 0), vec2(1, 0)}), geometry_error);
}
