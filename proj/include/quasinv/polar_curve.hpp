#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasinv/vec.hpp"

namespace quasinv {

inline double wrap_angle(double t) {
  const double two_pi = 2.0 * pi();
  double w = std::fmod(t, two_pi);
  if (w < 0) w += two_pi;
  return w;
}

// Uniformly-spaced-or-not periodic cubic Hermite interpolant with
// Catmull-Rom slopes. Parameters live on [0, 2*pi).
class PeriodicHermite {
 public:
  PeriodicHermite(std::vector<double> t, std::vector<double> r)
      : t_(std::move(t)), r_(std::move(r)) {
    const std::size_t m = t_.size();
    if (m < 3 || r_.size() != m) throw geometry_error("polar table needs >= 3 nodes");
    for (std::size_t i = 1; i < m; ++i)
      if (!(t_[i] > t_[i - 1])) throw geometry_error("polar table parameters must increase");
    if (t_.front() < 0.0 || t_.back() >= 2.0 * pi())
      throw geometry_error("polar table parameters must lie in [0, 2*pi)");
    slopes_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double tl = node_t(static_cast<long>(i) - 1), tr = node_t(static_cast<long>(i) + 1);
      const double rl = node_r(static_cast<long>(i) - 1), rr = node_r(static_cast<long>(i) + 1);
      slopes_[i] = (rr - rl) / (tr - tl);
    }
  }

  double value(double t) const { return eval(t).first; }
  double derivative(double t) const { return eval(t).second; }
  const std::vector<double>& nodes() const { return t_; }
  const std::vector<double>& values() const { return r_; }

 private:
  double node_t(long i) const {
    const long m = static_cast<long>(t_.size());
    long k = ((i % m) + m) % m;
    const double shift = 2.0 * pi() * static_cast<double>((i - k) / m);
    return t_[static_cast<std::size_t>(k)] + shift;
  }
  double node_r(long i) const {
    const long m = static_cast<long>(t_.size());
    return r_[static_cast<std::size_t>(((i % m) + m) % m)];
  }
  double node_s(long i) const {
    const long m = static_cast<long>(t_.size());
    return slopes_[static_cast<std::size_t>(((i % m) + m) % m)];
  }

  std::pair<double, double> eval(double t) const {
    const double w = wrap_angle(t);
    const long m = static_cast<long>(t_.size());
    long k = static_cast<long>(std::upper_bound(t_.begin(), t_.end(), w) - t_.begin()) - 1;
    if (k < 0) k = m - 1;  // w before the first node: wrapped final segment
    const double t0 = node_t(k), t1 = node_t(k + 1);
    const double h = t1 - t0;
    double u = (w - t0) / h;
    if (u < 0) u += 2.0 * pi() / h;
    const double r0 = node_r(k), r1 = node_r(k + 1);
    const double m0 = node_s(k) * h, m1 = node_s(k + 1) * h;
    const double u2 = u * u, u3 = u2 * u;
    const double val = (2 * u3 - 3 * u2 + 1) * r0 + (u3 - 2 * u2 + u) * m0 +
                       (-2 * u3 + 3 * u2) * r1 + (u3 - u2) * m1;
    const double der = ((6 * u2 - 6 * u) * r0 + (3 * u2 - 4 * u + 1) * m0 +
                        (-6 * u2 + 6 * u) * r1 + (3 * u2 - 2 * u) * m1) /
                       h;
    return {val, der};
  }

  std::vector<double> t_, r_, slopes_;
};

// Corner detection for sampled curves: a node is a breakpoint when its
// one-sided slope jump exceeds 10x the median jump of the other nodes.
inline std::vector<double> detect_breakpoints(const std::vector<double>& t,
                                              const std::vector<double>& r) {
  const std::size_t m = t.size();
  std::vector<double> jump(m);
  auto at = [&](long i) {
    const long mm = static_cast<long>(m);
    return static_cast<std::size_t>(((i % mm) + mm) % mm);
  };
  auto tt = [&](long i) {
    const long mm = static_cast<long>(m);
    long k = ((i % mm) + mm) % mm;
    return t[static_cast<std::size_t>(k)] + 2.0 * pi() * static_cast<double>((i - k) / mm);
  };
  for (std::size_t i = 0; i < m; ++i) {
    const long li = static_cast<long>(i);
    const double sl = (r[i] - r[at(li - 1)]) / (tt(li) - tt(li - 1));
    const double sr = (r[at(li + 1)] - r[i]) / (tt(li + 1) - tt(li));
    jump[i] = std::fabs(sr - sl);
  }
  std::vector<double> sorted = jump;
  std::sort(sorted.begin(), sorted.end());
  const double med = sorted[m / 2];
  std::vector<double> out;
  for (std::size_t i = 0; i < m; ++i)
    if (jump[i] > 10.0 * std::max(med, 1e-12)) out.push_back(t[i]);
  return out;
}

// Polar description of a closed starlike curve: t -> r(t) > 0 on [0, 2*pi),
// with the parameters where the curve fails to be C^1 listed explicitly.
class PolarCurve2D {
 public:
  using Fn = std::function<double(double)>;

  static PolarCurve2D from_functions(Fn r, Fn r_prime, std::vector<double> breakpoints = {}) {
    PolarCurve2D c;
    c.r_ = std::move(r);
    c.rp_ = std::move(r_prime);
    c.breakpoints_ = normalize_breaks(std::move(breakpoints));
    c.validate();
    return c;
  }

  // Derivative falls back to a central difference on the smooth pieces.
  static PolarCurve2D from_function_fd(Fn r, std::vector<double> breakpoints = {}) {
    PolarCurve2D c;
    c.r_ = std::move(r);
    c.breakpoints_ = normalize_breaks(std::move(breakpoints));
    c.validate();
    return c;
  }

  static PolarCurve2D from_table(const std::vector<double>& t, const std::vector<double>& r) {
    for (double v : r)
      if (!(v > 0.0) || !std::isfinite(v)) throw geometry_error("polar table radius must be positive");
    auto spline = std::make_shared<PeriodicHermite>(t, r);
    const double floor = 0.5 * *std::min_element(r.begin(), r.end());
    // Positivity guard: the interpolant may not dip below half the tabulated
    // minimum anywhere; a curve that would need clamping is rejected.
    for (int i = 0; i < 8192; ++i) {
      const double s = 2.0 * pi() * (static_cast<double>(i) + 0.5) / 8192.0;
      if (spline->value(s) < floor)
        throw geometry_error("polar table interpolant dips below the positivity floor");
    }
    PolarCurve2D c;
    c.r_ = [spline](double s) { return spline->value(s); };
    c.rp_ = [spline](double s) { return spline->derivative(s); };
    c.breakpoints_ = detect_breakpoints(t, r);
    c.validate();
    return c;
  }

  double value(double t) const { return r_(wrap_angle(t)); }

  bool near_breakpoint(double t, double tol = 1e-9) const {
    const double w = wrap_angle(t);
    for (double b : breakpoints_) {
      double d = std::fabs(w - b);
      d = std::min(d, 2.0 * pi() - d);
      if (d <= tol) return true;
    }
    return false;
  }

  // r'(t) on a smooth piece; undefined (throws) at a breakpoint.
  double derivative(double t, double breakpoint_tol = 1e-9) const {
    if (near_breakpoint(t, breakpoint_tol))
      throw std::domain_error("derivative undefined at breakpoint");
    if (rp_) return rp_(wrap_angle(t));
    return derivative_fd(t, 1e-6);
  }

  double derivative_fd(double t, double h) const {
    return (value(t + h) - value(t - h)) / (2.0 * h);
  }

  bool has_analytic_derivative() const { return static_cast<bool>(rp_); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  Vec2 point(double t) const {
    const double r = value(t);
    return vec2(r * std::cos(t), r * std::sin(t));
  }

 private:
  static std::vector<double> normalize_breaks(std::vector<double> b) {
    for (double& x : b) x = wrap_angle(x);
    std::sort(b.begin(), b.end());
    return b;
  }

  void validate() const {
    const double r0 = value(0.0), r1 = r_(wrap_angle(2.0 * pi()));
    if (std::fabs(r0 - r1) > 1e-12 * std::max(1.0, std::fabs(r0)))
      throw geometry_error("polar curve is not periodic");
    if (!(r0 > 0.0)) throw geometry_error("polar curve radius must be positive");
  }

  Fn r_, rp_;
  std::vector<double> breakpoints_;
};

}  // namespace quasinv
