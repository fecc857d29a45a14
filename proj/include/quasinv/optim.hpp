#pragma once

#include <cmath>
#include <functional>

#include "quasinv/rng.hpp"
#include "quasinv/vec.hpp"

namespace quasinv {

// Golden-section minimization on [lo, hi]. Unimodality is the caller's
// problem; we only promise convergence to a local minimizer.
inline double golden_min(const std::function<double(double)>& f, double lo, double hi,
                         double tol = 1e-12) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

// Multiscale pattern search minimizing an objective over unit directions.
// Deterministic: probe directions come from a fixed-seed generator.
template <int N>
Vec<N> refine_direction_min(const std::function<double(const Vec<N>&)>& obj, Vec<N> u0,
                            double rho0 = 0.1, int levels = 40, int probes = 24) {
  Rng rng(fnv1a("direction-refine"));
  Vec<N> best = u0 / norm(u0);
  double fbest = obj(best);
  double rho = rho0;
  for (int level = 0; level < levels && rho > 1e-12; ++level) {
    bool improved = false;
    for (int p = 0; p < probes; ++p) {
      const Vec<N> cand = rng.template cap_vector<N>(best, rho);
      const double fc = obj(cand);
      if (fc < fbest) {
        fbest = fc;
        best = cand;
        improved = true;
      }
    }
    if (!improved) rho *= 0.5;
  }
  return best;
}

}  // namespace quasinv
