#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "quasinv/vec.hpp"

namespace quasinv {

// Dense row-major n-by-n matrix, n <= 8. Big enough for Jacobians of the
// maps in this library, small enough to keep everything on the stack.
struct SmallMat {
  int n = 0;
  std::array<double, 64> a{};

  SmallMat() = default;
  explicit SmallMat(int dim) : n(dim) {
    if (dim < 1 || dim > 8) throw std::invalid_argument("matrix dimension must be 1..8");
  }

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

  static SmallMat identity(int dim) {
    SmallMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static SmallMat diagonal(const std::vector<double>& d) {
    SmallMat m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }
};

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues_sym(SmallMat s) {
  const int n = s.n;
  if (n < 1) throw std::invalid_argument("empty matrix");
  double frob = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frob += s(i, j) * s(i, j);
  frob = std::sqrt(frob);
  const double stop = std::max(1e-300, 1e-30 * frob);

  for (int sweep = 0; sweep < 128; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += s(p, q) * s(p, q);
    if (std::sqrt(2.0 * off) < stop) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = s(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (s(q, q) - s(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (int k = 0; k < n; ++k) {
          const double skp = s(k, p), skq = s(k, q);
          s(k, p) = c * skp - sn * skq;
          s(k, q) = sn * skp + c * skq;
        }
        for (int k = 0; k < n; ++k) {
          const double spk = s(p, k), sqk = s(q, k);
          s(p, k) = c * spk - sn * sqk;
          s(q, k) = sn * spk + c * sqk;
        }
      }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = s(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Singular values of J, ascending, via the symmetric eigenproblem of J*J^T.
inline std::vector<double> singular_values(const SmallMat& j) {
  const int n = j.n;
  SmallMat s(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double acc = 0;
      for (int k = 0; k < n; ++k) acc += j(p, k) * j(q, k);
      s(p, q) = acc;
    }
  auto ev = jacobi_eigenvalues_sym(s);
  for (double& v : ev) v = std::sqrt(std::max(0.0, v));
  return ev;
}

// Central-difference Jacobian of a vector map at x.
template <int N>
SmallMat fd_jacobian(const std::function<Vec<N>(const Vec<N>&)>& f, const Vec<N>& x, double h) {
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  SmallMat j(N);
  for (int col = 0; col < N; ++col) {
    Vec<N> xp = x, xm = x;
    xp[col] += h;
    xm[col] -= h;
    const Vec<N> fp = f(xp), fm = f(xm);
    for (int row = 0; row < N; ++row) j(row, col) = (fp[row] - fm[row]) / (2.0 * h);
  }
  return j;
}

}  // namespace quasinv
