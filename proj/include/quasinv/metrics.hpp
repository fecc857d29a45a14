#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quasinv/maps.hpp"
#include "quasinv/starlike.hpp"
#include "quasinv/vec.hpp"

namespace quasinv {

// ---- chordal metric ----------------------------------------------------------

template <int N>
double chordal(const ExtendedPoint<N>& x, const ExtendedPoint<N>& y) {
  if (x.infinite && y.infinite) return 0.0;
  if (x.infinite) return 1.0 / std::sqrt(1.0 + norm_sq(y.p));
  if (y.infinite) return 1.0 / std::sqrt(1.0 + norm_sq(x.p));
  return norm(x.p - y.p) /
         (std::sqrt(1.0 + norm_sq(x.p)) * std::sqrt(1.0 + norm_sq(y.p)));
}

template <int N>
double chordal(const Vec<N>& x, const Vec<N>& y) {
  return chordal(ExtendedPoint<N>::finite(x), ExtendedPoint<N>::finite(y));
}

// ---- boundary discretizations --------------------------------------------------

// Finite sample of a domain boundary. `project` snaps a nearby point onto the
// true boundary when the source shape is known, enabling local refinement of
// pair suprema; without it suprema are taken over the fixed sample only.
template <int N>
struct BoundaryDiscretization {
  std::vector<Vec<N>> pts;
  int refinement = 0;
  std::string source;
  std::function<Vec<N>(const Vec<N>&)> project;
  double scale = 0;  // bounding-box diagonal
};

template <int N>
double bbox_diagonal(const std::vector<Vec<N>>& pts) {
  Vec<N> lo = pts.front(), hi = pts.front();
  for (const auto& p : pts)
    for (int k = 0; k < N; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  return norm(hi - lo);
}

template <int N>
BoundaryDiscretization<N> discretize_boundary(const StarlikeBoundary<N>& M, long m,
                                              int level = 0) {
  if (m < 2) throw std::invalid_argument("boundary discretization needs at least 2 points");
  if (level < 0 || level > 8) throw std::invalid_argument("refinement level out of range");
  BoundaryDiscretization<N> d;
  d.pts = M.boundary_grid(m << level);
  d.refinement = level;
  d.source = M.descriptor();
  d.project = [M](const Vec<N>& x) { return polar_point(M, UnitDirection<N>(x)); };
  d.scale = bbox_diagonal(d.pts);
  return d;
}

template <int N>
BoundaryDiscretization<N> discretize_sphere(const Vec<N>& center, double r, long m) {
  if (!(r > 0) || m < 2) throw std::invalid_argument("bad sphere discretization");
  BoundaryDiscretization<N> d;
  d.pts.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    Vec<N> u;
    if constexpr (N == 2) {
      const double t = 2.0 * pi() * static_cast<double>(i) / static_cast<double>(m);
      u = vec2(std::cos(t), std::sin(t));
    } else {
      u = fibonacci_dir(i, m);
    }
    d.pts.push_back(center + r * u);
  }
  d.source = "sphere";
  d.project = [center, r](const Vec<N>& x) {
    return center + r * UnitDirection<N>(x - center).u;
  };
  d.scale = bbox_diagonal(d.pts);
  return d;
}

// Two concentric spheres about the origin, m samples each.
template <int N>
BoundaryDiscretization<N> annulus_boundary(double r_in, double r_out, long m_per) {
  if (!(0 < r_in && r_in < r_out)) throw std::invalid_argument("bad annulus radii");
  auto inner = discretize_sphere<N>(Vec<N>{}, r_in, m_per);
  auto outer = discretize_sphere<N>(Vec<N>{}, r_out, m_per);
  BoundaryDiscretization<N> d;
  d.pts = inner.pts;
  d.pts.insert(d.pts.end(), outer.pts.begin(), outer.pts.end());
  d.source = "annulus";
  d.project = [r_in, r_out](const Vec<N>& x) {
    const double rho = norm(x);
    const double r = (std::fabs(rho - r_in) <= std::fabs(rho - r_out)) ? r_in : r_out;
    return r * UnitDirection<N>(x).u;
  };
  d.scale = bbox_diagonal(d.pts);
  return d;
}

// Image of a discretization under a point map. The projector does not survive
// the transform, so suprema on the image are sample-only.
template <int N>
BoundaryDiscretization<N> transform_boundary(const BoundaryDiscretization<N>& d,
                                             const std::function<Vec<N>(const Vec<N>&)>& f,
                                             const std::string& note) {
  BoundaryDiscretization<N> out;
  out.pts.reserve(d.pts.size());
  for (const auto& p : d.pts) out.pts.push_back(f(p));
  out.refinement = d.refinement;
  out.source = d.source + " / " + note;
  out.scale = bbox_diagonal(out.pts);
  return out;
}

// ---- pair suprema over the boundary -------------------------------------------

struct PairSupOptions {
  bool refine = true;               // local search around the argmax pair
  double boundary_guard_rel = 1e-7;  // min sample distance, relative to scale
};

namespace detail {

template <int N>
bool lex_less(const Vec<N>& a, const Vec<N>& b) {
  for (int k = 0; k < N; ++k) {
    if (a[k] < b[k]) return true;
    if (a[k] > b[k]) return false;
  }
  return false;
}

inline double cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Convex hull, counterclockwise, strict turns (monotone chain).
inline std::vector<Vec2> convex_hull(std::vector<Vec2> p) {
  std::sort(p.begin(), p.end(), [](const Vec2& a, const Vec2& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  p.erase(std::unique(p.begin(), p.end(),
                      [](const Vec2& a, const Vec2& b) { return a[0] == b[0] && a[1] == b[1]; }),
          p.end());
  const std::size_t n = p.size();
  if (n <= 2) return p;
  std::vector<Vec2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

// Largest pairwise distance via rotating calipers on the hull.
inline double point_set_diameter(const std::vector<Vec2>& pts) {
  const std::vector<Vec2> h = convex_hull(pts);
  const std::size_t n = h.size();
  if (n < 2) return 0.0;
  if (n == 2) return norm(h[1] - h[0]);
  double best = 0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ni = (i + 1) % n;
    const Vec2 e = h[ni] - h[i];
    while (true) {
      const std::size_t nj = (j + 1) % n;
      if (cross2(e, h[nj] - h[i]) > cross2(e, h[j] - h[i]))
        j = nj;
      else
        break;
      if (j == i) break;
    }
    best = std::max({best, norm(h[j] - h[i]), norm(h[j] - h[ni])});
  }
  return best;
}

template <int N>
void require_off_samples(const BoundaryDiscretization<N>& d, const Vec<N>& x,
                         const PairSupOptions& opt) {
  double mind = std::numeric_limits<double>::infinity();
  for (const auto& a : d.pts) mind = std::min(mind, norm(a - x));
  if (mind < opt.boundary_guard_rel * d.scale)
    throw std::runtime_error("metric diverges near boundary at this resolution");
}

// Blend-and-project candidates on the true boundary near p.
template <int N>
std::vector<Vec<N>> boundary_candidates(const BoundaryDiscretization<N>& d, const Vec<N>& p) {
  std::vector<Vec<N>> out{p};
  if (!d.project) return out;
  // Four nearest distinct samples seed the blend directions.
  std::vector<std::pair<double, std::size_t>> near;
  near.reserve(d.pts.size());
  for (std::size_t i = 0; i < d.pts.size(); ++i) {
    const double dist = norm(d.pts[i] - p);
    if (dist > 0) near.push_back({dist, i});
  }
  const std::size_t keep = std::min<std::size_t>(4, near.size());
  std::partial_sort(near.begin(), near.begin() + static_cast<long>(keep), near.end());
  for (std::size_t k = 0; k < keep; ++k) {
    const Vec<N> q = d.pts[near[k].second];
    for (double t : {0.75, 0.5, 0.25, 0.125, 0.0625, 0.03125,
                     -0.75, -0.5, -0.25, -0.125, -0.0625, -0.03125})
      out.push_back(d.project(p + t * (q - p)));
  }
  return out;
}

}  // namespace detail

// Mobius metric against the sampled boundary:
// log(1 + sup_{a,b} |a-b||x-y| / (|a-x||b-y|)). The sup is over sample pairs,
// optionally sharpened by one local refinement around the argmax; both stages
// use genuine boundary points, so the value is a lower bound of the true
// metric, converging from below under refinement.
template <int N>
double mobius_delta(const BoundaryDiscretization<N>& disc, Vec<N> x, Vec<N> y,
                    const PairSupOptions& opt = {}) {
  if (disc.pts.size() < 2) throw std::invalid_argument("boundary needs at least 2 samples");
  if (detail::lex_less(y, x)) std::swap(x, y);  // symmetric by construction
  detail::require_off_samples(disc, x, opt);
  detail::require_off_samples(disc, y, opt);
  const double dxy = norm(x - y);
  if (dxy == 0.0) return 0.0;

  const std::size_t m = disc.pts.size();
  std::vector<double> wx(m), wy(m);
  for (std::size_t i = 0; i < m; ++i) {
    wx[i] = 1.0 / norm(disc.pts[i] - x);
    wy[i] = 1.0 / norm(disc.pts[i] - y);
  }
  double best = 0;
  std::size_t bi = 0, bj = 0;
  bool flipped = false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double dab = norm(disc.pts[i] - disc.pts[j]);
      const double t1 = dab * wx[i] * wy[j];
      const double t2 = dab * wx[j] * wy[i];
      if (t1 > best) {
        best = t1;
        bi = i;
        bj = j;
        flipped = false;
      }
      if (t2 > best) {
        best = t2;
        bi = j;
        bj = i;
        flipped = true;
      }
    }
  (void)flipped;

  if (opt.refine && disc.project) {
    Vec<N> a = disc.pts[bi], b = disc.pts[bj];
    for (int round = 0; round < 2; ++round) {
      const auto ca = detail::boundary_candidates(disc, a);
      const auto cb = detail::boundary_candidates(disc, b);
      for (const auto& pa : ca)
        for (const auto& pb : cb) {
          const double da = norm(pa - x), db = norm(pb - y);
          if (da <= 0 || db <= 0) continue;
          const double t = norm(pa - pb) / (da * db);
          if (t > best) {
            best = t;
            a = pa;
            b = pb;
          }
        }
    }
  }
  return std::log1p(best * dxy);
}

// Ferrand density against the sampled boundary:
// w(x) = sup_{a,b} |a-b| / (|x-a||x-b|), computed as the diameter of the
// boundary inverted about x (the inversion distance law turns the ratio into
// a plain distance), then optionally refined around the argmax pair.
template <int N>
double ferrand_density(const BoundaryDiscretization<N>& disc, const Vec<N>& x,
                       const PairSupOptions& opt = {}) {
  if (disc.pts.size() < 2) throw std::invalid_argument("boundary needs at least 2 samples");
  detail::require_off_samples(disc, x, opt);
  const std::size_t m = disc.pts.size();

  std::vector<Vec<N>> inv(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec<N> d = disc.pts[i] - x;
    inv[i] = d / norm_sq(d);
  }

  double best = 0;
  std::size_t bi = 0, bj = 1;
  if constexpr (N == 2) {
    best = detail::point_set_diameter(inv);
    if (opt.refine && disc.project) {
      // The caliper pass drops indices; recover an argmax pair by scanning
      // against the two extreme inverted points along the diameter direction.
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      std::size_t ilo = 0, ihi = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          const double d = norm_sq(inv[i] - inv[j]);
          if (d > hi) {
            hi = d;
            ilo = i;
            ihi = j;
          }
        }
      (void)lo;
      bi = ilo;
      bj = ihi;
    }
  } else {
    double hi = -1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const double d = norm_sq(inv[i] - inv[j]);
        if (d > hi) {
          hi = d;
          bi = i;
          bj = j;
        }
      }
    best = std::sqrt(std::max(0.0, hi));
  }

  if (opt.refine && disc.project) {
    Vec<N> a = disc.pts[bi], b = disc.pts[bj];
    for (int round = 0; round < 2; ++round) {
      const auto ca = detail::boundary_candidates(disc, a);
      const auto cb = detail::boundary_candidates(disc, b);
      for (const auto& pa : ca)
        for (const auto& pb : cb) {
          const double da = norm(pa - x), db = norm(pb - x);
          if (da <= 0 || db <= 0) continue;
          const double t = norm(pa - pb) / (da * db);
          if (t > best) {
            best = t;
            a = pa;
            b = pb;
          }
        }
    }
  }
  return best;
}

// ---- interior graph for the path metric ----------------------------------------

template <int N>
struct Region {
  std::function<bool(const Vec<N>&)> inside;
  Vec<N> lo{}, hi{};
};

template <int N>
Region<N> region_ball(const Vec<N>& center, double r) {
  if (!(r > 0)) throw std::invalid_argument("ball radius must be positive");
  Region<N> g;
  g.inside = [center, r](const Vec<N>& x) { return norm(x - center) < r; };
  for (int k = 0; k < N; ++k) {
    g.lo[k] = center[k] - r;
    g.hi[k] = center[k] + r;
  }
  return g;
}

template <int N>
Region<N> region_annulus(double r_in, double r_out) {
  if (!(0 < r_in && r_in < r_out)) throw std::invalid_argument("bad annulus radii");
  Region<N> g;
  g.inside = [r_in, r_out](const Vec<N>& x) {
    const double rho = norm(x);
    return rho > r_in && rho < r_out;
  };
  for (int k = 0; k < N; ++k) {
    g.lo[k] = -r_out;
    g.hi[k] = r_out;
  }
  return g;
}

template <int N>
Region<N> region_starlike(const StarlikeBoundary<N>& M, double shrink = 1.0) {
  if (!(shrink > 0) || shrink > 1.0) throw std::invalid_argument("shrink must lie in (0, 1]");
  Region<N> g;
  g.inside = [M, shrink](const Vec<N>& x) {
    const double rho = norm(x);
    if (rho == 0.0) return true;
    return rho < shrink * M.radius_at(x);
  };
  const double r = M.r_max() * shrink;
  for (int k = 0; k < N; ++k) {
    g.lo[k] = -r;
    g.hi[k] = r;
  }
  return g;
}

// Uniform lattice clipped to a region, edges over a Chebyshev stencil with
// coprime offsets, each weighted by density-at-midpoint times length. Stencil
// radius 1 is the plain 8-neighbor (2D) / 26-neighbor (3D) graph; larger radii
// shrink the direction-quantization bias of shortest paths.
template <int N>
struct InteriorGraph {
  double spacing = 0;
  int stencil = 1;
  std::vector<Vec<N>> nodes;
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::unordered_map<std::uint64_t, int> index;
  std::function<double(const Vec<N>&)> density;
  std::function<bool(const Vec<N>&)> inside;
  long n_edges = 0;
};

namespace detail {

template <int N>
std::uint64_t lattice_key(const std::array<long, N>& c) {
  std::uint64_t k = 0;
  for (int i = 0; i < N; ++i)
    k = (k << 21) | (static_cast<std::uint64_t>(c[static_cast<std::size_t>(i)] + (1L << 20)) &
                     ((1ull << 21) - 1));
  return k;
}

inline long gcd_l(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

template <int N>
InteriorGraph<N> build_interior_graph(const BoundaryDiscretization<N>& boundary,
                                      const Region<N>& region, double spacing,
                                      int stencil = 1) {
  if (!(spacing > 0)) throw std::invalid_argument("spacing must be positive");
  if (stencil < 1 || stencil > 6) throw std::invalid_argument("stencil radius out of range");
  InteriorGraph<N> g;
  g.spacing = spacing;
  g.stencil = stencil;
  g.inside = region.inside;
  g.density = [boundary](const Vec<N>& x) {
    return ferrand_density(boundary, x, PairSupOptions{.refine = false});
  };

  std::array<long, N> lo{}, hi{};
  double cells = 1;
  for (int k = 0; k < N; ++k) {
    lo[static_cast<std::size_t>(k)] = static_cast<long>(std::ceil(region.lo[k] / spacing)) - 1;
    hi[static_cast<std::size_t>(k)] = static_cast<long>(std::floor(region.hi[k] / spacing)) + 1;
    cells *= static_cast<double>(hi[static_cast<std::size_t>(k)] -
                                 lo[static_cast<std::size_t>(k)] + 1);
  }
  if (cells > 4e6) throw std::invalid_argument("grid too fine for the region");

  // Nodes.
  std::vector<std::array<long, N>> cells_of;
  std::array<long, N> c = lo;
  while (true) {
    Vec<N> p;
    for (int k = 0; k < N; ++k)
      p[k] = static_cast<double>(c[static_cast<std::size_t>(k)]) * spacing;
    if (region.inside(p)) {
      g.index.emplace(detail::lattice_key<N>(c), static_cast<int>(g.nodes.size()));
      g.nodes.push_back(p);
      cells_of.push_back(c);
    }
    int k = 0;
    for (; k < N; ++k) {
      if (++c[static_cast<std::size_t>(k)] <= hi[static_cast<std::size_t>(k)]) break;
      c[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
    }
    if (k == N) break;
  }
  g.adj.resize(g.nodes.size());

  // Canonical half of the coprime stencil offsets.
  std::vector<std::array<long, N>> offsets;
  std::array<long, N> d{};
  for (int k = 0; k < N; ++k) d[static_cast<std::size_t>(k)] = -stencil;
  while (true) {
    long gcd = 0;
    bool positive = false, nonzero = false;
    for (int k = N; k-- > 0;) {
      const long v = d[static_cast<std::size_t>(k)];
      gcd = detail::gcd_l(gcd, v);
      if (v != 0 && !nonzero) {
        nonzero = true;
        positive = v > 0;
      }
    }
    if (nonzero && positive && gcd == 1) offsets.push_back(d);
    int k = 0;
    for (; k < N; ++k) {
      if (++d[static_cast<std::size_t>(k)] <= stencil) break;
      d[static_cast<std::size_t>(k)] = -stencil;
    }
    if (k == N) break;
  }

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (const auto& off : offsets) {
      std::array<long, N> nb = cells_of[i];
      long cheb = 0;
      for (int k = 0; k < N; ++k) {
        nb[static_cast<std::size_t>(k)] += off[static_cast<std::size_t>(k)];
        cheb = std::max(cheb, std::labs(off[static_cast<std::size_t>(k)]));
      }
      const auto it = g.index.find(detail::lattice_key<N>(nb));
      if (it == g.index.end()) continue;
      const int j = it->second;
      const Vec<N> a = g.nodes[i], b = g.nodes[static_cast<std::size_t>(j)];
      // Long edges must not tunnel through excluded pockets.
      bool clear = true;
      const long probes = 2 * cheb;
      for (long s = 1; s < probes && clear; ++s)
        clear = region.inside(a + (static_cast<double>(s) / static_cast<double>(probes)) * (b - a));
      if (!clear) continue;
      double w;
      try {
        w = g.density(0.5 * (a + b));
      } catch (const std::runtime_error&) {
        continue;  // midpoint indistinguishable from the boundary sample set
      }
      const double cost = w * norm(b - a);
      g.adj[i].push_back({j, cost});
      g.adj[static_cast<std::size_t>(j)].push_back({static_cast<int>(i), cost});
      ++g.n_edges;
    }
  }
  return g;
}

namespace detail {

template <int N>
int snap_node(const InteriorGraph<N>& g, const Vec<N>& x) {
  std::array<long, N> base{};
  for (int k = 0; k < N; ++k)
    base[static_cast<std::size_t>(k)] = std::lround(x[k] / g.spacing);
  int best = -1;
  double best_d = 1.5 * g.spacing * std::sqrt(static_cast<double>(N));
  std::array<long, N> d{};
  for (int k = 0; k < N; ++k) d[static_cast<std::size_t>(k)] = -1;
  while (true) {
    std::array<long, N> cell = base;
    for (int k = 0; k < N; ++k)
      cell[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k)];
    const auto it = g.index.find(lattice_key<N>(cell));
    if (it != g.index.end()) {
      const double dist = norm(g.nodes[static_cast<std::size_t>(it->second)] - x);
      if (dist < best_d) {
        best_d = dist;
        best = it->second;
      }
    }
    int k = 0;
    for (; k < N; ++k) {
      if (++d[static_cast<std::size_t>(k)] <= 1) break;
      d[static_cast<std::size_t>(k)] = -1;
    }
    if (k == N) break;
  }
  if (best < 0) throw std::runtime_error("point does not attach to the interior graph");
  return best;
}

}  // namespace detail

// Path metric: shortest graph path between the snapped endpoints plus the
// straight stubs from each endpoint to its node, priced at local density.
template <int N>
double ferrand_sigma(const InteriorGraph<N>& g, Vec<N> x, Vec<N> y) {
  if (g.nodes.empty()) throw std::invalid_argument("empty interior graph");
  if (detail::lex_less(y, x)) std::swap(x, y);  // symmetric by construction
  if (norm(x - y) == 0.0) return 0.0;
  const int sx = detail::snap_node(g, x), sy = detail::snap_node(g, y);

  double stub = 0;
  if (norm(g.nodes[static_cast<std::size_t>(sx)] - x) > 0)
    stub += g.density(0.5 * (g.nodes[static_cast<std::size_t>(sx)] + x)) *
            norm(g.nodes[static_cast<std::size_t>(sx)] - x);
  if (norm(g.nodes[static_cast<std::size_t>(sy)] - y) > 0)
    stub += g.density(0.5 * (g.nodes[static_cast<std::size_t>(sy)] + y)) *
            norm(g.nodes[static_cast<std::size_t>(sy)] - y);
  if (sx == sy) return stub;

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.nodes.size(), inf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(sx)] = 0;
  heap.push({0.0, sx});
  while (!heap.empty()) {
    const auto [dcur, u] = heap.top();
    heap.pop();
    if (dcur > dist[static_cast<std::size_t>(u)]) continue;
    if (u == sy) break;
    for (const auto& [v, w] : g.adj[static_cast<std::size_t>(u)]) {
      const double cand = dcur + w;
      if (cand < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = cand;
        heap.push({cand, v});
      }
    }
  }
  if (dist[static_cast<std::size_t>(sy)] == inf)
    throw std::runtime_error("interior graph does not connect the query points");
  return stub + dist[static_cast<std::size_t>(sy)];
}

// ---- invariance checks -----------------------------------------------------------

struct InvarianceDiscrepancy {
  double delta_abs = 0, delta_rel = 0;
  double sigma_abs = 0, sigma_rel = 0;
  long n_pairs = 0;
};

// Largest |metric(m x, m y) - metric(x, y)| over the pairs, for the Mobius
// metric (always) and the path metric (when both graphs are given).
template <int N>
InvarianceDiscrepancy mobius_invariance_check(
    const BoundaryDiscretization<N>& disc, const BoundaryDiscretization<N>& disc_image,
    const InteriorGraph<N>* graph, const InteriorGraph<N>* graph_image,
    const std::function<Vec<N>(const Vec<N>&)>& m,
    const std::vector<std::pair<Vec<N>, Vec<N>>>& pairs, const PairSupOptions& opt = {}) {
  InvarianceDiscrepancy out;
  for (const auto& [x, y] : pairs) {
    const Vec<N> mx = m(x), my = m(y);
    const double d0 = mobius_delta(disc, x, y, opt);
    const double d1 = mobius_delta(disc_image, mx, my, opt);
    out.delta_abs = std::max(out.delta_abs, std::fabs(d1 - d0));
    out.delta_rel = std::max(out.delta_rel, std::fabs(d1 - d0) / std::max(d0, 1e-300));
    if (graph && graph_image) {
      const double s0 = ferrand_sigma(*graph, x, y);
      const double s1 = ferrand_sigma(*graph_image, mx, my);
      out.sigma_abs = std::max(out.sigma_abs, std::fabs(s1 - s0));
      out.sigma_rel = std::max(out.sigma_rel, std::fabs(s1 - s0) / std::max(s0, 1e-300));
    }
    ++out.n_pairs;
  }
  return out;
}

}  // namespace quasinv
