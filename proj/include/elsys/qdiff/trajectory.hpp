#pragma once

// Horizontal direction field of q = f(z) dz^2: the unit vector v with
// f(z) v^2 > 0, i.e. arg v = -arg f(z) / 2 (defined up to sign).

#include "elsys/qdiff/rational_qd.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace elsys::qdiff {

using cplx = std::complex<double>;
using ComplexQD = RationalQD<cplx>;

// All complex roots by Durand-Kerner iteration.
inline std::vector<cplx> poly_roots(const Poly<cplx>& p, int max_iter = 500) {
  const int n = p.degree();
  if (n < 1) return {};
  Poly<cplx> m = p.monic();
  std::vector<cplx> z(static_cast<std::size_t>(n));
  const cplx seed(0.4, 0.9);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i);
  for (int it = 0; it < max_iter; ++it) {
    double moved = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      cplx den(1);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) den *= z[i] - z[j];
      cplx step = m(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-15) break;
  }
  return z;
}

struct Window {
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
};

struct TrajectorySample {
  cplx z;
  cplx dir;  // unit horizontal direction; zero at a gap
  bool gap = false;
};

inline std::vector<cplx> critical_points(const ComplexQD& q) {
  auto zs = poly_roots(q.numerator());
  auto ps = poly_roots(q.denominator());
  zs.insert(zs.end(), ps.begin(), ps.end());
  return zs;
}

inline cplx horizontal_direction(const ComplexQD& q, cplx z) {
  cplx f = q(z);
  return std::polar(1.0, -std::arg(f) / 2);
}

// grid_n x grid_n samples; points within margin of a zero or pole of q are
// gap markers.
inline std::vector<TrajectorySample> trajectory_field(const ComplexQD& q, const Window& w, int grid_n,
                                                      double margin = 1e-3) {
  auto crit = critical_points(q);
  std::vector<TrajectorySample> out;
  for (int iy = 0; iy < grid_n; ++iy)
    for (int ix = 0; ix < grid_n; ++ix) {
      double fx = grid_n > 1 ? static_cast<double>(ix) / (grid_n - 1) : 0.5;
      double fy = grid_n > 1 ? static_cast<double>(iy) / (grid_n - 1) : 0.5;
      cplx z(w.xmin + fx * (w.xmax - w.xmin), w.ymin + fy * (w.ymax - w.ymin));
      bool gap = false;
      for (const cplx& c : crit) gap = gap || std::abs(z - c) < margin;
      out.push_back({z, gap ? cplx(0) : horizontal_direction(q, z), gap});
    }
  return out;
}

// Integrates a horizontal trajectory from seed in both directions with a
// midpoint rule, stopping near critical points or at the window edge.
inline std::vector<cplx> streamline(const ComplexQD& q, cplx seed, const Window& w, double step = 0.01,
                                    int max_steps = 2000, double margin = 0.02) {
  auto crit = critical_points(q);
  auto stop = [&](cplx z) {
    if (z.real() < w.xmin || z.real() > w.xmax || z.imag() < w.ymin || z.imag() > w.ymax) return true;
    for (const cplx& c : crit)
      if (std::abs(z - c) < margin) return true;
    return false;
  };
  auto trace = [&](cplx start, cplx heading) {
    std::vector<cplx> pts;
    cplx z = start;
    for (int s = 0; s < max_steps && !stop(z); ++s) {
      cplx d = horizontal_direction(q, z);
      if (std::real(d * std::conj(heading)) < 0) d = -d;
      cplx mid = z + 0.5 * step * d;
      cplx dm = horizontal_direction(q, mid);
      if (std::real(dm * std::conj(d)) < 0) dm = -dm;
      z += step * dm;
      heading = dm;
      pts.push_back(z);
    }
    return pts;
  };
  if (stop(seed)) return {};
  cplx d0 = horizontal_direction(q, seed);
  auto fwd = trace(seed, d0);
  auto back = trace(seed, -d0);
  std::vector<cplx> line(back.rbegin(), back.rend());
  line.push_back(seed);
  line.insert(line.end(), fwd.begin(), fwd.end());
  return line;
}

// z / ((1 - z^3)(z^3 + (2+sqrt3)^3)), the face-curve differential.
inline ComplexQD face_differential() {
  const double r3 = std::pow(2 + std::sqrt(3.0), 3);
  Poly<cplx> num{cplx(0), cplx(1)};
  Poly<cplx> a{cplx(1), cplx(0), cplx(0), cplx(-1)};
  Poly<cplx> b{cplx(r3), cplx(0), cplx(0), cplx(1)};
  return {num, a * b};
}

}  // namespace elsys::qdiff
