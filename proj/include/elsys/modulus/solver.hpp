#pragma once

// Extremal length of a marked polygon from the Dirichlet problem u = 0 on A,
// u = 1 on C, du/dn = 0 on B and D:  EL(A, C) = 1 / integral |grad u|^2.
//
// Piecewise-linear elements on a structured grid cut into right triangles
// (for axis-aligned cells this is the five-point scheme).  Rectilinear
// polygons use the tensor grid through all vertex coordinates, graded toward
// reentrant corners; convex quadrilaterals use a bilinear grid graded toward
// all four corners.  Levels halve the mesh and are combined by Richardson
// extrapolation with exponent 2.

#include "elsys/modulus/quadrilateral.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

namespace elsys::modulus {

struct SolverOptions {
  double cells_per_unit = 4;  // level-0 density
  int max_levels = 7;
  double grading = 2.0;  // exponent of the corner grading map t -> t^g
};

struct LevelDiagnostic {
  int level = 0;
  std::size_t unknowns = 0;
  double raw = 0;           // 1 / energy on this grid
  double extrapolated = 0;  // Richardson value (raw on level 0)
  double estimate = 0;      // |extrapolated - previous extrapolated|, 0 before level 2
};

struct ModulusResult {
  double value = 0;
  double error_estimate = 0;
  int grid_levels = 0;
  bool converged = false;
  std::vector<LevelDiagnostic> levels;
};

struct Mesh {
  std::vector<Point> nodes;
  std::vector<std::array<int, 3>> triangles;
};

namespace detail {

// n points of [0, 1] (n - 1 cells), graded toward the flagged ends.
inline std::vector<double> graded_unit(int cells, bool left, bool right, double g) {
  std::vector<double> t(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    double s = static_cast<double>(i) / cells;
    double v = s;
    if (left && right) {
      v = s < 0.5 ? 0.5 * std::pow(2 * s, g) : 1 - 0.5 * std::pow(2 * (1 - s), g);
    } else if (left) {
      v = std::pow(s, g);
    } else if (right) {
      v = 1 - std::pow(1 - s, g);
    }
    t[static_cast<std::size_t>(i)] = v;
  }
  t.front() = 0;
  t.back() = 1;
  return t;
}

inline std::vector<double> axis(const std::vector<double>& breaks, const std::set<double>& graded, int level,
                                const SolverOptions& o) {
  std::vector<double> out{breaks.front()};
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double a = breaks[i], b = breaks[i + 1];
    int n = std::max(1, static_cast<int>(std::ceil((b - a) * o.cells_per_unit - 1e-9))) << level;
    auto t = graded_unit(n, graded.count(a) > 0, graded.count(b) > 0, o.grading);
    for (std::size_t k = 1; k < t.size(); ++k) out.push_back(k + 1 == t.size() ? b : a + (b - a) * t[k]);
  }
  return out;
}

inline void add_cell(Mesh& m, int a, int b, int c, int d) {
  // a = (i, j), b = (i+1, j), c = (i+1, j+1), d = (i, j+1)
  m.triangles.push_back({a, b, c});
  m.triangles.push_back({a, c, d});
}

inline Mesh rectilinear_mesh(const Quadrilateral& q, int level, const SolverOptions& o) {
  std::vector<double> bx, by;
  for (const auto& p : q.vertices) {
    bx.push_back(p.x);
    by.push_back(p.y);
  }
  std::sort(bx.begin(), bx.end());
  bx.erase(std::unique(bx.begin(), bx.end()), bx.end());
  std::sort(by.begin(), by.end());
  by.erase(std::unique(by.begin(), by.end()), by.end());
  std::set<double> gx, gy;
  for (std::size_t r : q.reentrant()) {
    gx.insert(q.vertex(r).x);
    gy.insert(q.vertex(r).y);
  }
  auto xs = axis(bx, gx, level, o), ys = axis(by, gy, level, o);
  const std::size_t nx = xs.size(), ny = ys.size();
  std::vector<int> id(nx * ny, -1);
  Mesh m;
  auto node = [&](std::size_t i, std::size_t j) {
    int& k = id[j * nx + i];
    if (k < 0) {
      k = static_cast<int>(m.nodes.size());
      m.nodes.push_back({xs[i], ys[j]});
    }
    return k;
  };
  for (std::size_t j = 0; j + 1 < ny; ++j)
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      Point c{(xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2};
      if (!q.contains(c)) continue;
      add_cell(m, node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1));
    }
  return m;
}

inline Mesh bilinear_mesh(const Quadrilateral& q, int level, const SolverOptions& o) {
  double longest = 0;
  for (std::size_t i = 0; i < 4; ++i)
    longest = std::max(longest, std::hypot(q.vertex(i + 1).x - q.vertex(i).x, q.vertex(i + 1).y - q.vertex(i).y));
  int n = std::max(1, static_cast<int>(std::ceil(longest * o.cells_per_unit - 1e-9))) << level;
  auto t = graded_unit(n, true, true, o.grading);
  Point p0 = q.vertex(0), p1 = q.vertex(1), p2 = q.vertex(2), p3 = q.vertex(3);
  Mesh m;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      double s = t[static_cast<std::size_t>(i)], u = t[static_cast<std::size_t>(j)];
      m.nodes.push_back({(1 - s) * (1 - u) * p0.x + s * (1 - u) * p1.x + s * u * p2.x + (1 - s) * u * p3.x,
                         (1 - s) * (1 - u) * p0.y + s * (1 - u) * p1.y + s * u * p2.y + (1 - s) * u * p3.y});
    }
  auto id = [&](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) add_cell(m, id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
  return m;
}

inline double segment_distance(Point p, Point a, Point b) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy), 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

}  // namespace detail

inline Mesh build_mesh(const Quadrilateral& q, int level, const SolverOptions& o = {}) {
  if (q.rectilinear()) return detail::rectilinear_mesh(q, level, o);
  if (q.size() == 4 && q.convex()) return detail::bilinear_mesh(q, level, o);
  throw std::invalid_argument("quad_modulus: only rectilinear polygons and convex quadrilaterals are supported");
}

// Dirichlet energy of the discrete harmonic function on one mesh.
inline double dirichlet_energy(const Quadrilateral& q, const Mesh& m, std::size_t* unknowns = nullptr) {
  double diam = 0;
  for (const auto& a : q.vertices)
    for (const auto& b : q.vertices) diam = std::max(diam, std::hypot(a.x - b.x, a.y - b.y));
  const double eps = 1e-10 * diam;

  const std::size_t n = m.nodes.size();
  std::vector<int> bc(n, -1);  // -1 free, 0 / 1 Dirichlet value
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t e = 0; e < q.size(); ++e) {
      int s = q.side_of_edge(e);
      if ((s == 0 || s == 2) && detail::segment_distance(m.nodes[k], q.vertex(e), q.vertex(e + 1)) <= eps)
        bc[k] = s == 0 ? 0 : 1;
    }

  std::vector<int> free_id(n, -1);
  int nf = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (bc[k] < 0) free_id[k] = nf++;
  if (unknowns) *unknowns = static_cast<std::size_t>(nf);

  struct Local {
    std::array<int, 3> v;
    double k[3][3];
  };
  std::vector<Local> locals;
  locals.reserve(m.triangles.size());
  for (const auto& t : m.triangles) {
    Point p[3] = {m.nodes[static_cast<std::size_t>(t[0])], m.nodes[static_cast<std::size_t>(t[1])],
                  m.nodes[static_cast<std::size_t>(t[2])]};
    double area2 = (p[1].x - p[0].x) * (p[2].y - p[0].y) - (p[2].x - p[0].x) * (p[1].y - p[0].y);
    double bx[3], by[3];
    for (int i = 0; i < 3; ++i) {
      const Point& a = p[(i + 1) % 3];
      const Point& b = p[(i + 2) % 3];
      bx[i] = a.y - b.y;
      by[i] = b.x - a.x;
    }
    Local l{t, {}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) l.k[i][j] = (bx[i] * bx[j] + by[i] * by[j]) / (2 * area2);
    locals.push_back(l);
  }

  std::vector<Eigen::Triplet<double>> trip;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nf);
  for (const auto& l : locals)
    for (int i = 0; i < 3; ++i) {
      int fi = free_id[static_cast<std::size_t>(l.v[i])];
      if (fi < 0) continue;
      for (int j = 0; j < 3; ++j) {
        int vj = l.v[j];
        int fj = free_id[static_cast<std::size_t>(vj)];
        if (fj >= 0) {
          trip.emplace_back(fi, fj, l.k[i][j]);
        } else {
          rhs[fi] -= l.k[i][j] * bc[static_cast<std::size_t>(vj)];
        }
      }
    }
  Eigen::VectorXd uf = Eigen::VectorXd::Zero(nf);
  if (nf > 0) {
    Eigen::SparseMatrix<double> K(nf, nf);
    K.setFromTriplets(trip.begin(), trip.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(K);
    if (solver.info() != Eigen::Success) throw std::runtime_error("quad_modulus: factorization failed");
    uf = solver.solve(rhs);
  }

  double energy = 0;
  for (const auto& l : locals) {
    double u[3];
    for (int i = 0; i < 3; ++i) {
      auto k = static_cast<std::size_t>(l.v[i]);
      u[i] = bc[k] >= 0 ? bc[k] : uf[free_id[k]];
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) energy += u[i] * l.k[i][j] * u[j];
  }
  return energy;
}

inline ModulusResult quad_modulus(const Quadrilateral& q, double tol = 1e-6, const SolverOptions& o = {}) {
  if (!(tol > 0)) throw std::invalid_argument("quad_modulus: tol must be positive");
  q.validate();
  ModulusResult r;
  double prev_raw = 0, prev_ext = 0;
  for (int level = 0; level <= o.max_levels; ++level) {
    LevelDiagnostic d;
    d.level = level;
    Mesh m = build_mesh(q, level, o);
    d.raw = 1 / dirichlet_energy(q, m, &d.unknowns);
    d.extrapolated = level == 0 ? d.raw : d.raw + (d.raw - prev_raw) / 3;
    if (level >= 2) {
      d.estimate = std::max(std::abs(d.extrapolated - prev_ext), 4 * std::numeric_limits<double>::epsilon() * d.raw);
    }
    r.levels.push_back(d);
    r.value = d.extrapolated;
    r.grid_levels = level + 1;
    prev_raw = d.raw;
    prev_ext = d.extrapolated;
    if (level >= 2) {
      r.error_estimate = d.estimate;
      if (d.estimate <= tol) {
        r.converged = true;
        return r;
      }
    }
  }
  if (r.error_estimate == 0) r.error_estimate = std::abs(r.value);
  return r;
}

// modulus(q) * modulus(q with the marking rotated), which is 1 in exact arithmetic.
inline double quad_modulus_dual_check(const Quadrilateral& q, double tol = 1e-6, const SolverOptions& o = {}) {
  return quad_modulus(q, tol, o).value * quad_modulus(q.rotated(), tol, o).value;
}

}  // namespace elsys::modulus
