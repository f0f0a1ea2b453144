#pragma once

// Systolic ratio of the flat torus C / (Z + tau Z).

#include "elsys/exact/quadratic.hpp"
#include "elsys/exact/rational.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace elsys::flatgeo {

struct TorusLattice {
  std::complex<double> tau;

  explicit TorusLattice(std::complex<double> t) : tau(t) {
    if (!(t.imag() > 0)) throw std::domain_error("TorusLattice: Im tau must be positive");
  }
};

// Shortest nonzero lattice vector: Lagrange-reduce the basis, then search the
// small box around the reduced pair.
inline double shortest_vector_sq(const TorusLattice& t) {
  using C = std::complex<double>;
  C u(1), v = t.tau;
  if (std::norm(u) > std::norm(v)) std::swap(u, v);
  for (int it = 0; it < 200; ++it) {
    double mu = std::round((u.real() * v.real() + u.imag() * v.imag()) / std::norm(u));
    if (mu == 0) break;
    v -= mu * u;
    if (std::norm(v) >= std::norm(u)) break;
    std::swap(u, v);
  }
  double best = std::norm(u);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      if (m != 0 || n != 0) best = std::min(best, std::norm(double(m) * u + double(n) * v));
  return best;
}

inline double torus_systolic_ratio(const TorusLattice& t) { return shortest_vector_sq(t) / t.tau.imag(); }

// tau = x + i sqrt(y) with x, y rational, y > 0.  The ratio is
// length_sq / sqrt(y); ratio_sq = length_sq^2 / y is exact.
struct ExactTorusRatio {
  exact::Rational length_sq;
  exact::Rational im_sq;
  exact::Rational ratio_sq() const { return length_sq * length_sq / im_sq; }
};

inline ExactTorusRatio torus_systolic_ratio_exact(const exact::Rational& x, const exact::Rational& y) {
  if (y <= 0) throw std::domain_error("torus_systolic_ratio_exact: Im tau must be positive");
  // |m + n tau|^2 = (m + n x)^2 + n^2 y; |n| is bounded by the first candidate
  exact::Rational best = 1;
  const double yd = exact::to_double_down(y);
  const int nmax = static_cast<int>(std::ceil(1.0 / std::sqrt(yd))) + 1;
  for (int n = -nmax; n <= nmax; ++n) {
    exact::Rational c = exact::Rational(n) * x;
    long m0 = static_cast<long>(std::floor(exact::to_double_down(-c)));
    for (long m = m0 - 1; m <= m0 + 2; ++m) {
      if (m == 0 && n == 0) continue;
      exact::Rational re = exact::Rational(m) + c;
      exact::Rational l = re * re + exact::Rational(n) * exact::Rational(n) * y;
      if (l < best) best = l;
    }
  }
  return {best, y};
}

}  // namespace elsys::flatgeo
