#pragma once

// Face curves of the antiprisms A_r and prisms P_r: closed forms in K/K' and
// the cube-map pipeline they are checked against.

#include "elsys/catalog/curves.hpp"

#include <cmath>
#include <stdexcept>

namespace elsys::catalog {

// 6 K(m)/K'(m) with m = 1/sqrt(1 + r^3)
template <class R>
BasicInterval<R> el_antiprism_face(const BasicInterval<R>& r, double tol = agm::default_tol) {
  using I = BasicInterval<R>;
  if (!(r.lo() > 0)) throw std::domain_error("el_antiprism_face: r must be positive");
  I c = I(1) + r * r * r;
  agm::BasicModulus<R> m(I(1) / sqrt(c), sqrt(r * r * r / c));
  return I(6) * agm::kratio(m, tol);
}

// 6 K(m)/K'(m) with m = r^(-3/2); r <= 1 is outside the family (m >= 1).
template <class R>
BasicInterval<R> el_prism_face(const BasicInterval<R>& r, double tol = agm::default_tol) {
  using I = BasicInterval<R>;
  if (!(r.lo() > 1)) throw std::domain_error("el_prism_face: r must exceed 1");
  I r3 = r * r * r;
  agm::BasicModulus<R> m(I(1) / sqrt(r3), sqrt((r3 - I(1)) / r3));
  return I(6) * agm::kratio(m, tol);
}

// Cube map: punctures {0, 1, c, inf} with c = -r^3 (antiprism) or r^3
// (prism), curve around [0, 1], degree 3.
template <class R>
BasicInterval<R> el_cube_pipeline(const BasicInterval<R>& c, double tol = agm::default_tol) {
  using I = BasicInterval<R>;
  return I(3) * conformal::pillowcase_el<R>(detail::cube_quotient<R>(-c), tol);
}

template <class R>
BasicInterval<R> el_prism_pipeline(const BasicInterval<R>& r, double tol = agm::default_tol) {
  if (!(r.lo() > 1)) throw std::domain_error("el_prism_pipeline: r must exceed 1");
  return el_cube_pipeline<R>(r * r * r, tol);
}

template <class R>
BasicInterval<R> el_antiprism_pipeline(const BasicInterval<R>& r, double tol = agm::default_tol) {
  if (!(r.lo() > 0)) throw std::domain_error("el_antiprism_pipeline: r must be positive");
  return el_cube_pipeline<R>(-(r * r * r), tol);
}

inline agm::Interval el_antiprism_face(double r, double tol = agm::default_tol) {
  return el_antiprism_face(agm::Interval::point(r), tol);
}
inline agm::Interval el_prism_face(double r, double tol = agm::default_tol) {
  return el_prism_face(agm::Interval::point(r), tol);
}

// r > 1 with el_prism_face(r) = x, by bisection; the value decreases in r
// since m = r^(-3/2) does.
inline double prism_parameter_for(double x, double lo = 1.0001, double hi = 100, int iterations = 200) {
  auto f = [&](double r) { return el_prism_face(r).mid_double() - x; };
  if (!(f(lo) > 0 && f(hi) < 0)) throw std::domain_error("prism_parameter_for: value outside the bracket");
  for (int i = 0; i < iterations && hi - lo > 1e-15 * hi; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace elsys::catalog
