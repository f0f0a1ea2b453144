#pragma once

// Landen identities checked against the quadrature oracle:
//   K(k)(1+k)  = K(k*)
//   K'(k)(1+k) = 2 K'(k*)
//   K/K'(k)    = K/K'(k*) / 2      (multiplication rule, via kratio)

#include "elsys/agm/agm.hpp"
#include "elsys/agm/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>

namespace elsys::agm {

struct LandenReport {
  double k = 0;
  // signed residuals; the identities hold when each contains 0
  std::array<Interval, 3> residual{};
  std::array<std::string, 3> name{"K(k)(1+k)-K(k*)", "K'(k)(1+k)-2K'(k*)", "kratio(k)-kratio(k*)/2"};
  double tol = 0;
  bool pass = false;

  bool residual_ok(std::size_t i) const {
    return residual[i].contains_zero() && residual[i].width_double() <= tol;
  }
};

namespace detail {

// Oracle value widened by its error estimate and by the spread of both
// arguments.  As a function of independent (k, k') the integrand is
// 1/sqrt((1-t^2)(k'^2 + k^2 (1-t^2))), so |dK/dk| <= K/k and |dK/dk'| <= K/k'.
inline Interval oracle_ball(const Interval& k, const Interval& kp) {
  double km = k.mid_double();
  double kpm = kp.mid_double();
  auto q = oracle::complete_K(km, kpm);
  double dk = 0.5 * k.width_double() / std::max(k.lo_double(), 1e-300);
  double dkp = 0.5 * kp.width_double() / std::max(kp.lo_double(), 1e-300);
  double rad = q.error + 1.0000001 * q.value * (dk + dkp);
  return {DoubleRounding::sub_down(q.value, rad), DoubleRounding::add_up(q.value, rad)};
}

}  // namespace detail

inline LandenReport landen_check(const Interval& k, double tol = 1e-10) {
  Modulus m(k);
  Modulus ms = landen_modulus(k);
  Interval one_plus_k = Interval(1) + k;

  Interval K = detail::oracle_ball(m.k(), m.kp());
  Interval Kp = detail::oracle_ball(m.kp(), m.k());
  Interval Ks = detail::oracle_ball(ms.k(), ms.kp());
  Interval Kps = detail::oracle_ball(ms.kp(), ms.k());

  LandenReport r;
  r.k = k.mid_double();
  r.tol = tol;
  r.residual[0] = K * one_plus_k - Ks;
  r.residual[1] = Kp * one_plus_k - Interval(2) * Kps;
  r.residual[2] = kratio(m) - kratio(ms) / Interval(2);
  r.pass = r.residual_ok(0) && r.residual_ok(1) && r.residual_ok(2);
  return r;
}

inline LandenReport landen_check(double k, double tol = 1e-10) { return landen_check(Interval::point(k), tol); }

}  // namespace elsys::agm
