#pragma once

// Crossing of x and 4 EL(L_x): the prism upper bound min(x, 4 EL(L_x)) is
// largest where the two agree.  EL(L_x) decreases in x, so bisection applies.
// Not certified: the solver's error estimate is folded into the slack.

#include "elsys/modulus/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace elsys::modulus {

struct CrossingSample {
  double x = 0;
  double four_el = 0;
  double error_estimate = 0;
};

struct PrismCrossing {
  double x_star = 0;
  double bound = 0;  // x_star + slack
  double slack = 0;
  bool converged = true;
  std::vector<CrossingSample> samples;
};

inline CrossingSample prism_sample(double x, double solver_tol, const SolverOptions& o = {}) {
  ModulusResult r = quad_modulus(build_Lx(x), solver_tol, o);
  if (!r.converged) throw std::runtime_error("prism_crossing: modulus solver did not converge");
  return {x, 4 * r.value, 4 * r.error_estimate};
}

inline PrismCrossing prism_crossing(double search_lo = 2.0, double search_hi = 3.4, double tol = 1e-3,
                                    double solver_tol = 1e-5, const SolverOptions& o = {}) {
  if (!(search_lo > 0 && search_lo < search_hi && search_hi <= 2 * std::sqrt(3.0)))
    throw std::invalid_argument("prism_crossing: need 0 < lo < hi <= 2 sqrt3");
  if (!(tol > 0)) throw std::invalid_argument("prism_crossing: tol must be positive");
  PrismCrossing out;
  CrossingSample a = prism_sample(search_lo, solver_tol, o), b = prism_sample(search_hi, solver_tol, o);
  out.samples = {a, b};
  if (!(a.four_el > a.x && b.four_el < b.x)) throw std::runtime_error("prism_crossing: no sign change on the interval");
  double lo = search_lo, hi = search_hi, err = std::max(a.error_estimate, b.error_estimate);
  while (hi - lo > tol) {
    double mid = (lo + hi) / 2;
    CrossingSample m = prism_sample(mid, solver_tol, o);
    out.samples.push_back(m);
    err = std::max(err, m.error_estimate);
    (m.four_el > m.x ? lo : hi) = mid;
  }
  out.x_star = (lo + hi) / 2;
  // f(x) = 4 EL - x has slope below -1, so an error e in 4 EL moves the root by at most e
  out.slack = (hi - lo) / 2 + err;
  out.bound = out.x_star + out.slack;
  return out;
}

}  // namespace elsys::modulus
