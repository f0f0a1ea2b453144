#pragma once

// Independent oracle for the complete elliptic integral
//   K(k) = int_0^1 dt / sqrt((1 - t^2)(1 - k^2 t^2))
// by tanh-sinh quadrature.  Not certified; used to check Landen identities
// and kratio, never on the constant-evaluation path.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace elsys::agm::oracle {

struct QuadResult {
  double value = 0;
  double error = 0;  // difference between the last two levels, floored at a few ulps
  int levels = 0;
};

// k and kp = sqrt(1 - k^2) are passed separately so that moduli close to 1
// keep their complement to full relative accuracy.
inline QuadResult complete_K(double k, double kp) {
  if (!(k >= 0 && k < 1 && kp > 0 && kp <= 1)) throw std::domain_error("complete_K: need 0 <= k < 1, 0 < k' <= 1");
  const double k2 = k * k;
  const double kp2 = kp * kp;
  constexpr double half_pi = std::numbers::pi / 2;

  // Substituting t = tanh(pi/2 sinh x) and symmetrising over (-1,1):
  //   K = h * (g(0)/2 + sum_{j>=1} g(jh)),
  //   g(x) = pi/2 cosh x * sqrt(s) / sqrt(kp^2 + k^2 s),  s = 1 - t^2 = u(2-u).
  auto g = [&](double x) {
    double y = half_pi * std::sinh(x);
    double e = std::exp(-2 * y);
    double u = 2 * e / (1 + e);  // 1 - t
    double s = u * (2 - u);
    return half_pi * std::cosh(x) * std::sqrt(s) / std::sqrt(kp2 + k2 * s);
  };

  auto tail = [&](double start, double step, double& sum) {
    for (double x = start;; x += step) {
      double v = g(x);
      sum += v;
      if (v < 1e-300 || x > 8) break;
      if (v < 1e-20 * sum) break;
    }
  };

  double h = 1.0;
  double sum = 0.5 * g(0);
  tail(h, h, sum);
  double prev = h * sum;
  QuadResult r{prev, std::abs(prev), 1};
  for (int level = 2; level <= 12; ++level) {
    // new nodes are the odd multiples of h/2
    h /= 2;
    tail(h, 2 * h, sum);
    double cur = h * sum;
    double diff = std::abs(cur - prev);
    r = {cur, std::max(diff, 16 * std::numeric_limits<double>::epsilon() * std::abs(cur)), level};
    if (level >= 4 && diff <= 1e-15 * std::abs(cur)) break;
    prev = cur;
  }
  return r;
}

inline QuadResult complete_K(double k) { return complete_K(k, std::sqrt((1 - k) * (1 + k))); }

}  // namespace elsys::agm::oracle
