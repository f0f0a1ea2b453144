#pragma once

// Arithmetic-geometric mean enclosures and the ratio K(k)/K'(k).
//
// K(k)/K'(k) = M(1,k)/M(1,k'), so no transcendental constant is needed:
// everything reduces to +, *, / and sqrt with outward rounding.

#include "elsys/agm/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace elsys::agm {

inline constexpr double default_tol = 1e-12;

template <class R>
struct AgmStep {
  BasicInterval<R> a;  // arithmetic sequence, non-increasing
  BasicInterval<R> g;  // geometric sequence, non-decreasing
};

// The AGM sequence started at (1, x) for a point x, with every iterate
// enclosed.  Stops once the bracket [g.lo, a.hi] is narrower than tol or
// rounding prevents further progress.
template <class R>
std::vector<AgmStep<R>> agm_trace(const typename R::value_type& x, double tol = default_tol,
                                  int max_iter = 200) {
  using I = BasicInterval<R>;
  const I half = I::from_ratio(1, 2);
  std::vector<AgmStep<R>> out;
  I a(1), g = I::point(x);
  out.push_back({a, g});
  for (int n = 0; n < max_iter; ++n) {
    if (R::to_double_up(R::sub_up(a.hi(), g.lo())) <= tol) break;
    I an = (a + g) * half;
    I gn = sqrt(a * g);
    // M lies in every bracket, so keep the tighter endpoints.
    if (an.hi() > a.hi()) an = I(std::min(an.lo(), a.hi()), a.hi());
    if (gn.lo() < g.lo()) gn = I(g.lo(), std::max(gn.hi(), g.lo()));
    bool progress = an.hi() < a.hi() || gn.lo() > g.lo();
    a = an;
    g = gn;
    out.push_back({a, g});
    if (!progress) break;
  }
  return out;
}

// Enclosure of M(1, a) for 0 < a <= 1.  M(1, .) is increasing, so an
// interval argument is handled by its two endpoints.
template <class R>
BasicInterval<R> agm_enclosure(const BasicInterval<R>& a, double tol = default_tol) {
  if (!(a.lo() > 0)) throw std::domain_error("agm_enclosure: argument must be positive");
  if (a.hi() > 1) throw std::domain_error("agm_enclosure: argument must be at most 1");
  auto lower = agm_trace<R>(a.lo(), tol).back();
  if (a.is_point()) return {lower.g.lo(), lower.a.hi()};
  auto upper = agm_trace<R>(a.hi(), tol).back();
  return {lower.g.lo(), upper.a.hi()};
}

// k and its complement k' = sqrt(1 - k^2), both as enclosures.
template <class R>
class BasicModulus {
 public:
  using I = BasicInterval<R>;

  explicit BasicModulus(const I& k) : k_(k), kp_(I(0)) {
    check_range(k_);
    kp_ = sqrt((I(1) - k_) * (I(1) + k_));
  }
  // Complement supplied by the caller, e.g. from a closed form.
  BasicModulus(const I& k, const I& kp) : k_(k), kp_(kp) {
    check_range(k_);
    check_range(kp_);
    if (!(sqr(k_) + sqr(kp_)).contains(Rational(1)))
      throw std::domain_error("Modulus: k^2 + k'^2 does not contain 1");
  }

  const I& k() const { return k_; }
  const I& kp() const { return kp_; }
  BasicModulus complement() const { return {kp_, k_}; }

 private:
  static void check_range(const I& x) {
    if (!(x.lo() > 0) || !(x.hi() < 1)) throw std::domain_error("Modulus: k must lie strictly inside (0,1)");
  }

  I k_;
  I kp_;
};

using Modulus = BasicModulus<DoubleRounding>;
using ExtModulus = BasicModulus<ExtendedRounding>;

// K(k)/K'(k) = M(1,k)/M(1,k').
template <class R>
BasicInterval<R> kratio(const BasicModulus<R>& m, double tol = default_tol) {
  double inner = tol * 1e-4;
  return agm_enclosure(m.k(), inner) / agm_enclosure(m.kp(), inner);
}

template <class R>
BasicInterval<R> kratio(const BasicInterval<R>& k, double tol = default_tol) {
  return kratio(BasicModulus<R>(k), tol);
}

namespace detail {

// Evaluates f at both endpoints; f must be monotone on the interval.
template <class R, class F>
BasicInterval<R> monotone(const BasicInterval<R>& x, bool increasing, F f) {
  using I = BasicInterval<R>;
  I at_lo = f(I::point(x.lo()));
  if (x.is_point()) return at_lo;
  I at_hi = f(I::point(x.hi()));
  return increasing ? I(at_lo.lo(), at_hi.hi()) : I(at_hi.lo(), at_lo.hi());
}

template <class R>
void check_unit(const BasicInterval<R>& k, const char* who) {
  if (!(k.lo() > 0) || !(k.hi() < 1)) throw std::domain_error(std::string(who) + ": k must lie strictly inside (0,1)");
}

}  // namespace detail

// k* = 2 sqrt(k) / (1 + k)
template <class R>
BasicInterval<R> landen_transform(const BasicInterval<R>& k) {
  detail::check_unit(k, "landen_transform");
  using I = BasicInterval<R>;
  return detail::monotone(k, true, [](const I& x) { return I(2) * sqrt(x) / (I(1) + x); });
}

// (k*)' = (1 - k) / (1 + k)
template <class R>
BasicInterval<R> landen_complement(const BasicInterval<R>& k) {
  detail::check_unit(k, "landen_complement");
  using I = BasicInterval<R>;
  return detail::monotone(k, false, [](const I& x) { return (I(1) - x) / (I(1) + x); });
}

// The transformed modulus with its complement from the closed form.
template <class R>
BasicModulus<R> landen_modulus(const BasicInterval<R>& k) {
  return {landen_transform(k), landen_complement(k)};
}

// Inverse (descending) transform: the k with landen_transform(k) = ks,
// k = (1 - ks') / (1 + ks').
template <class R>
BasicInterval<R> landen_inverse(const BasicModulus<R>& ks) {
  using I = BasicInterval<R>;
  return detail::monotone(ks.kp(), false, [](const I& x) { return (I(1) - x) / (I(1) + x); });
}

}  // namespace elsys::agm
