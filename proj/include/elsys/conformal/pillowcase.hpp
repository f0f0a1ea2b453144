#pragma once

// Cross-ratios and the pillowcase normal form of a four-punctured sphere.
//
// A curve on a sphere with four punctures is determined by how it splits
// them into two pairs {p,q} | {r,s}.  With lambda = CR(p,q,r,s) real and
// outside [0,1], a Moebius map takes the punctures to -1, 1, 1/k, -1/k with
// the pair {p,q} going to {-1,1}; the curve's extremal length is then
// 4 K(k)/K'(k).  The Landen transform of k has the closed form
//   k* = 1/sqrt(1 - lambda)  (lambda < 0),   k* = 1/sqrt(lambda)  (lambda > 1).

#include "elsys/agm/agm.hpp"
#include "elsys/conformal/moebius.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace elsys::conformal {

// CR(z1,z2,z3,z4) = (z4-z1)(z2-z3) / ((z4-z3)(z2-z1)), so CR(0,1,inf,x) = x.
template <class T>
ExtendedComplex<T> cross_ratio(const ExtendedComplex<T>& z1, const ExtendedComplex<T>& z2,
                               const ExtendedComplex<T>& z3, const ExtendedComplex<T>& z4) {
  const std::array<const ExtendedComplex<T>*, 4> z{&z1, &z2, &z3, &z4};
  int infinite = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (z[i]->is_infinite()) ++infinite;
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*z[i] == *z[j]) throw std::domain_error("cross_ratio: coincident points");
  }
  if (infinite > 1) throw std::domain_error("cross_ratio: coincident points");
  auto quot = [](const T& n, const T& d) {
    if (coeff_is_zero(d)) throw std::domain_error("cross_ratio: coincident points");
    return ExtendedComplex<T>(n / d);
  };
  if (z1.is_infinite()) return quot(z2.value() - z3.value(), z4.value() - z3.value());
  if (z2.is_infinite()) return quot(z4.value() - z1.value(), z4.value() - z3.value());
  if (z3.is_infinite()) return quot(z4.value() - z1.value(), z2.value() - z1.value());
  if (z4.is_infinite()) return quot(z2.value() - z3.value(), z2.value() - z1.value());
  const T& a = z1.value();
  const T& b = z2.value();
  const T& c = z3.value();
  const T& d = z4.value();
  return quot((d - a) * (b - c), (d - c) * (b - a));
}

// Punctures on the Riemann sphere with a curve given by the split of the
// puncture indices into two groups.
template <class T>
struct MarkedSphere {
  std::vector<ExtendedComplex<T>> punctures;
  std::vector<std::size_t> group_a;
  std::vector<std::size_t> group_b;

  void validate() const {
    if (group_a.empty() || group_b.empty()) throw std::invalid_argument("MarkedSphere: empty group");
    std::set<std::size_t> seen;
    for (auto g : {&group_a, &group_b})
      for (std::size_t i : *g) {
        if (i >= punctures.size()) throw std::invalid_argument("MarkedSphere: index out of range");
        if (!seen.insert(i).second) throw std::invalid_argument("MarkedSphere: index used twice");
      }
    if (seen.size() != punctures.size()) throw std::invalid_argument("MarkedSphere: groups must cover all punctures");
  }

  // Applies f to every puncture; f may change the coefficient domain.
  template <class F>
  auto mapped(F f) const {
    using U = std::decay_t<std::invoke_result_t<F, const ExtendedComplex<T>&>>;
    MarkedSphere<typename U::value_type> out{{}, group_a, group_b};
    for (const auto& p : punctures) out.punctures.push_back(f(p));
    return out;
  }
};

template <class T>
MarkedSphere<T> standard_pillowcase(const T& k) {
  T one(1);
  return {{ExtendedComplex<T>(-one), ExtendedComplex<T>(one), ExtendedComplex<T>(one / k),
           ExtendedComplex<T>(-(one / k))},
          {0, 1},
          {2, 3}};
}

template <class T>
ExtendedComplex<T> pillowcase_cross_ratio(const MarkedSphere<T>& s) {
  s.validate();
  if (s.punctures.size() != 4) throw std::invalid_argument("pillowcase: exactly four punctures required");
  if (s.group_a.size() != 2) throw std::invalid_argument("pillowcase: the curve must split the punctures 2+2");
  const auto& p = s.punctures;
  return cross_ratio(p[s.group_a[0]], p[s.group_a[1]], p[s.group_b[0]], p[s.group_b[1]]);
}

namespace detail {

// lambda real with lambda < 0 or lambda > 1, as an interval.
template <class R>
agm::BasicModulus<R> landen_modulus_from_lambda(const BasicInterval<R>& lambda) {
  using I = BasicInterval<R>;
  if (lambda.certainly_negative()) {
    I d = I(1) - lambda;
    return {I(1) / sqrt(d), sqrt(-lambda / d)};
  }
  if (I(1).certainly_less(lambda)) return {I(1) / sqrt(lambda), sqrt((lambda - I(1)) / lambda)};
  if (lambda.hi() < 1 && lambda.lo() > 0)
    throw std::domain_error("pillowcase: the pairs interleave (cross-ratio in (0,1)); no such curve on a rectangular pillowcase");
  throw std::domain_error("pillowcase: cross-ratio enclosure touches [0,1]; degenerate or unresolved configuration");
}

template <class R>
BasicInterval<R> real_lambda(const ExtendedComplex<IComplex<R>>& cr) {
  if (cr.is_infinite()) throw std::domain_error("pillowcase: degenerate configuration");
  const auto& v = cr.value();
  if (!v.possibly_real()) throw std::domain_error("pillowcase: non-real cross-ratio (not a rectangular pillowcase)");
  return v.re();
}

template <class R>
BasicInterval<R> real_lambda(const ExtendedComplex<ExactNum>& cr) {
  if (cr.is_infinite()) throw std::domain_error("pillowcase: degenerate configuration");
  if (!cr.value().is_real()) throw std::domain_error("pillowcase: non-real cross-ratio (not a rectangular pillowcase)");
  const auto& re = cr.value().re();
  if (re.sign() >= 0 && (re - exact::Sqrt2Num(1)).sign() <= 0)
    throw std::domain_error("pillowcase: the pairs interleave or collapse (cross-ratio in [0,1])");
  return to_interval<R>(re);
}

inline bool cr_in_unit_interval(const ExtendedComplex<ExactNum>& cr) {
  if (cr.is_infinite() || !cr.value().is_real()) return false;
  const auto& re = cr.value().re();
  return re.sign() > 0 && (re - exact::Sqrt2Num(1)).sign() < 0;
}

template <class R>
bool cr_in_unit_interval(const ExtendedComplex<IComplex<R>>& cr) {
  if (cr.is_infinite() || !cr.value().possibly_real()) return false;
  const auto& re = cr.value().re();
  return re.lo() > 0 && re.hi() < 1;
}

}  // namespace detail

// The other curve of the pillowcase: of the two remaining 2+2 splits, the
// one whose pairs do not interleave.  Its extremal length is 4 / EL(s).
template <class T>
MarkedSphere<T> dual_curve(const MarkedSphere<T>& s) {
  pillowcase_cross_ratio(s);  // validates the split
  const auto& a = s.group_a;
  const auto& b = s.group_b;
  MarkedSphere<T> first{s.punctures, {a[0], b[0]}, {a[1], b[1]}};
  if (!detail::cr_in_unit_interval(pillowcase_cross_ratio(first))) return first;
  return {s.punctures, {a[0], b[1]}, {a[1], b[0]}};
}

// The Landen transform k* of the pillowcase modulus, with its complement.
// kratio(k) = kratio(k*) / 2.
template <class R, class T>
agm::BasicModulus<R> pillowcase_landen(const MarkedSphere<T>& s) {
  return detail::landen_modulus_from_lambda(detail::real_lambda<R>(pillowcase_cross_ratio(s)));
}

// The modulus k in (0,1) of the normal form {-1, 1, 1/k, -1/k}.
template <class R, class T>
agm::BasicModulus<R> pillowcase_modulus(const MarkedSphere<T>& s) {
  agm::BasicModulus<R> ks = pillowcase_landen<R>(s);
  return agm::BasicModulus<R>(agm::landen_inverse(ks));
}

// Extremal length 4 K(k)/K'(k) of the curve on the four-punctured sphere.
template <class R, class T>
BasicInterval<R> pillowcase_el(const MarkedSphere<T>& s, double tol = agm::default_tol) {
  return BasicInterval<R>(2) * agm::kratio(pillowcase_landen<R>(s), tol);
}

}  // namespace elsys::conformal
