#pragma once

#include "elsys/conformal/complex.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace elsys::conformal {

// z -> (a z + b) / (c z + d)
template <class T>
class MoebiusMap {
 public:
  using point = ExtendedComplex<T>;

  MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
  MoebiusMap(T a, T b, T c, T d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (coeff_is_zero(det())) throw std::domain_error("MoebiusMap: degenerate (ad - bc = 0)");
    if constexpr (requires(T t) { t.possibly_zero(); }) {
      if (det().possibly_zero()) throw std::domain_error("MoebiusMap: determinant not separated from 0");
    }
  }

  static MoebiusMap identity() { return {}; }

  // The map sending z1, z2, z3 to 0, 1, inf.
  static MoebiusMap to_zero_one_inf(const point& z1, const point& z2, const point& z3) {
    // z -> (z - z1)(z2 - z3) / ((z - z3)(z2 - z1)), with the usual limits at inf
    if (z1.is_infinite()) return {T(0), z2.value() - z3.value(), T(1), -z3.value()};
    if (z2.is_infinite()) return {T(1), -z1.value(), T(1), -z3.value()};
    if (z3.is_infinite()) return {T(1), -z1.value(), T(0), z2.value() - z1.value()};
    T p = z2.value() - z3.value();
    T q = z2.value() - z1.value();
    return {p, -z1.value() * p, q, -z3.value() * q};
  }

  // The unique map with z_j -> w_j.
  static MoebiusMap from_three_points(const std::array<point, 3>& z, const std::array<point, 3>& w) {
    return to_zero_one_inf(w[0], w[1], w[2]).inverse().compose(to_zero_one_inf(z[0], z[1], z[2]));
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }
  const T& d() const { return d_; }
  T det() const { return a_ * d_ - b_ * c_; }

  point operator()(const point& z) const {
    if (z.is_infinite()) {
      if (coeff_is_zero(c_)) return point::infinity();
      return point(a_ / c_);
    }
    const T& x = z.value();
    T den = c_ * x + d_;
    if (coeff_is_zero(den)) return point::infinity();
    return point((a_ * x + b_) / den);
  }

  // (this o other)(z) = this(other(z))
  MoebiusMap compose(const MoebiusMap& o) const {
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
  }

  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }

  // derivative det / (c z + d)^2 at a finite point
  T derivative(const T& z) const {
    T den = c_ * z + d_;
    return det() / (den * den);
  }

  // Same map as o (coefficients proportional).
  bool same_map(const MoebiusMap& o) const {
    return coeff_is_zero(a_ * o.b_ - b_ * o.a_) && coeff_is_zero(a_ * o.c_ - c_ * o.a_) &&
           coeff_is_zero(a_ * o.d_ - d_ * o.a_) && coeff_is_zero(b_ * o.c_ - c_ * o.b_) &&
           coeff_is_zero(b_ * o.d_ - d_ * o.b_) && coeff_is_zero(c_ * o.d_ - d_ * o.c_);
  }

  friend std::ostream& operator<<(std::ostream& os, const MoebiusMap& m) {
    return os << "((" << m.a_ << ")z + (" << m.b_ << ")) / ((" << m.c_ << ")z + (" << m.d_ << "))";
  }

 private:
  T a_, b_, c_, d_;
};

using ExactMoebius = MoebiusMap<ExactNum>;

template <class T>
typename MoebiusMap<T>::point moebius_apply(const MoebiusMap<T>& m, const typename MoebiusMap<T>::point& z) {
  return m(z);
}

template <class R>
MoebiusMap<IComplex<R>> to_icomplex(const ExactMoebius& m) {
  return {to_icomplex<R>(m.a()), to_icomplex<R>(m.b()), to_icomplex<R>(m.c()), to_icomplex<R>(m.d())};
}

}  // namespace elsys::conformal
