#pragma once

// Coefficient domains for Moebius maps and rational differentials:
//   ExactNum              exact, Q(sqrt2, i)
//   IComplex<R>           rectangular complex interval
//   std::complex<double>  plain floating point, for plotting only
// plus the extended plane C u {inf} over any of them.

#include "elsys/agm/interval.hpp"
#include "elsys/exact/exact_num.hpp"

#include <complex>
#include <ostream>
#include <stdexcept>

namespace elsys::conformal {

using agm::BasicInterval;
using exact::ExactNum;

template <class R>
class IComplex {
 public:
  using I = BasicInterval<R>;

  IComplex() = default;
  IComplex(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  IComplex(I re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  IComplex(I re, I im) : re_(std::move(re)), im_(std::move(im)) {}

  static IComplex i() { return {I(0), I(1)}; }

  const I& re() const { return re_; }
  const I& im() const { return im_; }

  // exactly zero (point intervals at 0)
  bool is_zero() const { return re_ == I(0) && im_ == I(0); }
  bool possibly_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool possibly_real() const { return im_.contains_zero(); }

  IComplex conj() const { return {re_, -im_}; }
  I norm() const { return sqr(re_) + sqr(im_); }

  std::complex<double> mid() const { return {re_.mid_double(), im_.mid_double()}; }

  friend IComplex operator+(const IComplex& x, const IComplex& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend IComplex operator-(const IComplex& x, const IComplex& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend IComplex operator-(const IComplex& x) { return {-x.re_, -x.im_}; }
  friend IComplex operator*(const IComplex& x, const IComplex& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend IComplex operator/(const IComplex& x, const IComplex& y) {
    if (y.im_ == I(0)) return {x.re_ / y.re_, x.im_ / y.re_};
    I n = y.norm();
    if (n.contains_zero()) throw std::domain_error("IComplex: division by a possibly zero value");
    IComplex p = x * y.conj();
    return {p.re_ / n, p.im_ / n};
  }
  IComplex& operator+=(const IComplex& y) { return *this = *this + y; }
  IComplex& operator-=(const IComplex& y) { return *this = *this - y; }
  IComplex& operator*=(const IComplex& y) { return *this = *this * y; }
  IComplex& operator/=(const IComplex& y) { return *this = *this / y; }

  friend bool operator==(const IComplex& x, const IComplex& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  bool intersects(const IComplex& o) const { return re_.intersects(o.re_) && im_.intersects(o.im_); }

  friend std::ostream& operator<<(std::ostream& os, const IComplex& z) {
    return os << z.re_ << " + i*" << z.im_;
  }

 private:
  I re_{0};
  I im_{0};
};

using DComplex = IComplex<agm::DoubleRounding>;

// Enclosure of a + b*sqrt2 for exact rationals a, b.
template <class R>
BasicInterval<R> to_interval(const exact::Sqrt2Num& x) {
  using I = BasicInterval<R>;
  I out = I::from_rational(x.rational_part());
  if (!x.is_rational()) out += I::from_rational(x.root_part()) * agm::sqrt_of<R>(2);
  return out;
}

template <class R>
BasicInterval<R> to_interval(const exact::Sqrt3Num& x) {
  using I = BasicInterval<R>;
  I out = I::from_rational(x.rational_part());
  if (!x.is_rational()) out += I::from_rational(x.root_part()) * agm::sqrt_of<R>(3);
  return out;
}

template <class R>
IComplex<R> to_icomplex(const ExactNum& x) {
  return {to_interval<R>(x.re()), to_interval<R>(x.im())};
}

// Zero test used to detect poles: exact for ExactNum and double, "is the
// point zero" for intervals (a merely possible zero surfaces later as a
// division error).
template <class T>
bool coeff_is_zero(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == T(0);
  }
}

template <class T>
class ExtendedComplex {
 public:
  using value_type = T;

  ExtendedComplex() = default;
  ExtendedComplex(T v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtendedComplex(int v) : v_(T(v)) {}  // NOLINT(google-explicit-constructor)

  static ExtendedComplex infinity() {
    ExtendedComplex z;
    z.inf_ = true;
    return z;
  }

  bool is_infinite() const { return inf_; }
  const T& value() const {
    if (inf_) throw std::domain_error("ExtendedComplex: value() of infinity");
    return v_;
  }

  friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.v_ == b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedComplex& z) {
    if (z.inf_) return os << "inf";
    return os << z.v_;
  }

 private:
  T v_{};
  bool inf_ = false;
};

template <class R>
ExtendedComplex<IComplex<R>> to_icomplex(const ExtendedComplex<ExactNum>& z) {
  if (z.is_infinite()) return ExtendedComplex<IComplex<R>>::infinity();
  return to_icomplex<R>(z.value());
}

}  // namespace elsys::conformal
