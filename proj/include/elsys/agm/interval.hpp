#pragma once

// Certified real intervals with outward rounding.
//
// Two endpoint backends:
//  - DoubleRounding: binary64 endpoints.  Each operation is evaluated in
//    round-to-nearest and its exact rounding error is recovered with an
//    error-free transformation (TwoSum / FMA residual), which tells us on
//    which side of the computed value the true result lies.
//  - DyadicRounding<Bits>: rational endpoints snapped outward onto the grid
//    2^-Bits after every exact rational operation.

#include "elsys/exact/quadratic.hpp"
#include "elsys/exact/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace elsys::agm {

using exact::Rational;

struct DoubleRounding {
  using value_type = double;
  static constexpr const char* name = "double";

  static double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

  // s = fl(a+b); returns the exact error a + b - s.
  static double two_sum_err(double a, double b, double s) {
    double bb = s - a;
    return (a - (s - bb)) + (b - bb);
  }

  static double add_down(double a, double b) {
    double s = a + b;
    return two_sum_err(a, b, s) < 0 ? next_down(s) : s;
  }
  static double add_up(double a, double b) {
    double s = a + b;
    return two_sum_err(a, b, s) > 0 ? next_up(s) : s;
  }
  static double sub_down(double a, double b) { return add_down(a, -b); }
  static double sub_up(double a, double b) { return add_up(a, -b); }

  static double mul_down(double a, double b) {
    double p = a * b;
    return std::fma(a, b, -p) < 0 ? next_down(p) : p;
  }
  static double mul_up(double a, double b) {
    double p = a * b;
    return std::fma(a, b, -p) > 0 ? next_up(p) : p;
  }

  // sign of a/b - q, using the exact residual a - q*b
  static int div_err_sign(double a, double b, double q) {
    double r = std::fma(-q, b, a);
    if (r == 0) return 0;
    return ((r > 0) == (b > 0)) ? 1 : -1;
  }
  static double div_down(double a, double b) {
    double q = a / b;
    return div_err_sign(a, b, q) < 0 ? next_down(q) : q;
  }
  static double div_up(double a, double b) {
    double q = a / b;
    return div_err_sign(a, b, q) > 0 ? next_up(q) : q;
  }

  static double sqrt_down(double a) {
    if (a <= 0) return 0;
    double s = std::sqrt(a);
    return std::fma(-s, s, a) < 0 ? next_down(s) : s;
  }
  static double sqrt_up(double a) {
    if (a <= 0) return 0;
    double s = std::sqrt(a);
    return std::fma(-s, s, a) > 0 ? next_up(s) : s;
  }

  static double from_rational_down(const Rational& r) { return exact::to_double_down(r); }
  static double from_rational_up(const Rational& r) { return exact::to_double_up(r); }
  static Rational to_rational(double x) { return exact::from_double(x); }
  static double to_double_down(double x) { return x; }
  static double to_double_up(double x) { return x; }
};

template <unsigned Bits>
struct DyadicRounding {
  using value_type = Rational;
  static constexpr const char* name = "extended";
  static constexpr unsigned bits = Bits;

  static const exact::BigInt& scale() {
    static const exact::BigInt s = exact::pow2(Bits);
    return s;
  }
  static Rational down(const Rational& x) { return {exact::floor(x * scale()), scale()}; }
  static Rational up(const Rational& x) { return {exact::ceil(x * scale()), scale()}; }

  static Rational add_down(const Rational& a, const Rational& b) { return down(a + b); }
  static Rational add_up(const Rational& a, const Rational& b) { return up(a + b); }
  static Rational sub_down(const Rational& a, const Rational& b) { return down(a - b); }
  static Rational sub_up(const Rational& a, const Rational& b) { return up(a - b); }
  static Rational mul_down(const Rational& a, const Rational& b) { return down(a * b); }
  static Rational mul_up(const Rational& a, const Rational& b) { return up(a * b); }
  static Rational div_down(const Rational& a, const Rational& b) { return down(a / b); }
  static Rational div_up(const Rational& a, const Rational& b) { return up(a / b); }

  // floor(sqrt(floor(a 4^B))) / 2^B <= sqrt(a)
  static Rational sqrt_down(const Rational& a) {
    if (a <= 0) return Rational(0);
    exact::BigInt n = exact::floor(a * scale() * scale());
    return {boost::multiprecision::sqrt(n), scale()};
  }
  static Rational sqrt_up(const Rational& a) {
    if (a <= 0) return Rational(0);
    exact::BigInt n = exact::ceil(a * scale() * scale());
    exact::BigInt s = boost::multiprecision::sqrt(n);
    if (s * s != n) s += 1;
    return {s, scale()};
  }

  static Rational from_rational_down(const Rational& r) { return down(r); }
  static Rational from_rational_up(const Rational& r) { return up(r); }
  static const Rational& to_rational(const Rational& x) { return x; }
  static double to_double_down(const Rational& x) { return exact::to_double_down(x); }
  static double to_double_up(const Rational& x) { return exact::to_double_up(x); }
};

using ExtendedRounding = DyadicRounding<256>;

template <class R>
class BasicInterval {
 public:
  using rounding = R;
  using value_type = typename R::value_type;

  BasicInterval() : lo_(0), hi_(0) {}
  BasicInterval(int v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
  BasicInterval(value_type lo, value_type hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
  }

  static BasicInterval point(value_type v) { return {v, v}; }
  static BasicInterval from_rational(const Rational& r) {
    return {R::from_rational_down(r), R::from_rational_up(r)};
  }
  static BasicInterval from_rationals(const Rational& lo, const Rational& hi) {
    return {R::from_rational_down(lo), R::from_rational_up(hi)};
  }
  // Decimal literal enclosed exactly, e.g. "5.8768721265012".
  static BasicInterval from_decimal(std::string_view s) { return from_rational(exact::parse_rational(s)); }
  static BasicInterval from_ratio(long long n, long long d) { return from_rational(Rational(n, d)); }
  // [center - radius, center + radius]
  static BasicInterval ball(const Rational& center, const Rational& radius) {
    return from_rationals(center - radius, center + radius);
  }

  const value_type& lo() const { return lo_; }
  const value_type& hi() const { return hi_; }

  // Conservative binary64 views for reporting.
  double lo_double() const { return R::to_double_down(lo_); }
  double hi_double() const { return R::to_double_up(hi_); }
  double mid_double() const { return 0.5 * (lo_double() + hi_double()); }
  double width_double() const { return R::to_double_up(R::sub_up(hi_, lo_)); }

  Rational lo_rational() const { return R::to_rational(lo_); }
  Rational hi_rational() const { return R::to_rational(hi_); }

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_rational() <= x && x <= hi_rational(); }
  template <int D>
  bool contains(const exact::Quadratic<D>& x) const {
    return (x - exact::Quadratic<D>(lo_rational())).sign() >= 0 &&
           (exact::Quadratic<D>(hi_rational()) - x).sign() >= 0;
  }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool certainly_positive() const { return lo_ > 0; }
  bool certainly_negative() const { return hi_ < 0; }
  bool certainly_less(const BasicInterval& o) const { return hi_ < o.lo_; }
  bool intersects(const BasicInterval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  bool subset_of(const BasicInterval& o) const { return o.lo_ <= lo_ && hi_ <= o.hi_; }

  friend BasicInterval hull(const BasicInterval& a, const BasicInterval& b) {
    return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
  }

  friend BasicInterval operator+(const BasicInterval& a, const BasicInterval& b) {
    return {R::add_down(a.lo_, b.lo_), R::add_up(a.hi_, b.hi_)};
  }
  friend BasicInterval operator-(const BasicInterval& a, const BasicInterval& b) {
    return {R::sub_down(a.lo_, b.hi_), R::sub_up(a.hi_, b.lo_)};
  }
  friend BasicInterval operator-(const BasicInterval& a) { return {-a.hi_, -a.lo_}; }
  friend BasicInterval operator*(const BasicInterval& a, const BasicInterval& b) {
    value_type lo = R::mul_down(a.lo_, b.lo_);
    value_type hi = R::mul_up(a.lo_, b.lo_);
    auto fold = [&](const value_type& x, const value_type& y) {
      lo = std::min(lo, R::mul_down(x, y));
      hi = std::max(hi, R::mul_up(x, y));
    };
    fold(a.lo_, b.hi_);
    fold(a.hi_, b.lo_);
    fold(a.hi_, b.hi_);
    return {lo, hi};
  }
  friend BasicInterval operator/(const BasicInterval& a, const BasicInterval& b) {
    if (b.contains_zero()) throw std::domain_error("Interval: division by an interval containing zero");
    value_type lo = R::div_down(a.lo_, b.lo_);
    value_type hi = R::div_up(a.lo_, b.lo_);
    auto fold = [&](const value_type& x, const value_type& y) {
      lo = std::min(lo, R::div_down(x, y));
      hi = std::max(hi, R::div_up(x, y));
    };
    fold(a.lo_, b.hi_);
    fold(a.hi_, b.lo_);
    fold(a.hi_, b.hi_);
    return {lo, hi};
  }

  BasicInterval& operator+=(const BasicInterval& b) { return *this = *this + b; }
  BasicInterval& operator-=(const BasicInterval& b) { return *this = *this - b; }
  BasicInterval& operator*=(const BasicInterval& b) { return *this = *this * b; }
  BasicInterval& operator/=(const BasicInterval& b) { return *this = *this / b; }

  friend BasicInterval sqr(const BasicInterval& a) {
    if (a.lo_ >= 0) return {R::mul_down(a.lo_, a.lo_), R::mul_up(a.hi_, a.hi_)};
    if (a.hi_ <= 0) return {R::mul_down(a.hi_, a.hi_), R::mul_up(a.lo_, a.lo_)};
    value_type m = std::max(value_type(-a.lo_), a.hi_);
    return {value_type(0), R::mul_up(m, m)};
  }

  friend BasicInterval sqrt(const BasicInterval& a) {
    if (a.hi_ < 0) throw std::domain_error("Interval: sqrt of a negative interval");
    return {R::sqrt_down(a.lo_), R::sqrt_up(a.hi_)};
  }

  friend BasicInterval abs(const BasicInterval& a) {
    if (a.lo_ >= 0) return a;
    if (a.hi_ <= 0) return -a;
    return {value_type(0), std::max(value_type(-a.lo_), a.hi_)};
  }

  friend bool operator==(const BasicInterval& a, const BasicInterval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

  friend std::ostream& operator<<(std::ostream& os, const BasicInterval& a) {
    auto prec = os.precision(17);
    os << "[" << a.lo_double() << ", " << a.hi_double() << "]";
    os.precision(prec);
    return os;
  }

 private:
  value_type lo_;
  value_type hi_;
};

using Interval = BasicInterval<DoubleRounding>;
using ExtInterval = BasicInterval<ExtendedRounding>;

// Enclosure of sqrt(n) for a nonnegative integer n.
template <class R>
BasicInterval<R> sqrt_of(long long n) {
  return sqrt(BasicInterval<R>::from_rational(Rational(n)));
}

}  // namespace elsys::agm
