#pragma once

// Elements a + b*sqrt(D) of the real quadratic field Q(sqrt D), D squarefree.

#include "elsys/exact/rational.hpp"

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace elsys::exact {

template <int D>
class Quadratic {
  static_assert(D > 1, "real quadratic fields only");

 public:
  Quadratic() = default;
  Quadratic(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Quadratic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Quadratic root() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& root_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // a - b*sqrt(D)
  Quadratic conjugate() const { return {a_, -b_}; }
  // (a + b sqrt D)(a - b sqrt D)
  Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

  // Exact sign of a + b*sqrt(D).
  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with D b^2
    Rational lhs = a_ * a_;
    Rational rhs = Rational(D) * b_ * b_;
    if (lhs == rhs) return 0;  // impossible for squarefree D unless both zero
    return lhs > rhs ? sa : sb;
  }

  Quadratic inverse() const {
    if (is_zero()) throw std::domain_error("Quadratic: division by zero");
    Rational n = norm();
    return {a_ / n, -b_ / n};
  }

  double to_double() const {
    return exact::to_double(a_) + exact::to_double(b_) * std::sqrt(static_cast<double>(D));
  }

  friend Quadratic operator+(const Quadratic& x, const Quadratic& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend Quadratic operator-(const Quadratic& x, const Quadratic& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend Quadratic operator-(const Quadratic& x) { return {-x.a_, -x.b_}; }
  friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
    return {x.a_ * y.a_ + Rational(D) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend Quadratic operator/(const Quadratic& x, const Quadratic& y) { return x * y.inverse(); }

  Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
  Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
  Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }
  Quadratic& operator/=(const Quadratic& y) { return *this = *this / y; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  // Canonical text: "a", "b*sqrtD", "a+b*sqrtD" or "a-b*sqrtD".
  std::string str() const {
    const std::string root = "*sqrt" + std::to_string(D);
    if (b_ == 0) return to_string(a_);
    if (a_ == 0) return to_string(b_) + root;
    if (b_ < 0) return to_string(a_) + "-" + to_string(Rational(-b_)) + root;
    return to_string(a_) + "+" + to_string(b_) + root;
  }

  static Quadratic parse(std::string_view s);

  friend std::ostream& operator<<(std::ostream& os, const Quadratic& x) { return os << x.str(); }

 private:
  Rational a_{0};
  Rational b_{0};
};

template <int D>
Quadratic<D> Quadratic<D>::parse(std::string_view s) {
  const std::string root = "*sqrt" + std::to_string(D);
  auto pos = s.find(root);
  if (pos == std::string_view::npos) return {parse_rational(s)};
  if (pos + root.size() != s.size()) throw std::invalid_argument("Quadratic::parse: trailing text");
  std::string_view head = s.substr(0, pos);
  // split head into rational part and coefficient at the last sign not at the start
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_rational(head)};
  Rational a = parse_rational(head.substr(0, split));
  Rational b = parse_rational(head.substr(split + 1));
  return {a, head[split] == '-' ? Rational(-b) : b};
}

using Sqrt2Num = Quadratic<2>;
using Sqrt3Num = Quadratic<3>;

}  // namespace elsys::exact
