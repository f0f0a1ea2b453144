#pragma once

// Dense univariate polynomials over a coefficient domain T, lowest degree
// first.  Division, remainder and gcd need T to be an exact field.

#include "elsys/exact/exact_num.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace elsys::exact {

template <class T>
bool is_zero_coeff(const T& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == T{};
  }
}

template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  // x - r
  static Poly linear_root(const T& r) { return Poly(std::vector<T>{-r, T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
  }

  T operator()(const T& z) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  // Evaluate after mapping each coefficient through conv (e.g. to complex<double>).
  template <class U, class Conv>
  U eval_as(const U& z, Conv conv) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + conv(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return {};
    T inv = T(1) / leading();
    std::vector<T> d(c_);
    for (auto& v : d) v = v * inv;
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = r[i] + p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] = r[i] + q.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p) {
    std::vector<T> r(p.c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, const Poly& p) {
    std::vector<T> r(p.c_);
    for (auto& v : r) v = s * v;
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      if (is_zero_coeff(p.c_[i])) continue;
      if (!first) os << " + ";
      os << "(" << p.c_[i] << ")";
      if (i > 0) os << "*z^" << i;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
Poly<T> pow(const Poly<T>& p, unsigned n) {
  Poly<T> r = Poly<T>::constant(T(1));
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

// Quotient and remainder of p by a nonzero q.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& p, const Poly<T>& q) {
  if (q.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<T> rem(p.coeffs());
  const int dq = q.degree();
  const int dp = p.degree();
  if (dp < dq) return {Poly<T>{}, p};
  std::vector<T> quo(static_cast<std::size_t>(dp - dq + 1), T(0));
  T inv = T(1) / q.leading();
  for (int k = dp - dq; k >= 0; --k) {
    T f = rem[static_cast<std::size_t>(k + dq)] * inv;
    quo[static_cast<std::size_t>(k)] = f;
    if (is_zero_coeff(f)) continue;
    for (int j = 0; j <= dq; ++j) {
      auto idx = static_cast<std::size_t>(k + j);
      rem[idx] = rem[idx] - f * q.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(dq));
  return {Poly<T>(std::move(quo)), Poly<T>(std::move(rem))};
}

// Monic greatest common divisor by the Euclidean algorithm.
template <class T>
Poly<T> poly_gcd(Poly<T> p, Poly<T> q) {
  if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_gcd: both arguments are zero");
  while (!q.is_zero()) {
    auto r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

using ExactPoly = Poly<ExactNum>;

}  // namespace elsys::exact
