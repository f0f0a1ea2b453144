#pragma once

// ExactNum: the number field Q(sqrt2, i), stored as re + im*i with
// re, im in Q(sqrt2).  The four rational coordinates a, b, c, d give
// a + b*sqrt2 + c*i + d*sqrt2*i.

#include "elsys/exact/quadratic.hpp"

#include <complex>
#include <ostream>
#include <string>

namespace elsys::exact {

class ExactNum {
 public:
  ExactNum() = default;
  ExactNum(int a) : re_(a) {}  // NOLINT(google-explicit-constructor)
  ExactNum(Rational a) : re_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  ExactNum(Sqrt2Num re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactNum(Sqrt2Num re, Sqrt2Num im) : re_(std::move(re)), im_(std::move(im)) {}
  ExactNum(Rational a, Rational b, Rational c, Rational d)
      : re_(std::move(a), std::move(b)), im_(std::move(c), std::move(d)) {}

  static ExactNum sqrt2() { return {Sqrt2Num::root()}; }
  static ExactNum i() { return {Sqrt2Num(0), Sqrt2Num(1)}; }

  const Rational& a() const { return re_.rational_part(); }
  const Rational& b() const { return re_.root_part(); }
  const Rational& c() const { return im_.rational_part(); }
  const Rational& d() const { return im_.root_part(); }

  const Sqrt2Num& re() const { return re_; }
  const Sqrt2Num& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  // complex conjugation; sqrt2 is fixed
  ExactNum conj() const { return {re_, -im_}; }

  ExactNum inverse() const {
    if (is_zero()) throw std::domain_error("ExactNum: division by zero");
    // 1/(x + yi) = (x - yi)/(x^2 + y^2), with x^2 + y^2 a nonzero element of Q(sqrt2)
    Sqrt2Num n = re_ * re_ + im_ * im_;
    Sqrt2Num inv = n.inverse();
    return {re_ * inv, -im_ * inv};
  }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  friend ExactNum operator+(const ExactNum& x, const ExactNum& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }
  friend ExactNum operator-(const ExactNum& x, const ExactNum& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }
  friend ExactNum operator-(const ExactNum& x) { return {-x.re_, -x.im_}; }
  friend ExactNum operator*(const ExactNum& x, const ExactNum& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  friend ExactNum operator/(const ExactNum& x, const ExactNum& y) { return x * y.inverse(); }

  ExactNum& operator+=(const ExactNum& y) { return *this = *this + y; }
  ExactNum& operator-=(const ExactNum& y) { return *this = *this - y; }
  ExactNum& operator*=(const ExactNum& y) { return *this = *this * y; }
  ExactNum& operator/=(const ExactNum& y) { return *this = *this / y; }

  friend bool operator==(const ExactNum& x, const ExactNum& y) { return x.re_ == y.re_ && x.im_ == y.im_; }

  // Real elements render as Q(sqrt2) strings; otherwise "(re)+(im)*i".
  std::string str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return "(" + im_.str() + ")*i";
    return "(" + re_.str() + ")+(" + im_.str() + ")*i";
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactNum& x) { return os << x.str(); }

 private:
  Sqrt2Num re_;
  Sqrt2Num im_;
};

inline ExactNum re(const ExactNum& x) { return {x.re()}; }
inline ExactNum im(const ExactNum& x) { return {x.im()}; }

enum class Op { add, mul, div };

inline ExactNum field_arith(const ExactNum& x, const ExactNum& y, Op op) {
  switch (op) {
    case Op::add: return x + y;
    case Op::mul: return x * y;
    case Op::div: return x / y;
  }
  throw std::invalid_argument("field_arith: unknown op");
}

}  // namespace elsys::exact
