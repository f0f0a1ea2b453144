#pragma once

// Rational quadratic differentials q = P(z)/Q(z) dz^2.
//
// Over an exact field the representation is canonical: gcd(P, Q) = 1 and Q
// monic.  Over std::complex<double> (plotting only) no cancellation is
// attempted and Q is merely normalised to be monic.

#include "elsys/conformal/moebius.hpp"
#include "elsys/exact/poly.hpp"

#include <complex>
#include <ostream>
#include <stdexcept>
#include <type_traits>

namespace elsys::qdiff {

using conformal::MoebiusMap;
using exact::ExactNum;
using exact::Poly;

template <class T>
inline constexpr bool is_exact_field = std::is_same_v<T, ExactNum> || std::is_same_v<T, exact::Rational>;

template <class T>
class RationalQD {
 public:
  using poly = Poly<T>;

  RationalQD(poly num, poly den) {
    if (den.is_zero()) throw std::domain_error("RationalQD: zero denominator");
    if constexpr (is_exact_field<T>) {
      if (!num.is_zero()) {
        poly g = exact::poly_gcd(num, den);
        if (g.degree() > 0) {
          num = exact::divmod(num, g).first;
          den = exact::divmod(den, g).first;
        }
      } else {
        den = poly::constant(T(1));
      }
    }
    T lead = den.leading();
    T inv = T(1) / lead;
    num_ = inv * num;
    den_ = den.monic();
  }

  const poly& numerator() const { return num_; }
  const poly& denominator() const { return den_; }

  T operator()(const T& z) const { return num_(z) / den_(z); }

  friend bool operator==(const RationalQD& a, const RationalQD& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalQD& q) {
    return os << "(" << q.num_ << ") / (" << q.den_ << ") dz^2";
  }

 private:
  poly num_;
  poly den_;
};

using ExactQD = RationalQD<ExactNum>;

namespace detail {

// sum_j p_j (a z + b)^j (c z + d)^(n - j), i.e. (cz+d)^n P(m(z))
template <class T>
Poly<T> homogenize(const Poly<T>& p, int n, const MoebiusMap<T>& m) {
  Poly<T> num{m.b(), m.a()};
  Poly<T> den{m.d(), m.c()};
  Poly<T> out;
  for (int j = 0; j <= p.degree(); ++j) {
    if (exact::is_zero_coeff(p.coeff(j))) continue;
    out = out + p.coeff(j) * (pow(num, static_cast<unsigned>(j)) * pow(den, static_cast<unsigned>(n - j)));
  }
  return out;
}

}  // namespace detail

// m* q = q(m(z)) m'(z)^2 dz^2
//      = Ptilde (ad - bc)^2 (cz + d)^(deg Q - deg P - 4) / Qtilde  dz^2
template <class T>
RationalQD<T> pullback(const RationalQD<T>& q, const MoebiusMap<T>& m) {
  const int n = q.numerator().degree();
  const int k = q.denominator().degree();
  if (n < 0) return q;
  Poly<T> P = detail::homogenize(q.numerator(), n, m);
  Poly<T> Q = detail::homogenize(q.denominator(), k, m);
  T det = m.det();
  P = (det * det) * P;
  Poly<T> lin{m.d(), m.c()};
  int e = k - n - 4;
  if (e >= 0) {
    P = P * pow(lin, static_cast<unsigned>(e));
  } else {
    Q = Q * pow(lin, static_cast<unsigned>(-e));
  }
  return {P, Q};
}

// Residue at a simple pole a of the 1-form q * d/dz = P/Q dz, i.e. P(a)/Q'(a).
template <class T>
T residue(const RationalQD<T>& q, const T& a) {
  if (!exact::is_zero_coeff(q.denominator()(a))) throw std::domain_error("residue: point is not a pole");
  T dq = q.denominator().derivative()(a);
  if (exact::is_zero_coeff(dq)) throw std::domain_error("residue: pole is not simple");
  return q.numerator()(a) / dq;
}

// Residue at infinity of P/Q dz.  With w = 1/z the form becomes
// -w^(degQ - degP - 2) Prev(w)/Qrev(w) dw, Prev/Qrev the reversed polynomials.
template <class T>
T residue_at_infinity(const RationalQD<T>& q) {
  const auto& P = q.numerator();
  const auto& Q = q.denominator();
  if (P.is_zero()) return T(0);
  int e = Q.degree() - P.degree() - 2;
  if (e >= 0) return T(0);
  // coefficient of w^(-1-e) in the power series Prev/Qrev, Qrev(0) = lead(Q) != 0
  const int order = -1 - e;
  std::vector<T> prev(P.coeffs().rbegin(), P.coeffs().rend());
  std::vector<T> qrev(Q.coeffs().rbegin(), Q.coeffs().rend());
  auto at = [](const std::vector<T>& v, int i) { return (i >= 0 && i < static_cast<int>(v.size())) ? v[i] : T(0); };
  std::vector<T> s(static_cast<std::size_t>(order + 1), T(0));
  for (int i = 0; i <= order; ++i) {
    T acc = at(prev, i);
    for (int j = 1; j <= i; ++j) acc = acc - at(qrev, j) * s[static_cast<std::size_t>(i - j)];
    s[static_cast<std::size_t>(i)] = acc / qrev[0];
  }
  return -s[static_cast<std::size_t>(order)];
}

// Coefficient change, e.g. exact to complex<double> for plotting.
template <class U, class T, class Conv>
RationalQD<U> convert(const RationalQD<T>& q, Conv conv) {
  auto map = [&](const Poly<T>& p) {
    std::vector<U> c;
    for (const auto& x : p.coeffs()) c.push_back(conv(x));
    return Poly<U>(c);
  };
  return {map(q.numerator()), map(q.denominator())};
}

inline RationalQD<std::complex<double>> to_complex(const ExactQD& q) {
  return convert<std::complex<double>>(q, [](const ExactNum& x) { return x.to_complex(); });
}

}  // namespace elsys::qdiff
