#pragma once

// Named elliptic-integral ratios of the punctured octahedron and its
// relatives, with the published reference enclosures they are tested against.

#include "elsys/agm/agm.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace elsys::agm {

enum class ConstantName { altitude, face, face_dual, antiprism_hexagon, edge_check };

inline constexpr std::array<ConstantName, 5> all_constants{ConstantName::altitude, ConstantName::face,
                                                           ConstantName::face_dual, ConstantName::antiprism_hexagon,
                                                           ConstantName::edge_check};

inline std::string_view to_string(ConstantName n) {
  switch (n) {
    case ConstantName::altitude: return "altitude";
    case ConstantName::face: return "face";
    case ConstantName::face_dual: return "face_dual";
    case ConstantName::antiprism_hexagon: return "antiprism_hexagon";
    case ConstantName::edge_check: return "edge_check";
  }
  return "?";
}

inline ConstantName parse_constant_name(std::string_view s) {
  for (auto n : all_constants)
    if (to_string(n) == s) return n;
  throw std::invalid_argument("unknown constant '" + std::string(s) + "'");
}

// Published enclosure "center +- radius", kept as decimal text so it can be
// converted exactly.
struct ReferenceInterval {
  std::string_view center;
  std::string_view radius;
  std::string_view formula;

  Rational lo() const { return exact::parse_rational(center) - exact::parse_rational(radius); }
  Rational hi() const { return exact::parse_rational(center) + exact::parse_rational(radius); }
  template <class R>
  BasicInterval<R> as_interval() const {
    return BasicInterval<R>::from_rationals(lo(), hi());
  }
};

inline ReferenceInterval reference_interval(ConstantName n) {
  switch (n) {
    case ConstantName::altitude: return {"5.8768721265012", "1.18e-14", "4K(u)/K'(u), u = sqrt(2+sqrt2)/2"};
    case ConstantName::face: return {"2.79957467136936", "8.4e-15", "6K(v)/K'(v), v = 1/sqrt(27+15sqrt3)"};
    case ConstantName::face_dual: return {"12.8590961934912", "6.81e-14", "36/face = 6K'(v)/K(v)"};
    case ConstantName::antiprism_hexagon: return {"2.34031875460627", "5.71e-15", "4K(w)/K'(w), w = 2-sqrt3"};
    case ConstantName::edge_check: return {"1.4142135623730950488", "1e-19", "K'(k)/K(k), k = sqrt2-1"};
  }
  throw std::invalid_argument("reference_interval: unknown constant");
}

// Moduli of the named constants, each with a closed-form complement.
template <class R>
BasicModulus<R> altitude_modulus() {
  using I = BasicInterval<R>;
  I s2 = sqrt_of<R>(2);
  I half = I::from_ratio(1, 2);
  return {sqrt(I(2) + s2) * half, sqrt(I(2) - s2) * half};
}

template <class R>
BasicModulus<R> face_modulus() {
  using I = BasicInterval<R>;
  I s3 = sqrt_of<R>(3);
  I d = I(27) + I(15) * s3;  // 1/v^2
  return {I(1) / sqrt(d), sqrt((I(26) + I(15) * s3) / d)};
}

template <class R>
BasicModulus<R> hexagon_modulus() {
  using I = BasicInterval<R>;
  I s3 = sqrt_of<R>(3);
  return {I(2) - s3, sqrt(I(4) * s3 - I(6))};  // 1 - (2-sqrt3)^2 = 4sqrt3 - 6
}

template <class R>
BasicModulus<R> edge_modulus() {
  using I = BasicInterval<R>;
  I s2 = sqrt_of<R>(2);
  return {s2 - I(1), sqrt(I(2) * s2 - I(2))};  // 1 - (sqrt2-1)^2 = 2sqrt2 - 2
}

template <class R>
BasicInterval<R> named_constant(ConstantName n, double tol = default_tol) {
  using I = BasicInterval<R>;
  switch (n) {
    case ConstantName::altitude: return I(4) * kratio(altitude_modulus<R>(), tol);
    case ConstantName::face: return I(6) * kratio(face_modulus<R>(), tol);
    // evaluated from the complementary modulus rather than by dividing 36
    case ConstantName::face_dual: return I(6) * kratio(face_modulus<R>().complement(), tol);
    case ConstantName::antiprism_hexagon: return I(4) * kratio(hexagon_modulus<R>(), tol);
    case ConstantName::edge_check: return kratio(edge_modulus<R>().complement(), tol);
  }
  throw std::invalid_argument("named_constant: unknown constant");
}

template <class R>
BasicInterval<R> named_constant(std::string_view name, double tol = default_tol) {
  return named_constant<R>(parse_constant_name(name), tol);
}

}  // namespace elsys::agm
