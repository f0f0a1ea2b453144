#pragma once

// Closed-form extremal lengths and systolic ratios of flat examples, each as
// factor * length^2 / area in Q(sqrt3).

#include "elsys/exact/quadratic.hpp"

#include <string>
#include <vector>

namespace elsys::catalog {

using exact::Sqrt3Num;

struct ClassicConstant {
  std::string id;
  std::string description;
  Sqrt3Num factor;
  Sqrt3Num length_sq;
  Sqrt3Num area;
  Sqrt3Num target;

  Sqrt3Num value() const { return factor * length_sq / area; }
  std::string derivation() const {
    std::string s = length_sq.str() + " / " + area.str();
    return factor == Sqrt3Num(1) ? s : factor.str() + " * (" + s + ")";
  }
  bool pass() const { return value() == target; }
};

inline std::vector<ClassicConstant> classic_constants() {
  using exact::Rational;
  const Sqrt3Num tri_area(Rational(0), Rational(1, 2));  // sqrt3 / 2
  return {
      {"figure_eight", "figure-eight curve on the square pillowcase", 1, 4, 1, 4},
      {"square_diagonal", "curve of flat length 2 sqrt2 on a unit-area square surface", 1, 8, 1, 8},
      {"trefoil", "curve of length 3 on the equilateral surface of area sqrt3/2", 1, 9, tri_area,
       Sqrt3Num(Rational(0), Rational(6))},
      {"sr_bound", "systolic ratio bound, length sqrt3 over area sqrt3/2", 1, 3, tri_area,
       Sqrt3Num(Rational(0), Rational(2))},
      {"thrice_punctured_sphere", "extremal length systole of the thrice-punctured sphere", 1, 4, 1, 4},
      {"tetrahedron", "tetrahedron systole, twice the hexagonal torus ratio", 2, 1, tri_area,
       Sqrt3Num(Rational(0), Rational(4, 3))},
  };
}

}  // namespace elsys::catalog
