#pragma once

// Curves on the six-punctured octahedron O = {0, inf, +-1, +-i}, their
// extremal lengths through quotient maps, and the lifts to the Bolza surface.
//
// Each kind is computed as  EL(O) = d * EL(curve on the quotient sphere),
// the quotient being a four-punctured sphere handled by the pillowcase
// normal form.  Closed forms only serve as comparison targets.

#include "elsys/agm/constants.hpp"
#include "elsys/conformal/pillowcase.hpp"
#include "elsys/exact/quadratic.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace elsys::catalog {

using agm::BasicInterval;
using exact::Rational;
using exact::Sqrt2Num;

enum class CurveKind { baseball, edge, altitude, face };

inline constexpr std::array<CurveKind, 4> all_kinds{CurveKind::baseball, CurveKind::edge, CurveKind::altitude,
                                                    CurveKind::face};

inline std::string_view to_string(CurveKind k) {
  switch (k) {
    case CurveKind::baseball: return "baseball";
    case CurveKind::edge: return "edge";
    case CurveKind::altitude: return "altitude";
    case CurveKind::face: return "face";
  }
  return "?";
}

struct Split {
  int m = 0, n = 0;
};

inline Split separation(CurveKind k) { return k == CurveKind::face ? Split{3, 3} : Split{2, 4}; }

// Extremal length changes by 2 under the double cover branched at the six
// punctures: doubled for (3,3) curves, halved for (2,4) curves.
struct LiftRule {
  Split split;
  bool doubles() const { return split.m % 2 == 1; }
  static LiftRule of(Split s) {
    if (s.m + s.n != 6 || s.m < 2 || s.n < 2) throw std::invalid_argument("LiftRule: not a split of six punctures");
    return {s};
  }
  static LiftRule of(CurveKind k) { return of(separation(k)); }
};

struct PipelineRecord {
  std::string quotient;
  int degree = 1;
  std::string punctures;
  std::vector<std::string> assumptions;
};

template <class R>
struct ElValue {
  BasicInterval<R> enclosure;
  std::optional<Sqrt2Num> exact;  // set only when the enclosure contains it
  PipelineRecord pipeline;
};

namespace detail {

using conformal::ExtendedComplex;
using conformal::MarkedSphere;
using exact::ExactNum;

template <class R>
BasicInterval<R> scaled_el(int degree, const BasicInterval<R>& quotient_el) {
  return BasicInterval<R>(degree) * quotient_el;
}

inline MarkedSphere<ExactNum> baseball_sphere() {
  using E = ExtendedComplex<ExactNum>;
  return {{E(ExactNum(-1)), E(ExactNum(0)), E(ExactNum(1)), E::infinity()}, {1, 2}, {0, 3}};
}

inline MarkedSphere<ExactNum> edge_sphere() {
  using E = ExtendedComplex<ExactNum>;
  ExactNum s2 = ExactNum::sqrt2();
  ExactNum a = ExactNum(3) - ExactNum(2) * s2, b = ExactNum(3) + ExactNum(2) * s2;
  return {{E(ExactNum(-1)), E(ExactNum(0)), E(a), E(b)}, {1, 2}, {0, 3}};
}

inline MarkedSphere<ExactNum> altitude_sphere() {
  using E = ExtendedComplex<ExactNum>;
  ExactNum a = ExactNum(3) - ExactNum(2) * ExactNum::sqrt2();
  return {{E(ExactNum(-1)), E(ExactNum(0)), E(a), E::infinity()}, {0, 1}, {2, 3}};
}

// {-c, 0, 1, inf} split {0, 1} | {-c, inf}
template <class R>
MarkedSphere<conformal::IComplex<R>> cube_quotient(const BasicInterval<R>& c) {
  using C = conformal::IComplex<R>;
  using E = ExtendedComplex<C>;
  return {{E(C(-c)), E(C(BasicInterval<R>(0))), E(C(BasicInterval<R>(1))), E::infinity()}, {1, 2}, {0, 3}};
}

}  // namespace detail

template <class R>
ElValue<R> el_octahedron(CurveKind k, double tol = agm::default_tol) {
  using I = BasicInterval<R>;
  ElValue<R> out;
  switch (k) {
    case CurveKind::baseball: {
      auto s = detail::baseball_sphere();
      out.pipeline = {"z -> z^2", 2, "{-1, 0, 1, inf}, curve around [0, 1]", {}};
      out.enclosure = detail::scaled_el<R>(2, conformal::pillowcase_el<R>(s, tol));
      if (out.enclosure.contains(Rational(4))) out.exact = Sqrt2Num(4);
      break;
    }
    case CurveKind::edge: {
      auto s = detail::edge_sphere();
      out.pipeline = {"degree-2 quotient, one puncture dropped", 2,
                      "{-1, 0, 3-2sqrt2, 3+2sqrt2}, curve around [0, 3-2sqrt2]",
                      {"the dropped puncture lies on a critical trajectory and does not change EL"}};
      out.enclosure = detail::scaled_el<R>(2, conformal::pillowcase_el<R>(s, tol));
      Sqrt2Num target(Rational(0), Rational(2));
      // K'/K(sqrt2 - 1) = sqrt2 certifies the exact value
      I check = agm::named_constant<R>(agm::ConstantName::edge_check, tol);
      if (out.enclosure.contains(target) && check.contains(Sqrt2Num(Rational(0), Rational(1)))) out.exact = target;
      break;
    }
    case CurveKind::altitude: {
      auto s = detail::altitude_sphere();
      out.pipeline = {"degree-2 quotient, one puncture dropped", 2,
                      "{-1, 0, 3-2sqrt2, inf}, curve around [-1, 0]",
                      {"the dropped puncture lies on a critical trajectory and does not change EL"}};
      out.enclosure = detail::scaled_el<R>(2, conformal::pillowcase_el<R>(s, tol));
      break;
    }
    case CurveKind::face: {
      I r = I(2) + agm::sqrt_of<R>(3);
      out.pipeline = {"z -> z^3 with a face center at 0", 3,
                      "{-(2+sqrt3)^3, 0, 1, inf}, curve around [0, 1]", {}};
      out.enclosure = detail::scaled_el<R>(3, conformal::pillowcase_el<R>(detail::cube_quotient<R>(r * r * r), tol));
      break;
    }
  }
  return out;
}

template <class R>
BasicInterval<R> edge_residual(double tol = agm::default_tol) {
  return agm::named_constant<R>(agm::ConstantName::edge_check, tol) - agm::sqrt_of<R>(2);
}

template <class R>
ElValue<R> lift_to_bolza(CurveKind k, double tol = agm::default_tol) {
  using I = BasicInterval<R>;
  ElValue<R> v = el_octahedron<R>(k, tol);
  LiftRule rule = LiftRule::of(k);
  ElValue<R> out{rule.doubles() ? v.enclosure * I(2) : v.enclosure / I(2), std::nullopt, v.pipeline};
  if (v.exact) out.exact = rule.doubles() ? *v.exact * Sqrt2Num(2) : *v.exact * Sqrt2Num(Rational(1, 2));
  return out;
}

template <class R>
struct BolzaComparison {
  std::string label;
  BasicInterval<R> enclosure;
  bool strictly_above_systole = false;
};

template <class R>
struct BolzaSystole {
  Sqrt2Num value;
  std::string witness;
  std::vector<BolzaComparison<R>> comparisons;  // ascending by lower endpoint
  bool certified = false;
  bool face_below_edge = false;  // on O: face hi < 2 sqrt2
  BasicInterval<R> runner_up;  // smallest computed lift other than the edge lifts
};

// sqrt2 from the edge lifts; every other computed kind lifts strictly above
// it, and any remaining class has EL >= 2 sqrt3 on O (flat bound), so its lift
// is at least sqrt3 > sqrt2.
template <class R>
BolzaSystole<R> elsys_bolza(double tol = agm::default_tol) {
  using I = BasicInterval<R>;
  BolzaSystole<R> out;
  out.value = Sqrt2Num(Rational(0), Rational(1));
  out.witness = "edge lifts";
  const I sqrt2 = agm::sqrt_of<R>(2);
  bool ok = true;
  for (CurveKind k : all_kinds) {
    ElValue<R> l = lift_to_bolza<R>(k, tol);
    bool above = sqrt2.certainly_less(l.enclosure);
    if (k == CurveKind::edge) {
      ok = ok && l.exact && *l.exact == out.value;
    } else {
      ok = ok && above;
    }
    out.comparisons.push_back({std::string(to_string(k)), l.enclosure, above});
  }
  // runner-up among the computed kinds
  bool have = false;
  for (const auto& c : out.comparisons)
    if (c.label != "edge" && (!have || c.enclosure.lo() < out.runner_up.lo())) {
      out.runner_up = c.enclosure;
      have = true;
    }
  // remaining classes: EL >= 2 sqrt3 on O, (2,4) lifts halve to >= sqrt3, (3,3) lifts double to >= 4 sqrt3
  I flat = I(2) * agm::sqrt_of<R>(3);
  out.comparisons.push_back({"other (2,4) classes, lower bound", flat / I(2), sqrt2.certainly_less(flat / I(2))});
  out.comparisons.push_back({"other (3,3) classes, lower bound", flat * I(2), sqrt2.certainly_less(flat * I(2))});
  ok = ok && out.comparisons[4].strictly_above_systole && out.comparisons[5].strictly_above_systole;
  std::stable_sort(out.comparisons.begin(), out.comparisons.end(),
                   [](const auto& a, const auto& b) { return a.enclosure.lo() < b.enclosure.lo(); });
  I face = el_octahedron<R>(CurveKind::face, tol).enclosure;
  out.face_below_edge = face.certainly_less(I(2) * sqrt2);
  out.certified = ok && out.face_below_edge;
  return out;
}

}  // namespace elsys::catalog
