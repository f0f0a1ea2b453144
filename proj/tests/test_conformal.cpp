#include "elsys/conformal/pillowcase.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace elsys::conformal;
using elsys::agm::DoubleRounding;
using elsys::agm::Interval;
using elsys::exact::Rational;
using elsys::exact::Sqrt2Num;
using elsys::exact::Sqrt3Num;

using EP = ExtendedComplex<ExactNum>;
using DP = ExtendedComplex<DComplex>;

namespace {

const ExactNum s2 = ExactNum::sqrt2();
const ExactNum I = ExactNum::i();
const EP inf = EP::infinity();

ExactNum random_num(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(-4, 4);
  return {Rational(n(rng)), Rational(n(rng), 2), Rational(n(rng)), Rational(n(rng), 3)};
}

ExactMoebius random_moebius(std::mt19937& rng) {
  for (;;) {
    ExactNum a = random_num(rng), b = random_num(rng), c = random_num(rng), d = random_num(rng);
    if (!(a * d - b * c).is_zero()) return {a, b, c, d};
  }
}

// the rotation fixing +-i that takes -1, 0, 1, inf into the real line
ExactMoebius rotation() { return {ExactNum(1), -(s2 - ExactNum(1)), s2 - ExactNum(1), ExactNum(1)}; }

}  // namespace

TEST_CASE("moebius_apply examples", "[conformal]") {
  ExactNum p = ExactNum(3) + I;
  CHECK(moebius_apply(ExactMoebius::identity(), EP(p)) == EP(p));
  CHECK(rotation()(EP(0)) == EP(-(s2 - ExactNum(1))));
  CHECK(rotation()(EP(I)) == EP(I));
  CHECK(rotation()(EP(-I)) == EP(-I));

  ExactNum k(Rational(1, 3));
  ExactNum h = (k + ExactNum(1)) / ExactNum(2);
  ExactMoebius g(h, h, k, ExactNum(1));  // ((k+1)/2)(z+1)/(kz+1)
  CHECK(g(EP(-1)) == EP(0));
  CHECK(g(EP(1)) == EP(1));
  CHECK(g(EP(-ExactNum(1) / k)).is_infinite());
  CHECK(g(inf) == EP(h / k));
  CHECK_THROWS_AS(ExactMoebius(ExactNum(1), ExactNum(2), ExactNum(2), ExactNum(4)), std::domain_error);
}

TEST_CASE("moebius composition and inversion are exact", "[conformal][property]") {
  std::mt19937 rng(41);
  for (int t = 0; t < 50; ++t) {
    ExactMoebius m = random_moebius(rng), n = random_moebius(rng);
    CHECK(m.compose(m.inverse()).same_map(ExactMoebius::identity()));
    EP z(random_num(rng));
    CHECK(m.compose(n)(z) == m(n(z)));
    CHECK(m.inverse()(m(z)) == z);
  }
  std::array<EP, 3> z{EP(0), EP(1), EP(I)};
  std::array<EP, 3> w{EP(-1), inf, EP(s2)};
  ExactMoebius f = ExactMoebius::from_three_points(z, w);
  for (std::size_t j = 0; j < 3; ++j) CHECK(f(z[j]) == w[j]);
}

TEST_CASE("cross_ratio examples", "[conformal]") {
  ExactNum lam = ExactNum(2) + I;
  CHECK(cross_ratio(EP(0), EP(1), inf, EP(lam)) == EP(lam));
  ExactNum k(Rational(1, 3));
  // direct evaluation: ((-1/k+1)(1-1/k)) / ((-2/k)(2)) = -1/3
  EP cr = cross_ratio(EP(-1), EP(1), EP(ExactNum(1) / k), EP(-ExactNum(1) / k));
  CHECK(cr == EP(ExactNum(Rational(-1, 3))));
  CHECK_THROWS_AS(cross_ratio(EP(0), EP(1), EP(0), EP(2)), std::domain_error);
  CHECK_THROWS_AS(cross_ratio(inf, EP(1), inf, EP(2)), std::domain_error);
}

TEST_CASE("cross_ratio is Moebius invariant", "[conformal][property]") {
  std::mt19937 rng(43);
  for (int t = 0; t < 40; ++t) {
    std::array<EP, 4> z{EP(random_num(rng)), EP(random_num(rng)), EP(random_num(rng)), EP(random_num(rng))};
    if (t % 4 == 0) z[t % 3] = inf;
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && !(z[i] == z[j]);
    if (!distinct) continue;
    ExactMoebius m = random_moebius(rng);
    CHECK(cross_ratio(m(z[0]), m(z[1]), m(z[2]), m(z[3])) == cross_ratio(z[0], z[1], z[2], z[3]));
  }
}

TEST_CASE("pillowcase_modulus examples", "[conformal]") {
  auto std04 = standard_pillowcase(DComplex(Interval(0.4, 0.4)));
  CHECK(pillowcase_modulus<DoubleRounding>(std04).k().contains(elsys::exact::from_double(0.4)));

  // {-1, 0, 3-2sqrt2, 3+2sqrt2}, curve around [0, 3-2sqrt2]
  ExactNum a = ExactNum(3) - ExactNum(2) * s2, b = ExactNum(3) + ExactNum(2) * s2;
  MarkedSphere<ExactNum> edge{{EP(-1), EP(0), EP(a), EP(b)}, {1, 2}, {0, 3}};
  auto ks = elsys::agm::landen_transform(pillowcase_modulus<DoubleRounding>(edge).k());
  CHECK(ks.contains(Sqrt2Num(Rational(-1), Rational(1))));
  CHECK(pillowcase_landen<DoubleRounding>(edge).k().contains(Sqrt2Num(Rational(-1), Rational(1))));

  // {-(2+sqrt3)^3, 0, 1, inf}, curve around [0, 1]
  Interval r = Interval(2) + elsys::agm::sqrt_of<DoubleRounding>(3);
  DComplex r3 = DComplex(-(r * r * r));
  MarkedSphere<DComplex> face{{DP(r3), DP(0), DP(1), DP::infinity()}, {1, 2}, {0, 3}};
  Interval v = elsys::agm::landen_transform(pillowcase_modulus<DoubleRounding>(face).k());
  // 1/v^2 = 27 + 15sqrt3
  CHECK((Interval(1) / sqr(v)).contains(Sqrt3Num(Rational(27), Rational(15))));
}

TEST_CASE("pillowcase domain errors", "[conformal]") {
  // interleaved pairs: {0,1} | {1/2, inf} on the real line
  MarkedSphere<ExactNum> bad{{EP(0), EP(ExactNum(Rational(1, 2))), EP(1), inf}, {0, 2}, {1, 3}};
  CHECK_THROWS_AS(pillowcase_modulus<DoubleRounding>(bad), std::domain_error);
  // non-rectangular: a generic complex configuration
  MarkedSphere<ExactNum> skew{{EP(0), EP(1), EP(I + ExactNum(2)), inf}, {0, 1}, {2, 3}};
  CHECK_THROWS_AS(pillowcase_modulus<DoubleRounding>(skew), std::domain_error);
  MarkedSphere<ExactNum> three{{EP(0), EP(1), inf}, {0}, {1, 2}};
  CHECK_THROWS_AS(pillowcase_modulus<DoubleRounding>(three), std::invalid_argument);
  MarkedSphere<ExactNum> overlap{{EP(0), EP(1), EP(2), inf}, {0, 1}, {1, 3}};
  CHECK_THROWS_AS(pillowcase_modulus<DoubleRounding>(overlap), std::invalid_argument);
}

TEST_CASE("pillowcase_modulus properties", "[conformal][property]") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  for (int t = 0; t < 40; ++t) {
    double k = u(rng);
    Interval kk(k, k);
    auto s = standard_pillowcase(DComplex(kk));
    auto m = pillowcase_modulus<DoubleRounding>(s);
    CHECK(m.k().contains(elsys::exact::from_double(k)));  // round trip

    // relabelling inside a group
    auto swapped = s;
    std::swap(swapped.group_a[0], swapped.group_a[1]);
    CHECK(pillowcase_modulus<DoubleRounding>(swapped).k().intersects(m.k()));
    auto exchanged = s;
    std::swap(exchanged.group_a, exchanged.group_b);
    CHECK(pillowcase_modulus<DoubleRounding>(exchanged).k().intersects(m.k()));

    // the dual curve: EL * EL_dual = 4, i.e. kratio(k) kratio(k_dual) = 1/4
    auto dual = pillowcase_modulus<DoubleRounding>(dual_curve(s));
    Interval prod = elsys::agm::kratio(m) * elsys::agm::kratio(dual);
    CHECK(prod.contains(Rational(1, 4)));
    CHECK((pillowcase_el<DoubleRounding>(s) * pillowcase_el<DoubleRounding>(dual_curve(s))).contains(Rational(4)));
  }
}

TEST_CASE("pillowcase_modulus is invariant under Moebius maps", "[conformal][property]") {
  std::mt19937 rng(53);
  ExactNum k(Rational(2, 7));
  auto base = standard_pillowcase(k);
  auto k0 = pillowcase_modulus<DoubleRounding>(base).k();
  CHECK(k0.contains(Rational(2, 7)));
  int used = 0;
  while (used < 25) {
    ExactMoebius m = random_moebius(rng);
    auto moved = base.mapped([&](const EP& z) { return m(z); });
    // exact route
    CHECK(pillowcase_modulus<DoubleRounding>(moved).k().intersects(k0));
    // interval route
    auto imoved = moved.mapped([](const EP& z) { return to_icomplex<DoubleRounding>(z); });
    try {
      CHECK(pillowcase_modulus<DoubleRounding>(imoved).k().intersects(k0));
      ++used;
    } catch (const std::domain_error&) {
      // a puncture landed too near infinity for the interval route; skip
    }
  }
}
