#include "elsys/agm/constants.hpp"
#include "elsys/agm/landen.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace elsys::agm;
using elsys::exact::parse_rational;
using elsys::exact::Sqrt2Num;
using Big = boost::multiprecision::cpp_bin_float_100;

namespace {

// Plain AGM at ~330 bits, no interval logic: the independent oracle.
Big agm_oracle(Big a) {
  Big x = 1, y = std::move(a);
  for (int i = 0; i < 40; ++i) {
    Big nx = (x + y) / 2;
    y = sqrt(x * y);
    x = nx;
  }
  return x;
}

Big kratio_oracle(const Big& k) { return agm_oracle(k) / agm_oracle(sqrt(1 - k * k)); }

Rational to_rational(const Big& x) {
  int e = 0;
  Big m = frexp(x, &e);
  elsys::exact::BigInt n = ldexp(m, 340).convert_to<elsys::exact::BigInt>();
  e -= 340;
  return e >= 0 ? Rational(n << e) : Rational(n, elsys::exact::pow2(static_cast<unsigned>(-e)));
}

template <class R>
bool encloses(const BasicInterval<R>& x, const Big& v) {
  return x.contains(to_rational(v));
}

// Frozen 40-digit values (mpmath, independent of this library).
const char* const agm_half = "0.7283955155234534345932";
const char* const agm_sqrt2m1 = "0.6749769488259490723852";
const char* const kratio_03 = "0.611943427652876082187";

}  // namespace

TEST_CASE("double intervals round outward and stay exact when possible", "[agm][interval]") {
  Interval third = Interval(1) / Interval(3);
  CHECK(third.contains(Rational(1, 3)));
  CHECK_FALSE(third.is_point());
  CHECK((Interval(3) * Interval(7)).is_point());
  CHECK(sqrt(Interval(4)) == Interval(2));
  Interval s2 = sqrt_of<DoubleRounding>(2);
  CHECK(s2.contains(Sqrt2Num::root()));
  CHECK(s2.width_double() <= 4.5e-16);
  CHECK_THROWS_AS(Interval(1) / Interval(-1, 1), std::domain_error);
  CHECK_THROWS_AS(sqrt(Interval(-2, -1)), std::domain_error);
}

TEMPLATE_TEST_CASE("interval operations contain the exact rational result", "[agm][interval][property]",
                   DoubleRounding, ExtendedRounding) {
  using I = BasicInterval<TestType>;
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-1000, 1000), den(1, 997);
  for (int t = 0; t < 200; ++t) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    I a = I::from_rational(x), b = I::from_rational(y);
    CHECK((a + b).contains(x + y));
    CHECK((a - b).contains(x - y));
    CHECK((a * b).contains(x * y));
    if (y != 0) CHECK((a / b).contains(x / y));
    Rational ax = x < 0 ? Rational(-x) : x;
    I r = sqrt(I::from_rational(ax));
    CHECK(r.lo_rational() * r.lo_rational() <= ax);
    CHECK(r.hi_rational() * r.hi_rational() >= ax);
  }
}

TEST_CASE("agm_enclosure examples", "[agm]") {
  CHECK(agm_enclosure(Interval(1)) == Interval(1));
  CHECK(agm_enclosure(ExtInterval(1)) == ExtInterval(1));

  Interval m = agm_enclosure(Interval::from_ratio(1, 2));
  CHECK(m.intersects(Interval::from_decimal(agm_half)));
  CHECK(m.width_double() <= 1e-13);
  CHECK(encloses(m, agm_oracle(Big(0.5))));

  Interval k = sqrt_of<DoubleRounding>(2) - Interval(1);
  Interval m2 = agm_enclosure(k);
  CHECK(m2.width_double() <= 1e-13);
  CHECK(m2.intersects(Interval::from_decimal(agm_sqrt2m1)));

  ExtInterval me = agm_enclosure(ExtInterval::from_ratio(1, 2), 1e-70);
  CHECK(me.width_double() <= 1e-60);
  CHECK(std::abs((me.lo_rational() - parse_rational(agm_half)).convert_to<double>()) < 1e-21);

  CHECK_THROWS_AS(agm_enclosure(Interval(0)), std::domain_error);
  CHECK_THROWS_AS(agm_enclosure(Interval(-1)), std::domain_error);
}

TEST_CASE("agm bracket is monotone and shrinks quadratically", "[agm][property]") {
  for (double x : {1e-3, 0.1, 0.5, 0.9}) {
    auto tr = agm_trace<DoubleRounding>(x, 0.0);
    for (std::size_t n = 1; n < tr.size(); ++n) {
      CHECK(tr[n].a.hi() <= tr[n - 1].a.hi());
      CHECK(tr[n].g.lo() >= tr[n - 1].g.lo());
      double prev = tr[n - 1].a.hi() - tr[n - 1].g.lo();
      double cur = tr[n].a.hi() - tr[n].g.lo();
      // (a-g)_{n+1} = (sqrt a - sqrt g)^2 / 2 <= (a-g)_n^2 / (8 g)
      CHECK(cur <= prev * prev / (8 * tr[n - 1].g.lo()) + 1e-15);
    }
  }
}

TEST_CASE("agm enclosures contain the high-precision oracle", "[agm][property]") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-6, 0);
  for (int t = 0; t < 100; ++t) {
    double a = std::pow(10.0, u(rng));
    CHECK(encloses(agm_enclosure(Interval(a, a)), agm_oracle(Big(a))));
  }
  for (int t = 0; t < 10; ++t) {
    double a = std::pow(10.0, u(rng));
    CHECK(encloses(agm_enclosure(ExtInterval::from_rational(elsys::exact::from_double(a))), agm_oracle(Big(a))));
  }
}

TEST_CASE("kratio examples", "[agm]") {
  Interval r = kratio(Interval(1) / sqrt_of<DoubleRounding>(2));
  CHECK(r.contains(Rational(1)));

  Interval k = sqrt_of<DoubleRounding>(2) - Interval(1);
  CHECK(kratio(k).contains(Sqrt2Num(Rational(0), Rational(1, 2))));

  Interval r3 = kratio(Interval(0.3, 0.3));
  CHECK(r3.intersects(Interval::from_decimal(kratio_03)));
  auto K = oracle::complete_K(0.3);
  auto Kp = oracle::complete_K(std::sqrt(0.91), 0.3);
  CHECK(std::abs(r3.mid_double() - K.value / Kp.value) <= 1e-12);

  CHECK_THROWS_AS(kratio(Interval(0)), std::domain_error);
  CHECK_THROWS_AS(kratio(Interval(1)), std::domain_error);
  CHECK_THROWS_AS(kratio(Interval(0.5, 1.0)), std::domain_error);
}

TEST_CASE("kratio properties", "[agm][property]") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(1e-3, 1 - 1e-3);
  for (int t = 0; t < 100; ++t) {
    double k = u(rng);
    Modulus m(Interval(k, k));
    Interval r = kratio(m);
    CHECK(encloses(r, kratio_oracle(Big(k))));
    CHECK((r * kratio(m.complement())).contains(Rational(1)));
    CHECK((r - kratio(landen_modulus(m.k())) / Interval(2)).contains_zero());

    double k2 = u(rng);
    Interval r2 = kratio(Interval(k2, k2));
    if (!r.intersects(r2)) CHECK((k < k2) == r.certainly_less(r2));
  }
}

TEST_CASE("kratio agrees with the quadrature oracle", "[agm][property]") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  for (int t = 0; t < 50; ++t) {
    double k = u(rng);
    double kp = std::sqrt((1 - k) * (1 + k));
    double q = oracle::complete_K(k, kp).value / oracle::complete_K(kp, k).value;
    CHECK(std::abs(kratio(Interval(k, k)).mid_double() - q) <= 1e-12 * q);
  }
}

TEST_CASE("quadrature oracle reproduces known K values", "[agm][oracle]") {
  // K(0) = pi/2, K(1/sqrt2) = Gamma(1/4)^2 / (4 sqrt pi)
  CHECK(std::abs(oracle::complete_K(0.0, 1.0).value - 1.5707963267948966) < 1e-15);
  CHECK(std::abs(oracle::complete_K(std::sqrt(0.5)).value - 1.8540746773013719) < 1e-14);
  auto near1 = oracle::complete_K(1 - 1e-12, std::sqrt(2e-12));
  CHECK(near1.error < 1e-12);
}

TEST_CASE("landen_transform examples", "[agm]") {
  Interval k = sqrt_of<DoubleRounding>(2) - Interval(1);
  Interval ks = landen_transform(k);
  CHECK(sqr(ks).contains(Sqrt2Num(Rational(-2), Rational(2))));

  Interval half_root = Interval(1) / sqrt_of<DoubleRounding>(2);
  CHECK(kratio(landen_modulus(half_root)).contains(Rational(2)));

  Big direct = 2 * sqrt(Big(0.5)) / Big(1.5);
  Interval k5 = landen_transform(Interval(0.5, 0.5));
  CHECK(encloses(k5, direct));
  CHECK(k5.width_double() <= 1e-15);

  CHECK((sqr(landen_transform(Interval(0.3, 0.3))) + sqr(landen_complement(Interval(0.3, 0.3))))
            .contains(Rational(1)));
  CHECK(landen_inverse(landen_modulus(Interval(0.3, 0.3))).contains(elsys::exact::from_double(0.3)));
  CHECK_THROWS_AS(landen_transform(Interval(1)), std::domain_error);
  CHECK_THROWS_AS(landen_transform(Interval(0)), std::domain_error);
}

TEST_CASE("landen_check examples", "[agm]") {
  for (double k : {0.3, 0.9}) {
    auto r = landen_check(k, 1e-10);
    INFO("k = " << k);
    for (std::size_t i = 0; i < 3; ++i) CHECK(r.residual_ok(i));
    CHECK(r.pass);
  }
  auto r = landen_check(sqrt_of<DoubleRounding>(2) - Interval(1));
  CHECK(r.residual[2].contains_zero());
  CHECK(r.pass);
  CHECK_THROWS_AS(landen_check(1.5), std::domain_error);
}

TEST_CASE("named constants meet the published intervals", "[agm]") {
  for (ConstantName n : all_constants) {
    INFO(to_string(n));
    auto ref = reference_interval(n);
    Interval d = named_constant<DoubleRounding>(n);
    ExtInterval e = named_constant<ExtendedRounding>(n);
    CHECK(d.intersects(ref.as_interval<DoubleRounding>()));
    CHECK(e.intersects(ref.as_interval<ExtendedRounding>()));
    CHECK(e.width_double() <= 1e-12);
    CHECK(d.width_double() <= 1e-12);
  }
  CHECK(named_constant<DoubleRounding>("edge_check").contains(Sqrt2Num::root()));
  CHECK(named_constant<ExtendedRounding>("edge_check").contains(Sqrt2Num::root()));
  CHECK_THROWS_AS(named_constant<DoubleRounding>("cube"), std::invalid_argument);
}

TEST_CASE("named constants contain the frozen 40-digit values", "[agm]") {
  auto near = [](const ExtInterval& x, const char* v) {
    return std::abs((x.lo_rational() - parse_rational(v)).convert_to<double>()) < 1e-20;
  };
  CHECK(near(named_constant<ExtendedRounding>(ConstantName::altitude, 1e-40), "5.876872126501201970536"));
  CHECK(near(named_constant<ExtendedRounding>(ConstantName::face, 1e-40), "2.799574671369357201721"));
  CHECK(near(named_constant<ExtendedRounding>(ConstantName::face_dual, 1e-40), "12.85909619349117200715"));
  CHECK(near(named_constant<ExtendedRounding>(ConstantName::antiprism_hexagon, 1e-40), "2.340318754606268038403"));
  auto product = named_constant<ExtendedRounding>(ConstantName::face) *
                 named_constant<ExtendedRounding>(ConstantName::face_dual);
  CHECK(product.contains(Rational(36)));
}
