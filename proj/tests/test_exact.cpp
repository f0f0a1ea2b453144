#include "elsys/exact/exact_num.hpp"
#include "elsys/exact/matrix.hpp"
#include "elsys/exact/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace elsys::exact;

namespace {

ExactNum random_num(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> n(-span, span);
  std::uniform_int_distribution<int> d(1, 4);
  return {Rational(n(rng), d(rng)), Rational(n(rng), d(rng)), Rational(n(rng), d(rng)), Rational(n(rng), d(rng))};
}

Sqrt2Num random_real(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> n(-span, span);
  return {Rational(n(rng)), Rational(n(rng))};
}

const ExactNum s2 = ExactNum::sqrt2();
const ExactNum I = ExactNum::i();

}  // namespace

TEST_CASE("rational parsing and rounding", "[exact]") {
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-3e-2") == Rational(-3, 100));
  CHECK(parse_rational("7/21") == Rational(1, 3));
  CHECK(parse_rational("1.18e-14") == Rational(118, pow10(16)));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(from_double(0.1) != Rational(1, 10));
  CHECK(from_double(0.5) == Rational(1, 2));
  Rational third(1, 3);
  CHECK(from_double(to_double_down(third)) <= third);
  CHECK(from_double(to_double_up(third)) >= third);
  CHECK(to_decimal(Rational(2, 3), 3, false) == "0.666");
  CHECK(to_decimal(Rational(2, 3), 3, true) == "0.667");
  CHECK(to_decimal(Rational(-1, 8), 2, false) == "-0.13");
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
}

TEST_CASE("quadratic field elements", "[exact]") {
  Sqrt2Num x(Rational(1), Rational(1));
  CHECK(x * x.conjugate() == Sqrt2Num(-1));
  CHECK(Sqrt2Num(Rational(3), Rational(-2)).sign() == 1);  // 3 - 2sqrt2 > 0
  CHECK(Sqrt2Num(Rational(-3), Rational(2)).sign() == -1);
  CHECK(Sqrt3Num(Rational(2), Rational(-1)).sign() == 1);
  CHECK(Sqrt2Num(Rational(1), Rational(-1)) < Sqrt2Num(0));
  CHECK(Sqrt2Num(Rational(-1), Rational(-1)).str() == "-1-1*sqrt2");
  for (const char* s : {"3", "-1/2*sqrt2", "1+1*sqrt2", "-3-2*sqrt2", "5/3-7/2*sqrt2"})
    CHECK(Sqrt2Num::parse(s).str() == s);
}

TEST_CASE("field_arith examples", "[exact]") {
  CHECK(field_arith(ExactNum(1) + s2, s2 - ExactNum(1), Op::mul) == ExactNum(1));
  CHECK(field_arith(ExactNum(1), s2, Op::div) == ExactNum(Rational(0), Rational(1, 2), Rational(0), Rational(0)));
  CHECK(field_arith(ExactNum(1) + I, ExactNum(1) - I, Op::mul) == ExactNum(2));
  CHECK(field_arith(I, I, Op::add) == ExactNum(Rational(0), Rational(0), Rational(2), Rational(0)));
  CHECK_THROWS_AS(field_arith(ExactNum(1), ExactNum(0), Op::div), std::domain_error);
}

TEST_CASE("inverse and real/imaginary split on random elements", "[exact][property]") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    ExactNum x = random_num(rng);
    CHECK(x == re(x) + I * im(x));
    CHECK(x.conj().conj() == x);
    if (x.is_zero()) continue;
    CHECK(x * field_arith(ExactNum(1), x, Op::div) == ExactNum(1));
  }
}

TEST_CASE("poly_gcd examples", "[exact]") {
  ExactPoly z = ExactPoly::x();
  ExactPoly one = ExactPoly::constant(1);
  CHECK(poly_gcd(z * z - one, z - one) == z - one);
  CHECK(poly_gcd(z * z + one, z + one) == one);
  ExactPoly zi = ExactPoly::linear_root(I);
  ExactPoly f = zi * (z + ExactPoly::constant(ExactNum(1) + s2));
  CHECK(poly_gcd(f, zi) == zi);
  CHECK_THROWS_AS(poly_gcd(ExactPoly{}, ExactPoly{}), std::domain_error);
  CHECK(poly_gcd(ExactPoly{}, ExactPoly::constant(3) * zi) == zi);
}

TEST_CASE("poly_gcd divides both arguments", "[exact][property]") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> deg(0, 3);
  auto rand_poly = [&](int d) {
    std::vector<ExactNum> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_num(rng, 3));
    return ExactPoly(c);
  };
  for (int t = 0; t < 40; ++t) {
    ExactPoly common = rand_poly(deg(rng));
    ExactPoly p = common * rand_poly(deg(rng));
    ExactPoly q = common * rand_poly(deg(rng));
    if (p.is_zero() && q.is_zero()) continue;
    ExactPoly g = poly_gcd(p, q);
    CHECK(divmod(p, g).second.is_zero());
    CHECK(divmod(q, g).second.is_zero());
    if (!common.is_zero()) CHECK(g.degree() >= common.degree());
  }
}

TEST_CASE("poly evaluation and derivative", "[exact]") {
  ExactPoly z = ExactPoly::x();
  ExactPoly p = pow(z + ExactPoly::constant(ExactNum(1) + s2), 2);
  CHECK(p(-(ExactNum(1) + s2)).is_zero());
  CHECK(p.derivative() == ExactPoly::constant(2) * (z + ExactPoly::constant(ExactNum(1) + s2)));
  auto [q, r] = divmod(p, z);
  CHECK(q * z + r == p);
}

TEST_CASE("matrix_rank examples", "[exact]") {
  CHECK(matrix_rank(ExactMatrix::identity(6)) == 6);
  CHECK(matrix_rank(ExactMatrix(12, 6)) == 0);
  ExactMatrix m(3, 3, {ExactNum(1), s2, ExactNum(2), s2, ExactNum(2), ExactNum(2) * s2, ExactNum(0), ExactNum(1),
                       ExactNum(0)});
  CHECK(matrix_rank(m) == 2);  // row 2 = sqrt2 * row 1
  CHECK_THROWS_AS(ExactMatrix(2, 2, {ExactNum(1)}), std::invalid_argument);
}

TEST_CASE("matrix_rank is invariant under row operations", "[exact][property]") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int t = 0; t < 60; ++t) {
    std::size_t rows = static_cast<std::size_t>(dim(rng));
    std::size_t cols = static_cast<std::size_t>(dim(rng));
    ExactMatrix m(rows, cols);
    // low-rank mixtures appear often enough to exercise skipped columns
    std::size_t basis = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
    std::vector<std::vector<ExactNum>> gens(basis);
    for (auto& g : gens)
      for (std::size_t c = 0; c < cols; ++c) g.push_back(ExactNum(random_real(rng, 2)));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t b = 0; b < basis; ++b) {
        ExactNum coef(random_real(rng, 2));
        for (std::size_t c = 0; c < cols; ++c) m(r, c) += coef * gens[b][c];
      }
    std::size_t rank = matrix_rank(m);
    CHECK(rank <= std::min({rows, cols, basis}));

    ExactMatrix swapped = m;
    swapped.swap_rows(0, rows - 1);
    CHECK(matrix_rank(swapped) == rank);

    ExactMatrix scaled = m;
    ExactNum s(random_real(rng, 3));
    if (s.is_zero()) s = ExactNum(1) + s2;
    for (std::size_t c = 0; c < cols; ++c) scaled(0, c) *= s;
    CHECK(matrix_rank(scaled) == rank);
  }
}
