#include "elsys/modulus/prism.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

using namespace elsys::modulus;

namespace {

double interior_angle(const Quadrilateral& q, std::size_t i) {
  Point a = q.vertex(i + q.size() - 1), b = q.vertex(i), c = q.vertex(i + 1);
  double in = std::atan2(a.y - b.y, a.x - b.x), out = std::atan2(c.y - b.y, c.x - b.x);
  double ang = in - out;
  while (ang <= 0) ang += 2 * std::numbers::pi;
  return ang;
}

// Plus-shaped polygon invariant under the quarter turn that moves each marked
// side to the next, so its modulus is exactly 1.
Quadrilateral plus_shape() {
  return {{{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2}, {0, 2}, {0, 1}, {1, 1}}, {0, 3, 6, 9}};
}

Quadrilateral random_convex(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (;;) {
    Quadrilateral q{{{u(rng), u(rng)}, {2 + u(rng), u(rng)}, {2 + u(rng), 1 + u(rng)}, {u(rng), 1 + u(rng)}}, {0, 1, 2, 3}};
    if (q.convex()) return q;
  }
}

}  // namespace

TEST_CASE("build_Lx examples", "[modulus]") {
  auto q3 = build_Lx(3);
  std::vector<Point> v3{{0, 0}, {1, 0}, {1, 1}, {0.5, 1}, {0.5, 0.5}, {0, 0.5}};
  CHECK(q3.vertices == v3);
  auto q2 = build_Lx(2);
  CHECK(q2.vertices[1].x == Catch::Approx(2.0 / 3));
  CHECK(q2.vertices[3].x == Catch::Approx(1.0 / 3));
  CHECK(q2.vertices[4].y == 0.5);
  for (double x : {2.0, 2.6236, 3.4}) {
    auto q = build_Lx(x);
    CHECK(q.reentrant() == std::vector<std::size_t>{4});
    CHECK(interior_angle(q, 4) == Catch::Approx(1.5 * std::numbers::pi));
    CHECK(q.side_of_edge(0) == 0);
    CHECK(q.side_of_edge(3) == 2);
    CHECK(q.side_of_edge(4) == 2);
    CHECK_NOTHROW(q.validate());
  }
  CHECK_THROWS_AS(build_Lx(0), std::invalid_argument);
}

TEST_CASE("quad_modulus examples", "[modulus]") {
  CHECK(quad_modulus(rectangle(1, 1)).value == Catch::Approx(1.0).margin(1e-6));
  auto r = quad_modulus(rectangle(3, 1.5));
  CHECK(r.value == Catch::Approx(2.0).margin(1e-6));
  CHECK(r.converged);
  CHECK(r.error_estimate > 0);

  auto lx = quad_modulus(build_Lx(2.6236), 1e-5);
  CHECK(lx.converged);
  CHECK(std::abs(4 * lx.value - 2.6236) <= 2e-2);

  // quarter-turn symmetry
  CHECK(quad_modulus(plus_shape(), 1e-6).value == Catch::Approx(1.0).margin(1e-5));
}

TEST_CASE("quad_modulus input errors", "[modulus]") {
  Quadrilateral cw{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}, {0, 1, 2, 3}};
  CHECK_THROWS_AS(quad_modulus(cw), std::invalid_argument);
  Quadrilateral bow{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}, {0, 1, 2, 3}};
  CHECK_THROWS_AS(quad_modulus(bow), std::invalid_argument);
  Quadrilateral dup{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {0, 1, 1, 3}};
  CHECK_THROWS_AS(quad_modulus(dup), std::invalid_argument);
  Quadrilateral dart{{{0, 0}, {2, 0}, {1, 0.4}, {1, 2}}, {0, 1, 2, 3}};
  CHECK_THROWS_AS(quad_modulus(dart), std::invalid_argument);
  CHECK_THROWS_AS(quad_modulus(rectangle(1, 1), 0.0), std::invalid_argument);
}

TEST_CASE("unconverged results are flagged", "[modulus]") {
  SolverOptions o;
  o.max_levels = 2;
  auto r = quad_modulus(build_Lx(3), 1e-12, o);
  CHECK_FALSE(r.converged);
  CHECK(r.grid_levels == 3);
  CHECK(r.error_estimate > 1e-12);
}

TEST_CASE("rectangle exactness", "[modulus][property]") {
  for (double ratio : {0.1, 0.25, 0.5, 1.0, 1.7, 3.0, 6.5, 10.0}) {
    INFO(ratio);
    CHECK(std::abs(quad_modulus(rectangle(ratio, 1)).value - ratio) <= 1e-6);
    CHECK(std::abs(quad_modulus(rectangle(1, 1 / ratio)).value - ratio) <= 1e-6);
  }
}

TEST_CASE("duality on the polygon corpus", "[modulus][property]") {
  std::mt19937 rng(83);
  std::vector<Quadrilateral> corpus{rectangle(2, 1), rectangle(0.3, 1.1), build_Lx(2), build_Lx(2.6236), build_Lx(3),
                                    build_Lx(3.4), plus_shape()};
  // L-shape with A the short outer edge of one arm
  corpus.push_back({{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}, {1, 2, 4, 5}});
  corpus.push_back(random_convex(rng));
  corpus.push_back(random_convex(rng));
  REQUIRE(corpus.size() == 10);
  for (const auto& q : corpus) CHECK(std::abs(quad_modulus_dual_check(q, 1e-5) - 1) <= 2e-3);
}

TEST_CASE("EL(L_x) is strictly decreasing", "[modulus][property]") {
  double prev = 1e9;
  for (int i = 0; i < 15; ++i) {
    double x = 2 + 0.1 * i;
    auto r = quad_modulus(build_Lx(x), 1e-5);
    REQUIRE(r.converged);
    CHECK(r.value < prev);
    prev = r.value;
  }
}

TEST_CASE("refinement is Cauchy within the estimate", "[modulus][property]") {
  auto coarse = quad_modulus(build_Lx(3), 1e-4);
  auto fine = quad_modulus(build_Lx(3), 1e-7);
  REQUIRE(coarse.converged);
  CHECK(std::abs(coarse.value - fine.value) <= coarse.error_estimate);
  for (std::size_t i = 3; i < fine.levels.size(); ++i) CHECK(fine.levels[i].estimate < fine.levels[i - 1].estimate);
}

TEST_CASE("prism_crossing", "[modulus]") {
  auto c = prism_crossing();
  CHECK(c.x_star >= 2.55);
  CHECK(c.x_star <= 2.70);
  CHECK(std::abs(c.x_star - 2.6236) <= 2e-2);
  CHECK(c.bound < 2.799);
  CHECK(c.x_star < 2 * std::sqrt(3.0));
  CHECK(c.slack > 0);
  CHECK_THROWS_AS(prism_crossing(2.7, 3.4), std::runtime_error);
  CHECK_THROWS_AS(prism_crossing(2, 3.6), std::invalid_argument);
}
