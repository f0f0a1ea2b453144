#pragma once

// Marked polygons: four boundary vertices split the boundary into sides
// A, B, C, D (counterclockwise); the modulus is the extremal length of arcs
// joining A to C.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace elsys::modulus {

struct Point {
  double x = 0, y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

namespace detail {

inline double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool segments_cross(Point p1, Point p2, Point q1, Point q2) {
  double d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2), d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  auto on = [](Point a, Point b, Point p) {
    return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  };
  return on(q1, q2, p1) || on(q1, q2, p2) || on(p1, p2, q1) || on(p1, p2, q2);
}

}  // namespace detail

struct Quadrilateral {
  std::vector<Point> vertices;
  std::array<std::size_t, 4> marked{};

  std::size_t size() const { return vertices.size(); }
  Point vertex(std::size_t i) const { return vertices[i % vertices.size()]; }

  double signed_area() const {
    double a = 0;
    for (std::size_t i = 0; i < size(); ++i) a += vertex(i).x * vertex(i + 1).y - vertex(i + 1).x * vertex(i).y;
    return a / 2;
  }

  bool rectilinear() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (vertex(i).x != vertex(i + 1).x && vertex(i).y != vertex(i + 1).y) return false;
    return true;
  }

  bool convex() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (detail::cross(vertex(i), vertex(i + 1), vertex(i + 2)) <= 0) return false;
    return true;
  }

  // Reentrant (interior angle > pi) vertices.
  std::vector<std::size_t> reentrant() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (detail::cross(vertex(i + size() - 1), vertex(i), vertex(i + 1)) < 0) out.push_back(i);
    return out;
  }

  // Side (0 = A, 1 = B, 2 = C, 3 = D) containing edge i -> i+1.
  int side_of_edge(std::size_t i) const {
    const std::size_t n = size();
    for (std::size_t s = 0; s < 4; ++s) {
      std::size_t start = marked[s], len = (marked[(s + 1) % 4] + n - start) % n;
      if ((i + n - start) % n < len) return static_cast<int>(s);
    }
    throw std::logic_error("side_of_edge: invalid marking");
  }

  // The same polygon with the marking advanced one side (A <- B, ...).
  Quadrilateral rotated() const { return {vertices, {marked[1], marked[2], marked[3], marked[0]}}; }

  void validate() const {
    if (size() < 4) throw std::invalid_argument("Quadrilateral: need at least 4 vertices");
    // allow the marking to start anywhere in cyclic order
    std::array<std::size_t, 4> m = marked;
    std::size_t shift = 0;
    while (shift < 4 && !(m[0] < m[1] && m[1] < m[2] && m[2] < m[3])) {
      std::rotate(m.begin(), m.begin() + 1, m.end());
      ++shift;
    }
    if (shift == 4 || m[3] >= size()) throw std::invalid_argument("Quadrilateral: marked vertices must be distinct and cyclically increasing");
    if (!(signed_area() > 0)) throw std::invalid_argument("Quadrilateral: polygon must be counterclockwise");
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 2; j < size(); ++j) {
        if (i == 0 && j == size() - 1) continue;
        if (detail::segments_cross(vertex(i), vertex(i + 1), vertex(j), vertex(j + 1)))
          throw std::invalid_argument("Quadrilateral: polygon is not simple");
      }
  }

  bool contains(Point p) const {
    bool in = false;
    for (std::size_t i = 0, j = size() - 1; i < size(); j = i++) {
      Point a = vertices[i], b = vertices[j];
      if ((a.y > p.y) != (b.y > p.y) && p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) in = !in;
    }
    return in;
  }
};

inline Quadrilateral rectangle(double a, double b) {
  if (!(a > 0 && b > 0)) throw std::invalid_argument("rectangle: sides must be positive");
  // A = left side, C = right side: arcs cross the width a
  return {{{0, 0}, {a, 0}, {a, b}, {0, b}}, {3, 0, 1, 2}};
}

// The six-vertex polygon 0, x/3, x/3+i, x/6+i, x/6+i/2, i/2 with A the bottom
// side and C the two sides meeting at the reentrant corner.
inline Quadrilateral build_Lx(double x) {
  if (!(x > 0)) throw std::invalid_argument("build_Lx: x must be positive");
  return {{{0, 0}, {x / 3, 0}, {x / 3, 1}, {x / 6, 1}, {x / 6, 0.5}, {0, 0.5}}, {0, 1, 3, 5}};
}

}  // namespace elsys::modulus
