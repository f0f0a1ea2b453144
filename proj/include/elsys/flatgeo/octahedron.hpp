#pragma once

// Saddle connections on the unit-edge regular octahedron.
//
// Vertices are the six points +-e_x, +-e_y, +-e_z (ids 0..5, id ^ 1 is the
// antipode), faces the eight sign triples.  Positions in the plane are
// triangular-lattice coordinates (a, b) = a + b w, w = exp(i pi/3), so every
// developed vertex is a lattice point and all tests are integer arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace elsys::flatgeo {

using i64 = std::int64_t;

struct LatticeVec {
  i64 a = 0, b = 0;
  friend LatticeVec operator+(LatticeVec u, LatticeVec v) { return {u.a + v.a, u.b + v.b}; }
  friend LatticeVec operator-(LatticeVec u, LatticeVec v) { return {u.a - v.a, u.b - v.b}; }
  friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

// |a + b w|^2
inline i64 norm(LatticeVec v) { return v.a * v.a + v.a * v.b + v.b * v.b; }

// Sign agrees with the Euclidean cross product (the basis has positive
// orientation).
inline i64 cross(LatticeVec u, LatticeVec v) { return u.a * v.b - u.b * v.a; }

inline i64 dot2(LatticeVec u, LatticeVec v) { return 2 * u.a * v.a + 2 * u.b * v.b + u.a * v.b + u.b * v.a; }

inline LatticeVec rotate60(LatticeVec v) { return {-v.b, v.a + v.b}; }
inline LatticeVec reflect(LatticeVec v) { return {v.a + v.b, -v.b}; }

// Representative of the orbit under the 12 lattice symmetries with a >= b >= 0.
inline LatticeVec canonical(LatticeVec v) {
  for (int s = 0; s < 2; ++s) {
    for (int r = 0; r < 6; ++r) {
      if (v.a >= v.b && v.b >= 0) return v;
      v = rotate60(v);
    }
    v = reflect(v);
  }
  throw std::logic_error("canonical: no representative");
}

struct OctahedronComplex {
  static constexpr int n_vertices = 6;
  std::vector<std::array<int, 3>> faces;

  static OctahedronComplex regular() {
    OctahedronComplex o;
    for (int sx = 0; sx < 2; ++sx)
      for (int sy = 0; sy < 2; ++sy)
        for (int sz = 0; sz < 2; ++sz) o.faces.push_back({sx, 2 + sy, 4 + sz});
    return o;
  }

  static int opposite(int v) { return v ^ 1; }
  static bool adjacent(int u, int v) { return u != v && opposite(u) != v; }

  // Third vertex of the other face through edge (u, v), given the third vertex t of one face.
  static int across(int u, int v, int t) {
    if (!adjacent(u, v) || !adjacent(u, t) || !adjacent(v, t)) throw std::invalid_argument("across: not a face");
    return opposite(t);
  }

  // Faces containing v, in cyclic order.
  std::vector<std::array<int, 3>> star(int v) const {
    std::vector<std::array<int, 3>> out;
    for (const auto& f : faces)
      if (std::find(f.begin(), f.end(), v) != f.end()) out.push_back(f);
    return out;
  }

  // Every edge lies in exactly two faces.
  bool edge_gluing_ok() const {
    std::map<std::pair<int, int>, int> count;
    for (const auto& f : faces)
      for (int i = 0; i < 3; ++i) {
        int u = f[static_cast<std::size_t>(i)], v = f[static_cast<std::size_t>((i + 1) % 3)];
        ++count[{std::min(u, v), std::max(u, v)}];
      }
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
  }

  int euler_characteristic() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : faces)
      for (int i = 0; i < 3; ++i) {
        int u = f[static_cast<std::size_t>(i)], v = f[static_cast<std::size_t>((i + 1) % 3)];
        edges.insert({std::min(u, v), std::max(u, v)});
      }
    return n_vertices - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
  }
};

struct SaddleConnection {
  int start_vertex = 0;
  int end_vertex = 0;
  LatticeVec vector;  // canonical representative
  i64 length_sq = 0;

  bool adjacent() const { return OctahedronComplex::adjacent(start_vertex, end_vertex); }
  bool opposite() const { return OctahedronComplex::opposite(start_vertex) == end_vertex; }
  bool loop() const { return start_vertex == end_vertex; }
  double length() const { return std::sqrt(static_cast<double>(length_sq)); }

  friend auto operator<=>(const SaddleConnection&, const SaddleConnection&) = default;
};

inline std::string relation(const SaddleConnection& s) {
  return s.loop() ? "loop" : s.adjacent() ? "adjacent" : "opposite";
}

namespace detail {

struct DevVertex {
  LatticeVec p;
  int id;
};

// Open wedge (lo, hi) of directions at the origin crossing the developed edge
// (p, q) into the triangle on the far side; t is the vertex behind the edge.
struct Beam {
  LatticeVec lo, hi;
  DevVertex p, q, t;
};

inline bool strictly_inside(LatticeVec lo, LatticeVec hi, LatticeVec v) { return cross(lo, v) > 0 && cross(v, hi) > 0; }

// Squared distance from the origin to the segment [p, q], scaled by 4 norm(q - p)
// and compared against max_sq without rounding.
inline bool segment_within(LatticeVec p, LatticeVec q, i64 max_sq) {
  LatticeVec d = q - p;
  i64 dd = norm(d);
  i64 t = -dot2(p, d);  // 2 <p, d> scaled, projection parameter numerator over 2 dd
  if (t <= 0) return norm(p) <= max_sq;
  if (t >= 2 * dd) return norm(q) <= max_sq;
  // |p|^2 - <p,d>^2 / |d|^2 with <p,d> = -t/2
  // 4 dd |p|^2 - t^2 <= 4 dd max_sq
  __int128 lhs = static_cast<__int128>(4) * dd * norm(p) - static_cast<__int128>(t) * t;
  return lhs <= static_cast<__int128>(4) * dd * max_sq;
}

}  // namespace detail

// All saddle connections with length^2 <= max_len_sq, one per (unordered
// endpoints, canonical vector) class.
inline std::vector<SaddleConnection> saddle_connections_sq(const OctahedronComplex& oct, i64 max_len_sq) {
  if (max_len_sq <= 0) throw std::invalid_argument("saddle_connections: max_len must be positive");
  std::set<SaddleConnection> found;
  auto record = [&](int s, int e, LatticeVec v) {
    i64 n = norm(v);
    if (n > max_len_sq) return;
    found.insert({std::min(s, e), std::max(s, e), canonical(v), n});
  };
  for (int v = 0; v < OctahedronComplex::n_vertices; ++v) {
    for (const auto& f : oct.star(v)) {
      std::array<int, 2> other{};
      std::size_t k = 0;
      for (int w : f)
        if (w != v) other[k++] = w;
      detail::DevVertex O{{0, 0}, v}, P{{1, 0}, other[0]}, Q{{0, 1}, other[1]};
      record(v, P.id, P.p);
      record(v, Q.id, Q.p);
      std::vector<detail::Beam> stack{{P.p, Q.p, P, Q, O}};
      while (!stack.empty()) {
        detail::Beam b = stack.back();
        stack.pop_back();
        if (!detail::segment_within(b.p.p, b.q.p, max_len_sq)) continue;
        detail::DevVertex r{b.p.p + b.q.p - b.t.p, OctahedronComplex::across(b.p.id, b.q.id, b.t.id)};
        if (detail::strictly_inside(b.lo, b.hi, r.p)) {
          record(v, r.id, r.p);
          stack.push_back({b.lo, r.p, b.p, r, b.q});
          stack.push_back({r.p, b.hi, r, b.q, b.p});
        } else if (cross(b.lo, r.p) <= 0) {
          // r is on the lo side: every ray leaves through edge (r, q)
          stack.push_back({b.lo, b.hi, r, b.q, b.p});
        } else {
          stack.push_back({b.lo, b.hi, b.p, r, b.q});
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

inline std::vector<SaddleConnection> saddle_connections(const OctahedronComplex& oct, double max_len) {
  if (!(max_len > 0)) throw std::invalid_argument("saddle_connections: max_len must be positive");
  return saddle_connections_sq(oct, static_cast<i64>(std::floor(max_len * max_len + 1e-9)));
}

// Sorted distinct length^2 values, optionally restricted to one relation.
inline std::vector<i64> length_spectrum(const std::vector<SaddleConnection>& sc, const std::string& rel = "") {
  std::set<i64> out;
  for (const auto& s : sc)
    if (rel.empty() || relation(s) == rel) out.insert(s.length_sq);
  return {out.begin(), out.end()};
}

}  // namespace elsys::flatgeo
