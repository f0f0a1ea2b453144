#pragma once

// Derivatives of the edge-curve extremal lengths under moving the punctures
// i, -1, -i of the octahedron, through the residue pairing.
//
// Each of the 12 edge curves is the image of the curve around [0,1] under
// one of 12 Moebius symmetries g; its differential is g* q with
//   q = (z + 1 + sqrt2)^2 / (z (1 - z^4)) dz^2.
// Row entries are 2 (Re, Im) of the residue at i, -1, -i in that order.

#include "elsys/exact/matrix.hpp"
#include "elsys/qdiff/rational_qd.hpp"

#include <array>
#include <string>
#include <vector>

namespace elsys::qdiff {

using exact::ExactMatrix;
using conformal::ExactMoebius;

// (z + 1 + sqrt2)^2 / (z (1 - z^4))
inline ExactQD edge_differential() {
  using P = exact::ExactPoly;
  P lin{ExactNum(1) + ExactNum::sqrt2(), ExactNum(1)};
  P den{ExactNum(0), ExactNum(1), ExactNum(0), ExactNum(0), ExactNum(0), ExactNum(-1)};
  return {lin * lin, den};
}

// The symmetry h(z) = (1 - z)/(1 + z) of the edge differential.
inline ExactMoebius edge_symmetry_h() { return {ExactNum(-1), ExactNum(1), ExactNum(1), ExactNum(1)}; }

struct EdgeMap {
  std::string label;
  ExactMoebius map;
};

inline std::vector<EdgeMap> edge_curve_maps() {
  const ExactNum i = ExactNum::i();
  const ExactNum one(1), zero(0);
  return {
      {"z", {one, zero, zero, one}},
      {"iz", {i, zero, zero, one}},
      {"-z", {-one, zero, zero, one}},
      {"-iz", {-i, zero, zero, one}},
      {"-(z-i)/(z+i)", {-one, i, one, i}},
      {"-i(z-i)/(z+i)", {-i, -one, one, i}},
      {"(z-i)/(z+i)", {one, -i, one, i}},
      {"i(z-i)/(z+i)", {i, one, one, i}},
      {"1/z", {zero, one, one, zero}},
      {"i/z", {zero, i, one, zero}},
      {"-1/z", {zero, -one, one, zero}},
      {"-i/z", {zero, -i, one, zero}},
  };
}

inline std::array<ExactNum, 3> gardiner_punctures() { return {ExactNum::i(), ExactNum(-1), -ExactNum::i()}; }

struct DerivativeMatrix {
  ExactMatrix matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

inline std::vector<ExactNum> gardiner_row(const ExactQD& q) {
  std::vector<ExactNum> row;
  for (const ExactNum& a : gardiner_punctures()) {
    ExactNum r = residue(q, a);
    row.push_back(ExactNum(2) * exact::re(r));
    row.push_back(ExactNum(2) * exact::im(r));
  }
  return row;
}

inline DerivativeMatrix gardiner_matrix() {
  const ExactQD q = edge_differential();
  DerivativeMatrix out{ExactMatrix(12, 6), {}, {"Re@i", "Im@i", "Re@-1", "Im@-1", "Re@-i", "Im@-i"}};
  auto maps = edge_curve_maps();
  for (std::size_t r = 0; r < maps.size(); ++r) {
    auto row = gardiner_row(pullback(q, maps[r].map));
    for (std::size_t c = 0; c < 6; ++c) out.matrix(r, c) = row[c];
    out.row_labels.push_back(maps[r].label);
  }
  return out;
}

// The published matrix, entries a + b sqrt2 as (a, b).
inline ExactMatrix reference_gardiner_matrix() {
  static constexpr int ab[12][6][2] = {
      {{-1, -1}, {-1, -1}, {-1, 0}, {0, 0}, {-1, -1}, {1, 1}},
      {{0, 0}, {-1, 0}, {-1, -1}, {-1, -1}, {0, 0}, {-3, -2}},
      {{1, 1}, {-1, -1}, {3, 2}, {0, 0}, {1, 1}, {1, 1}},
      {{0, 0}, {3, 2}, {-1, -1}, {1, 1}, {0, 0}, {1, 0}},
      {{0, 0}, {3, 2}, {-1, -1}, {1, 1}, {0, 0}, {1, 0}},
      {{-3, -2}, {0, 0}, {0, 0}, {-3, -2}, {1, 0}, {0, 0}},
      {{0, 0}, {-3, -2}, {1, 1}, {1, 1}, {0, 0}, {-1, 0}},
      {{3, 2}, {0, 0}, {0, 0}, {1, 0}, {-1, 0}, {0, 0}},
      {{-1, -1}, {1, 1}, {1, 0}, {0, 0}, {-1, -1}, {-1, -1}},
      {{0, 0}, {-3, -2}, {1, 1}, {1, 1}, {0, 0}, {-1, 0}},
      {{1, 1}, {1, 1}, {-3, -2}, {0, 0}, {1, 1}, {-1, -1}},
      {{0, 0}, {1, 0}, {1, 1}, {-1, -1}, {0, 0}, {3, 2}},
  };
  ExactMatrix m(12, 6);
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 6; ++c)
      m(r, c) = ExactNum(exact::Sqrt2Num(exact::Rational(ab[r][c][0]), exact::Rational(ab[r][c][1])));
  return m;
}

// Entry-wise agreement count between two matrices of equal shape.
inline std::size_t matching_entries(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) n += a.entries()[i] == b.entries()[i];
  return n;
}

// Finite poles of q among the candidates, each checked to be simple, plus a
// check that they exhaust the denominator.  Returns the sum of all residues
// including the one at infinity; it must vanish.
inline ExactNum residue_sum(const ExactQD& q, const std::vector<ExactNum>& candidates) {
  exact::ExactPoly rest = q.denominator();
  ExactNum sum = residue_at_infinity(q);
  for (const ExactNum& a : candidates) {
    if (!rest(a).is_zero()) continue;
    sum += residue(q, a);
    rest = exact::divmod(rest, exact::ExactPoly::linear_root(a)).first;
  }
  if (rest.degree() > 0) throw std::domain_error("residue_sum: denominator has poles outside the candidate set");
  return sum;
}

inline std::vector<ExactNum> octahedron_punctures() {
  return {ExactNum(0), ExactNum(1), ExactNum(-1), ExactNum::i(), -ExactNum::i()};
}

}  // namespace elsys::qdiff
