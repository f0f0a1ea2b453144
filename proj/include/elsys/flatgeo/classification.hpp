#pragma once

// Which closed concatenations of at most three saddle connections on the
// octahedron are shorter than a threshold (2 sqrt3 by default, given as its
// square 12).  Only the length skeleton is checked here; the homotopy steps
// and the absence of simple closed geodesics are taken as inputs.

#include "elsys/flatgeo/octahedron.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace elsys::flatgeo {

namespace detail {

// n = c^2 s with s squarefree
inline std::pair<i64, i64> squarefree_split(i64 n) {
  i64 c = 1, s = 1;
  for (i64 p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      c *= p;
      n /= p * p;
    }
    if (n % p == 0) {
      s *= p;
      n /= p;
    }
  }
  return {c, s * n};
}

}  // namespace detail

// Sign of sum_i sqrt(terms_i) - sqrt(target).  Equality is decided exactly via
// linear independence of square roots of distinct squarefree integers; a
// nonzero difference is resolved in 100-digit floating point.
inline int compare_sqrt_sum(const std::vector<i64>& terms, i64 target) {
  std::map<i64, i64> lhs;
  for (i64 t : terms) {
    auto [c, s] = detail::squarefree_split(t);
    lhs[s] += c;
  }
  auto [ct, st] = detail::squarefree_split(target);
  if (lhs.size() == 1 && lhs.begin()->first == st && lhs.begin()->second == ct) return 0;
  if (target == 0 && terms.empty()) return 0;
  using F = boost::multiprecision::cpp_bin_float_100;
  F sum = 0;
  for (i64 t : terms) sum += sqrt(F(t));
  F d = sum - sqrt(F(target));
  return d > 0 ? 1 : -1;
}

struct FlatCandidate {
  std::string vertices;  // "loop", "adjacent pair", "opposite pair", "face triple"
  std::vector<i64> length_sq;
  std::string kind;
  double total() const {
    double s = 0;
    for (i64 l : length_sq) s += std::sqrt(static_cast<double>(l));
    return s;
  }
};

inline std::string classify_candidate(const std::string& vertices, const std::vector<i64>& length_sq,
                                      i64 threshold_sq = 12) {
  if (compare_sqrt_sum(length_sq, threshold_sq) >= 0) return "above threshold";
  bool unit = std::all_of(length_sq.begin(), length_sq.end(), [](i64 l) { return l == 1; });
  if (unit && vertices == "adjacent pair" && length_sq.size() == 2) return "edge curve";
  if (unit && vertices == "face triple" && length_sq.size() == 3) return "face curve";
  return "unexplained";
}

struct FlatClassification {
  i64 threshold_sq = 12;
  std::vector<FlatCandidate> below;
  std::size_t examined = 0;
  std::vector<std::string> assumptions;

  // true when every candidate below the threshold is an edge curve (total 2)
  // or a face curve (total 3)
  bool only_edge_and_face() const {
    for (const auto& c : below)
      if (c.kind != "edge curve" && c.kind != "face curve") return false;
    return true;
  }
  std::vector<double> totals() const {
    std::vector<double> t;
    for (const auto& c : below) t.push_back(c.total());
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
  }
};

inline FlatClassification flat_length_classification(i64 threshold_sq = 12) {
  if (threshold_sq <= 0 || threshold_sq > 12) throw std::invalid_argument("flat_length_classification: need 0 < L <= 2 sqrt3");
  FlatClassification out;
  out.threshold_sq = threshold_sq;
  out.assumptions = {"no simple closed geodesic on the octahedron avoids the vertices (cited result, not re-proved)",
                     "pulling a curve tight to a concatenation of saddle connections (homotopy step, not checked)"};
  auto sc = saddle_connections_sq(OctahedronComplex::regular(), threshold_sq);
  auto consider = [&](const std::string& vertices, std::vector<i64> ls) {
    ++out.examined;
    std::string kind = classify_candidate(vertices, ls, threshold_sq);
    if (kind != "above threshold") out.below.push_back({vertices, std::move(ls), kind});
  };
  for (i64 l : length_spectrum(sc, "loop")) consider("loop", {l});
  for (const char* rel : {"adjacent", "opposite"}) {
    auto spec = length_spectrum(sc, rel);
    for (std::size_t i = 0; i < spec.size(); ++i)
      for (std::size_t j = i; j < spec.size(); ++j) consider(std::string(rel) + " pair", {spec[i], spec[j]});
  }
  auto adj = length_spectrum(sc, "adjacent");
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i; j < adj.size(); ++j)
      for (std::size_t k = j; k < adj.size(); ++k) consider("face triple", {adj[i], adj[j], adj[k]});
  return out;
}

}  // namespace elsys::flatgeo
