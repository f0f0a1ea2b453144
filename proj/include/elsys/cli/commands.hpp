#pragma once

// Subcommands of elsys_verify.  Each returns a Report; printing and exit
// status are left to the caller.

#include "elsys/agm/constants.hpp"
#include "elsys/agm/landen.hpp"
#include "elsys/catalog/classic.hpp"
#include "elsys/catalog/families.hpp"
#include "elsys/cli/report.hpp"
#include "elsys/cli/svg.hpp"
#include "elsys/exact/matrix.hpp"
#include "elsys/flatgeo/classification.hpp"
#include "elsys/flatgeo/torus.hpp"
#include "elsys/modulus/prism.hpp"
#include "elsys/qdiff/gardiner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

namespace elsys::cli {

enum class Precision { binary64, extended };

struct GlobalOptions {
  bool json = false;
  double tol = 1e-12;
  Precision precision = Precision::binary64;
};

namespace detail {

inline Report timed(const std::string& command, const std::function<void(Report&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Report r{command, {}, 0};
  body(r);
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string fmt(double x, int digits = 10) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

template <class R>
void constants_claims(Report& r, double tol) {
  using I = agm::BasicInterval<R>;
  using agm::ConstantName;
  struct Item {
    ConstantName name;
    const char* locator;
  };
  const Item items[] = {{ConstantName::altitude, "altitude curve, 4K(u)/K'(u)"},
                        {ConstantName::face, "face curve, 6K(v)/K'(v)"},
                        {ConstantName::face_dual, "dual of the face curve, 6K'(v)/K(v)"},
                        {ConstantName::antiprism_hexagon, "hexagon curve of the antiprism, 4K/K'(2-sqrt3)"}};
  for (const auto& it : items) {
    I v = agm::named_constant<R>(it.name, tol);
    auto ref = agm::reference_interval(it.name);
    bool ok = v.intersects(ref.template as_interval<R>()) && v.width_double() <= tol;
    r.claims.push_back({std::string(agm::to_string(it.name)), it.locator, enclosure_of(v),
                        std::string(ref.center) + " +- " + std::string(ref.radius) + ", width <= " + fmt(tol, 3), ok});
  }
  I res = catalog::edge_residual<R>(tol);
  bool edge_ok = res.contains_zero() && std::max(std::abs(res.lo_double()), std::abs(res.hi_double())) <= 1e-12;
  r.claims.push_back({"edge_identity", "edge curve, K'/K(sqrt2-1) = sqrt2", enclosure_of(res), "|residual| <= 1e-12",
                      edge_ok});

  auto bb = catalog::el_octahedron<R>(catalog::CurveKind::baseball, tol);
  r.claims.push_back({"el_baseball", "baseball curve on the octahedron",
                      bb.exact ? canonical_string(*bb.exact) : value_text(enclosure_of(bb.enclosure)), "4+0*sqrt2",
                      bb.exact && *bb.exact == exact::Sqrt2Num(4)});
  auto edge = catalog::el_octahedron<R>(catalog::CurveKind::edge, tol);
  exact::Sqrt2Num two_root2(exact::Rational(0), exact::Rational(2));
  r.claims.push_back({"el_edge", "edge curve on the octahedron",
                      edge.exact ? canonical_string(*edge.exact) : value_text(enclosure_of(edge.enclosure)),
                      canonical_string(two_root2), edge.exact && *edge.exact == two_root2});
  auto alt = catalog::el_octahedron<R>(catalog::CurveKind::altitude, tol);
  r.claims.push_back({"el_altitude_pipeline", "altitude curve through the quotient pipeline",
                      enclosure_of(alt.enclosure), "meets the altitude interval",
                      alt.enclosure.intersects(agm::reference_interval(ConstantName::altitude).template as_interval<R>())});
  auto face = catalog::el_octahedron<R>(catalog::CurveKind::face, tol);
  r.claims.push_back({"el_face_pipeline", "face curve through the cube map", enclosure_of(face.enclosure),
                      "meets the face interval",
                      face.enclosure.intersects(agm::reference_interval(ConstantName::face).template as_interval<R>())});

  auto bolza = catalog::elsys_bolza<R>(tol);
  r.claims.push_back({"bolza_systole", "smallest extremal length over curves on the Bolza surface, witnessed by edge lifts",
                      canonical_string(bolza.value), "0+1*sqrt2", bolza.certified});
  r.claims.push_back({"bolza_runner_up", "second smallest computed lift", enclosure_of(bolza.runner_up), "contains 2",
                      bolza.runner_up.contains(exact::Rational(2))});
  auto face_lift = catalog::lift_to_bolza<R>(catalog::CurveKind::face, tol);
  r.claims.push_back({"face_lift", "lift of the face curve, 12K(v)/K'(v)", enclosure_of(face_lift.enclosure),
                      "> 5.599148", face_lift.enclosure.lo_double() > 5.599148});
  r.claims.push_back({"face_below_edge", "face curve shorter than edge curve on the octahedron",
                      enclosure_of(face.enclosure), "< 2.799575 < 2sqrt2",
                      face.enclosure.hi_double() < 2.799575 && bolza.face_below_edge});

  I rr = I(2) + agm::sqrt_of<R>(3);
  I anti = catalog::el_antiprism_face<R>(rr, tol);
  r.claims.push_back({"antiprism_face_at_2+sqrt3", "antiprism face curve at r = 2+sqrt3 equals the octahedron face curve",
                      enclosure_of(anti), "meets el_face_pipeline", anti.intersects(face.enclosure)});
  I minsky = face.enclosure * agm::named_constant<R>(ConstantName::face_dual, tol);
  r.claims.push_back({"face_product", "face curve times its dual", enclosure_of(minsky), "contains 36",
                      minsky.contains(exact::Rational(36))});

  for (const auto& c : catalog::classic_constants())
    r.claims.push_back({"classic_" + c.id, c.description, canonical_string(c.value()) + " = " + c.derivation(),
                        canonical_string(c.target), c.pass()});
}

}  // namespace detail

inline Report cmd_constants(const GlobalOptions& g) {
  return detail::timed("constants", [&](Report& r) {
    if (g.precision == Precision::extended) {
      detail::constants_claims<agm::ExtendedRounding>(r, g.tol);
    } else {
      detail::constants_claims<agm::DoubleRounding>(r, g.tol);
    }
  });
}

struct MatrixOptions {
  std::optional<int> row;  // 1-based
  bool latex = false;
};

inline std::string matrix_text(const qdiff::DerivativeMatrix& d, bool latex) {
  std::ostringstream os;
  if (latex) os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < d.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < d.matrix.cols(); ++j) {
      std::string e = canonical_string(d.matrix(i, j).re());
      if (latex) {
        os << (j ? " & " : "") << e;
      } else {
        os << (j ? "  " : "") << e;
      }
    }
    os << (latex ? " \\\\\n" : "\n");
  }
  if (latex) os << "\\end{pmatrix}\n";
  return os.str();
}

inline Report cmd_matrix(const GlobalOptions&, const MatrixOptions& mo, std::string* text = nullptr) {
  return detail::timed("matrix", [&](Report& r) {
    auto d = qdiff::gardiner_matrix();
    auto ref = qdiff::reference_gardiner_matrix();
    std::size_t match = qdiff::matching_entries(d.matrix, ref);
    std::size_t rank = exact::matrix_rank(d.matrix);
    const char* loc = "derivative matrix of the edge-curve extremal lengths";
    r.claims.push_back({"matrix_entries", loc, std::to_string(match) + "/72", "72/72", match == 72});
    r.claims.push_back({"matrix_rank", loc, std::to_string(rank), "6", rank == 6});
    auto q = qdiff::edge_differential();
    r.claims.push_back({"h_invariance", "edge differential is invariant under h(z) = (1-z)/(1+z)",
                        qdiff::pullback(q, qdiff::edge_symmetry_h()) == q ? "h*q = q" : "h*q != q", "h*q = q",
                        qdiff::pullback(q, qdiff::edge_symmetry_h()) == q});
    std::size_t zero = 0;
    for (const auto& m : qdiff::edge_curve_maps())
      zero += qdiff::residue_sum(qdiff::pullback(q, m.map), qdiff::octahedron_punctures()).is_zero();
    r.claims.push_back({"residue_sums", "residues of each pulled-back differential sum to zero",
                        std::to_string(zero) + "/12", "12/12", zero == 12});
    if (mo.row) {
      int i = *mo.row;
      if (i < 1 || i > 12) throw std::invalid_argument("matrix: --row must be in 1..12");
      auto row = d.matrix.row(static_cast<std::size_t>(i - 1));
      auto rrow = ref.row(static_cast<std::size_t>(i - 1));
      std::string got, want;
      for (std::size_t j = 0; j < row.size(); ++j) {
        got += (j ? " " : "") + canonical_string(row[j].re());
        want += (j ? " " : "") + canonical_string(rrow[j].re());
      }
      r.claims.push_back({"row_" + std::to_string(i), "row for the curve " + d.row_labels[static_cast<std::size_t>(i - 1)],
                          got, want, row == rrow});
    }
    if (text) *text = matrix_text(d, mo.latex);
  });
}

struct SpectrumOptions {
  double max_len = 4;
  std::string csv;  // path, empty for none
};

inline std::string length_text(flatgeo::i64 l2) {
  auto r = static_cast<flatgeo::i64>(std::llround(std::sqrt(static_cast<double>(l2))));
  return r * r == l2 ? std::to_string(r) : "sqrt" + std::to_string(l2);
}

inline Report cmd_spectrum(const GlobalOptions&, const SpectrumOptions& so) {
  return detail::timed("spectrum", [&](Report& r) {
    using flatgeo::i64;
    auto oct = flatgeo::OctahedronComplex::regular();
    auto sc = flatgeo::saddle_connections(oct, so.max_len);
    auto adj = flatgeo::length_spectrum(sc, "adjacent");
    auto opp = flatgeo::length_spectrum(sc, "opposite");
    auto cls = flatgeo::flat_length_classification();
    auto join = [](const std::vector<i64>& v) {
      std::string s;
      for (i64 x : v) s += (s.empty() ? "" : ", ") + length_text(x);
      return s;
    };
    const char* loc = "saddle connections of the unit octahedron";
    r.claims.push_back({"adjacent_spectrum", loc, join(adj), "starts 1, sqrt7",
                        adj.size() >= 2 && adj[0] == 1 && adj[1] == 7});
    r.claims.push_back({"opposite_spectrum", loc, join(opp), "starts sqrt3", !opp.empty() && opp[0] == 3});
    // lengths of saddle connections together with the closed curves below 2 sqrt3
    auto spectrum = flatgeo::length_spectrum(sc);
    std::set<i64> all(spectrum.begin(), spectrum.end());
    std::vector<i64> from_sc(all.begin(), all.end());
    std::string totals;
    std::set<i64> closed_sq;
    for (double t : cls.totals()) {
      auto s = static_cast<i64>(std::llround(t * t));
      closed_sq.insert(s);
      totals += (totals.empty() ? "" : ", ") + length_text(s);
    }
    std::set<i64> combined = all;
    combined.insert(closed_sq.begin(), closed_sq.end());
    bool has = true;
    for (i64 x : {1, 3, 4, 7, 9})
      if (static_cast<double>(x) <= so.max_len * so.max_len) has = has && combined.count(x) > 0;
    r.claims.push_back({"lengths", "saddle connection lengths and closed-curve lengths up to max-len",
                        join(from_sc) + "; closed curves " + totals, "includes 1, sqrt3, 2, sqrt7, 3 up to max-len",
                        has});
    r.claims.push_back({"below_2sqrt3", "closed concatenations shorter than 2sqrt3 are edge or face curves", totals,
                        "2, 3", cls.only_edge_and_face() && closed_sq == std::set<i64>{4, 9}});
    auto hex = flatgeo::torus_systolic_ratio_exact(exact::Rational(1, 2), exact::Rational(3, 4));
    r.claims.push_back({"hexagonal_torus", "systolic ratio of the hexagonal torus",
                        "ratio^2 = " + exact::to_string(hex.ratio_sq()), "4/3 (ratio 2/sqrt3)",
                        hex.ratio_sq() == exact::Rational(4, 3)});
    if (!so.csv.empty()) {
      std::ofstream f(so.csv);
      if (!f) throw std::runtime_error("spectrum: cannot write " + so.csv);
      f << "start,end,a,b,length_sq\n";
      for (const auto& s : sc)
        f << s.start_vertex << ',' << s.end_vertex << ',' << s.vector.a << ',' << s.vector.b << ',' << s.length_sq
          << '\n';
    }
  });
}

struct LandenOptions {
  int samples = 100;
  unsigned seed = 20240601;
};

// log-uniform k in (1e-3, 1 - 1e-3) from a fixed mt19937 stream
inline std::vector<double> landen_samples(int n, unsigned seed) {
  std::mt19937 rng(seed);
  const double a = std::log(1e-3), b = std::log(1 - 1e-3);
  std::vector<double> ks;
  for (int i = 0; i < n; ++i) {
    double u = (static_cast<double>(rng()) + 0.5) / 4294967296.0;
    ks.push_back(std::exp(a + u * (b - a)));
  }
  return ks;
}

inline Report cmd_landen(const GlobalOptions&, const LandenOptions& lo) {
  if (lo.samples < 1) throw std::invalid_argument("landen: --samples must be positive");
  return detail::timed("landen", [&](Report& r) {
    int pass = 0;
    double worst = 0;
    for (double k : landen_samples(lo.samples, lo.seed)) {
      auto rep = agm::landen_check(k, 1e-10);
      pass += rep.pass;
      for (const auto& x : rep.residual) worst = std::max(worst, x.width_double());
    }
    std::string n = std::to_string(lo.samples);
    r.claims.push_back({"landen_identities", "Landen identities against quadrature at log-uniform k",
                        std::to_string(pass) + "/" + n, n + "/" + n, pass == lo.samples});
    r.claims.push_back({"landen_width", "residual enclosure widths", "max width " + detail::fmt(worst, 3), "<= 1e-10",
                        worst <= 1e-10});
  });
}

struct PrismOptions {
  double lo = 2.0, hi = 3.4, tol = 1e-3;
  std::string csv;
};

inline Report cmd_prism(const GlobalOptions&, const PrismOptions& po) {
  return detail::timed("prism", [&](Report& r) {
    auto c = modulus::prism_crossing(po.lo, po.hi, po.tol);
    const char* loc = "crossing of x and 4 EL(L_x) for the prism family";
    r.claims.push_back({"x_star", loc, detail::fmt(c.x_star, 8) + " +- " + detail::fmt(c.slack, 3), "2.6236 +- 2e-2",
                        c.converged && std::abs(c.x_star - 2.6236) <= 2e-2});
    auto face = catalog::el_octahedron<agm::DoubleRounding>(catalog::CurveKind::face);
    r.claims.push_back({"prism_bound", "upper bound for the prism systoles below the octahedron face value",
                        detail::fmt(c.bound, 8), "< 2.799 < " + detail::fmt(face.enclosure.lo_double(), 10),
                        c.bound < 2.799 && 2.799 < face.enclosure.lo_double()});
    r.claims.push_back({"below_flat_bound", "x_star below the flat bound 2sqrt3", detail::fmt(c.x_star, 8),
                        "< 2sqrt3", c.x_star < 2 * std::sqrt(3.0)});
    double rp = catalog::prism_parameter_for(c.x_star);
    auto closed = catalog::el_prism_face(rp);
    auto pipe = catalog::el_prism_pipeline(agm::Interval::point(rp));
    r.claims.push_back({"prism_parameter", "prism with face-curve extremal length x_star, closed form against cube map",
                        "r = " + detail::fmt(rp, 10), "closed form meets pipeline", closed.intersects(pipe)});
    if (!po.csv.empty()) {
      std::ofstream f(po.csv);
      if (!f) throw std::runtime_error("prism: cannot write " + po.csv);
      f << "x,four_el,error_estimate\n";
      f.precision(12);
      for (const auto& s : c.samples) f << s.x << ',' << s.four_el << ',' << s.error_estimate << '\n';
    }
  });
}

struct PlotOptions {
  std::string qd = "edge";
  std::string out = "trajectories.svg";
};

inline Report cmd_plot(const GlobalOptions&, const PlotOptions& po) {
  return detail::timed("plot", [&](Report& r) {
    qdiff::ComplexQD q = po.qd == "edge"   ? qdiff::to_complex(qdiff::edge_differential())
                         : po.qd == "face" ? qdiff::face_differential()
                                           : throw std::invalid_argument("plot: --qd must be edge or face");
    qdiff::Window w = po.qd == "edge" ? qdiff::Window{-2, 2, -2, 2} : qdiff::Window{-4.5, 4.5, -4.5, 4.5};
    std::ofstream f(po.out);
    if (!f) throw std::runtime_error("plot: cannot write " + po.out);
    auto st = write_trajectory_svg(f, q, w);
    r.claims.push_back({"svg_" + po.qd, "horizontal trajectories of the " + po.qd + " differential",
                        std::to_string(st.streamlines) + " streamlines to " + po.out, "> 0 streamlines",
                        st.streamlines > 0 && f.good()});
  });
}

inline Report cmd_verify_all(const GlobalOptions& g) {
  return detail::timed("verify-all", [&](Report& r) {
    for (const Report& sub : {cmd_constants(g), cmd_matrix(g, {}), cmd_spectrum(g, {}), cmd_landen(g, {}),
                              cmd_prism(g, {})})
      for (Claim c : sub.claims) {
        c.id = sub.command + "." + c.id;
        r.claims.push_back(std::move(c));
      }
  });
}

}  // namespace elsys::cli
