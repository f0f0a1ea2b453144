#pragma once

// SVG rendering of horizontal trajectories.

#include "elsys/qdiff/trajectory.hpp"

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace elsys::cli {

struct PlotStats {
  std::size_t streamlines = 0;
  std::size_t points = 0;
};

inline PlotStats write_trajectory_svg(std::ostream& os, const qdiff::ComplexQD& q, const qdiff::Window& w,
                                      int seeds_per_side = 14, int size_px = 640, double step = 0.01) {
  PlotStats st;
  const double sx = size_px / (w.xmax - w.xmin), sy = size_px / (w.ymax - w.ymin);
  auto px = [&](qdiff::cplx z) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", (z.real() - w.xmin) * sx, (w.ymax - z.imag()) * sy);
    return std::string(buf);
  };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\"" << size_px
     << "\" viewBox=\"0 0 " << size_px << " " << size_px << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"0.8\">\n";
  for (int i = 0; i < seeds_per_side; ++i)
    for (int j = 0; j < seeds_per_side; ++j) {
      qdiff::cplx seed(w.xmin + (i + 0.5) * (w.xmax - w.xmin) / seeds_per_side,
                       w.ymin + (j + 0.5) * (w.ymax - w.ymin) / seeds_per_side);
      auto line = qdiff::streamline(q, seed, w, step, 1500);
      if (line.size() < 2) continue;
      ++st.streamlines;
      st.points += line.size();
      os << "<polyline points=\"";
      for (std::size_t k = 0; k < line.size(); k += 2) os << px(line[k]) << ' ';
      os << px(line.back()) << "\"/>\n";
    }
  os << "</g>\n<g fill=\"#c0392b\">\n";
  for (const auto& c : qdiff::critical_points(q)) {
    if (c.real() < w.xmin || c.real() > w.xmax || c.imag() < w.ymin || c.imag() > w.ymax) continue;
    auto p = px(c);
    auto comma = p.find(',');
    os << "<circle cx=\"" << p.substr(0, comma) << "\" cy=\"" << p.substr(comma + 1) << "\" r=\"3\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return st;
}

}  // namespace elsys::cli
