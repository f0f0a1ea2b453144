// Extremal lengths of the four curve classes on the punctured octahedron and
// their lifts to the Bolza surface.

#include "elsys/catalog/curves.hpp"

#include <cstdio>
#include <string>

using namespace elsys;

int main() {
  using R = agm::DoubleRounding;
  std::printf("%-10s %-6s %-26s %-26s\n", "curve", "split", "EL on O", "EL on Bolza");
  for (auto k : catalog::all_kinds) {
    auto o = catalog::el_octahedron<R>(k);
    auto b = catalog::lift_to_bolza<R>(k);
    auto s = catalog::separation(k);
    char split[16], eo[64], eb[64];
    std::snprintf(split, sizeof split, "(%d,%d)", s.m, s.n);
    std::snprintf(eo, sizeof eo, "[%.12f, %.12f]", o.enclosure.lo_double(), o.enclosure.hi_double());
    std::snprintf(eb, sizeof eb, "[%.12f, %.12f]", b.enclosure.lo_double(), b.enclosure.hi_double());
    std::printf("%-10s %-6s %-26s %-26s", std::string(catalog::to_string(k)).c_str(), split, eo, eb);
    if (b.exact) std::printf("  = %s", b.exact->str().c_str());
    std::printf("\n");
  }

  auto sys = catalog::elsys_bolza<R>();
  std::printf("\nsystole %s, witnessed by %s (%s)\n", sys.value.str().c_str(), sys.witness.c_str(),
              sys.certified ? "certified" : "not certified");
  for (const auto& c : sys.comparisons)
    std::printf("  %-22s [%.10f, %.10f]%s\n", c.label.c_str(), c.enclosure.lo_double(), c.enclosure.hi_double(),
                c.strictly_above_systole ? "  > systole" : "");
}
