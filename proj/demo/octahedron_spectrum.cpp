// Saddle connections of the unit equilateral octahedron up to a length bound
// given on the command line (default 5).

#include "elsys/flatgeo/classification.hpp"

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <map>

using namespace elsys::flatgeo;

int main(int argc, char** argv) {
  double max_len = argc > 1 ? std::atof(argv[1]) : 5.0;
  auto oct = OctahedronComplex::regular();
  auto sc = saddle_connections(oct, max_len);

  std::map<std::pair<i64, std::string>, int> count;
  for (const auto& s : sc) ++count[{s.length_sq, relation(s)}];
  std::printf("%zu saddle connections of length <= %g\n", sc.size(), max_len);
  std::printf("%8s %10s %10s %6s\n", "len^2", "length", "relation", "count");
  for (const auto& [key, n] : count)
    std::printf("%8lld %10.6f %10s %6d\n", static_cast<long long>(key.first), std::sqrt(double(key.first)),
                key.second.c_str(), n);

  auto cls = flat_length_classification();
  std::printf("\nclosed concatenations below 2sqrt3:\n");
  for (const auto& c : cls.below) std::printf("  %-12s total %.6f  %s\n", c.vertices.c_str(), c.total(), c.kind.c_str());
  std::printf("examined %zu candidates\n", cls.examined);
}
