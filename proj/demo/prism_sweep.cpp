// 4 EL(L_x) against x on a grid, and the crossing with the diagonal.

#include "elsys/catalog/families.hpp"
#include "elsys/modulus/prism.hpp"

#include <cstdio>

using namespace elsys;

int main() {
  std::printf("%8s %14s %12s %8s\n", "x", "4 EL(L_x)", "error est", "levels");
  for (int i = 0; i <= 14; ++i) {
    double x = 2 + 1.4 * i / 14;
    auto r = modulus::quad_modulus(modulus::build_Lx(x), 1e-6);
    std::printf("%8.4f %14.8f %12.2e %8d\n", x, 4 * r.value, 4 * r.error_estimate, r.grid_levels);
  }
  auto c = modulus::prism_crossing(2, 3.4, 1e-4);
  std::printf("\nx_star = %.6f +- %.1e, bound %.6f\n", c.x_star, c.slack, c.bound);
  double r = catalog::prism_parameter_for(c.x_star);
  std::printf("prism parameter with face EL x_star: r = %.8f\n", r);
}
