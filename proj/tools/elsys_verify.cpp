// elsys_verify: certified checks of the octahedron and Bolza extremal lengths.
//
// Exit status 0 when every claim passes, 1 when some claim fails, 2 on usage
// or runtime errors.

#include "elsys/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cli = elsys::cli;

int main(int argc, char** argv) {
  CLI::App app{"Certified verification of extremal length systole computations"};
  app.require_subcommand(1);

  cli::GlobalOptions g;
  std::string precision = "double";
  app.add_flag("--json", g.json, "emit a JSON report");
  app.add_option("--tol", g.tol, "target width of interval enclosures")->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "double or extended")->check(CLI::IsMember({"double", "extended"}));

  auto* constants = app.add_subcommand("constants", "named constants and catalog values")->fallthrough();

  cli::MatrixOptions mo;
  int row = 0;
  auto* matrix = app.add_subcommand("matrix", "derivative matrix of the edge curves")->fallthrough();
  matrix->add_option("--row", row, "check a single row (1-12)")->check(CLI::Range(1, 12));
  matrix->add_flag("--latex", mo.latex, "print the matrix as LaTeX");

  cli::SpectrumOptions so;
  auto* spectrum = app.add_subcommand("spectrum", "saddle connection spectrum of the octahedron")->fallthrough();
  spectrum->add_option("--max-len", so.max_len, "length bound")->check(CLI::PositiveNumber);
  spectrum->add_option("--csv", so.csv, "write the saddle connections as CSV");

  cli::LandenOptions lo;
  auto* landen = app.add_subcommand("landen", "Landen identities at sampled moduli")->fallthrough();
  landen->add_option("--samples", lo.samples, "number of moduli")->check(CLI::PositiveNumber);
  landen->add_option("--seed", lo.seed, "sampling seed");

  cli::PrismOptions po;
  auto* prism = app.add_subcommand("prism", "crossing of x and 4 EL(L_x)")->fallthrough();
  prism->add_option("--lo", po.lo, "lower end of the bracket");
  prism->add_option("--hi", po.hi, "upper end of the bracket");
  prism->add_option("--tol", po.tol, "bracket width")->check(CLI::PositiveNumber);
  prism->add_option("--csv", po.csv, "write the sampled crossing diagnostics as CSV");

  cli::PlotOptions pl;
  auto* plot = app.add_subcommand("plot", "SVG of horizontal trajectories")->fallthrough();
  plot->add_option("--qd", pl.qd, "edge or face")->check(CLI::IsMember({"edge", "face"}));
  plot->add_option("--out", pl.out, "output file");

  auto* all = app.add_subcommand("verify-all", "run every check")->fallthrough();

  CLI11_PARSE(app, argc, argv);
  g.precision = precision == "extended" ? cli::Precision::extended : cli::Precision::binary64;

  try {
    cli::Report r;
    std::string text;
    if (constants->parsed()) {
      r = cli::cmd_constants(g);
    } else if (matrix->parsed()) {
      if (row) mo.row = row;
      r = cli::cmd_matrix(g, mo, &text);
    } else if (spectrum->parsed()) {
      r = cli::cmd_spectrum(g, so);
    } else if (landen->parsed()) {
      r = cli::cmd_landen(g, lo);
    } else if (prism->parsed()) {
      r = cli::cmd_prism(g, po);
    } else if (plot->parsed()) {
      r = cli::cmd_plot(g, pl);
    } else if (all->parsed()) {
      r = cli::cmd_verify_all(g);
    }
    if (g.json) {
      std::cout << cli::emit_json(r) << '\n';
    } else {
      std::cout << text;
      cli::print_text(std::cout, r, cli::use_color());
    }
    return r.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "elsys_verify: " << e.what() << '\n';
    return 2;
  }
}
