#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinclab/report.hpp"

namespace {

using spinclab::report::Command;
using spinclab::report::Format;
using spinclab::report::RunConfig;

void add_model_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--kappa", cfg.kappa, "base curvature of the fibration");
  cmd->add_option("--tau", cfg.tau, "bundle curvature (tau != 0)");
}

void add_format_flag(CLI::App* cmd, std::optional<Format>& slot) {
  static const std::map<std::string, Format> names{
      {"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
  cmd->add_option("--format", slot, "output format")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spinor calculus laboratory for homogeneous 3-manifold fibrations"};
  app.require_subcommand(1);

  RunConfig cfg;

  CLI::App* describe = app.add_subcommand(
      "describe", "frame model curvature and immersion data");
  add_model_flags(describe, cfg);
  add_format_flag(describe, cfg.format);
  describe->add_flag("--paper-literal", cfg.paper_literal,
                     "use the reference shape coefficient");
  describe->callback([&] { cfg.command = Command::describe; });

  CLI::App* killing = app.add_subcommand(
      "killing-solve", "invariant Killing spinor solver");
  add_model_flags(killing, cfg);
  add_format_flag(killing, cfg.format);
  double aux3 = 0.0, alpha = 0.0;
  CLI::Option* aux3_opt = killing->add_option(
      "--aux3", aux3, "vertical auxiliary potential (default canonical)");
  CLI::Option* alpha_opt = killing->add_option(
      "--alpha", alpha, "Killing constant (default tau/2)");
  killing->callback([&] {
    cfg.command = Command::killing_solve;
    if (aux3_opt->count() > 0) cfg.aux3 = aux3;
    if (alpha_opt->count() > 0) cfg.alpha = alpha;
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "curvature and Lichnerowicz identity checks");
  add_model_flags(verify, cfg);
  add_format_flag(verify, cfg.format);
  verify->callback([&] { cfg.command = Command::verify; });

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Berger-sphere Dirac spectrum candidates");
  spectrum->add_option("--tau", cfg.tau, "bundle curvature, 0 < |tau| < 1");
  spectrum->add_option("--structure", cfg.structure,
                       "canonical or induced");
  spectrum->add_option("--kmax", cfg.k_max, "largest polynomial degree");
  spectrum->add_flag("--compare-paper", cfg.compare_paper,
                     "emit the reference display formula side by side");
  add_format_flag(spectrum, cfg.format);
  spectrum->callback([&] { cfg.command = Command::spectrum; });

  CLI::App* bounds = app.add_subcommand(
      "bounds-check", "first-eigenvalue bounds with equality flags");
  add_model_flags(bounds, cfg);
  bounds->add_option("--kmax", cfg.k_max, "largest polynomial degree");
  bounds->add_option("--structure", cfg.structure,
                     "canonical or induced");
  bounds->add_option("--scan", cfg.scan,
                     "confirmed, candidates, or confirmed-strict");
  std::vector<double> grid;
  CLI::Option* grid_opt =
      bounds->add_option("--tau-grid", grid, "comma-separated tau sweep")
          ->delimiter(',');
  add_format_flag(bounds, cfg.format);
  bounds->callback([&] {
    cfg.command = Command::bounds_check;
    if (grid_opt->count() > 0) cfg.tau_grid = grid;
  });

  CLI::App* umbilic = app.add_subcommand(
      "umbilic", "totally umbilic surface obstruction solve");
  add_model_flags(umbilic, cfg);
  umbilic->add_option("--f", cfg.f, "vertical component of the normal");
  umbilic->add_option("--theta", cfg.theta, "direction of the tangent part");
  umbilic->add_option("--H", cfg.surface_H, "assumed mean curvature");
  add_format_flag(umbilic, cfg.format);
  umbilic->callback([&] { cfg.command = Command::umbilic; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  return spinclab::report::run(cfg, std::cout, std::cerr);
}
