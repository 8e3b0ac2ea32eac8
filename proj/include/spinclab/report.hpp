#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spinclab::report {

// Shortest decimal form of v that round-trips at 15 significant digits.
std::string format_sig15(double v);

// v rounded to 15 significant decimal digits (strtod of format_sig15).
double round_sig15(double v);

enum class Command {
  describe,
  killing_solve,
  verify,
  spectrum,
  bounds_check,
  umbilic,
};

enum class Format { json, csv, table };

struct RunConfig {
  Command command = Command::describe;
  std::optional<Format> format;  // default: csv for spectrum, json otherwise

  double kappa = 4.0;
  double tau = 0.5;

  // killing-solve
  std::optional<double> aux3;   // default: canonical vertical potential
  std::optional<double> alpha;  // default: tau/2

  // spectrum / bounds-check
  std::string structure = "induced";
  int k_max = 6;
  bool compare_paper = false;
  std::string scan = "confirmed";
  std::optional<std::vector<double>> tau_grid;  // bounds-check sweep

  // describe: report the reference shape coefficient instead
  bool paper_literal = false;

  // umbilic
  double f = 0.0;
  double theta = 0.0;
  double surface_H = 1.0;
};

// Executes the command, writing the report to out and diagnostics to err.
// Returns 0 on success, 1 on a precondition failure, 2 on an internal
// invariant failure.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace spinclab::report
