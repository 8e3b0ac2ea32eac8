#include "spinclab/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "spinclab/berger.hpp"
#include "spinclab/errors.hpp"
#include "spinclab/geometry.hpp"
#include "spinclab/homogeneous.hpp"
#include "spinclab/spinc.hpp"

namespace spinclab::report {

namespace {

using json = nlohmann::ordered_json;

double sig15(double v) { return round_sig15(v); }

json complex_pair(const std::complex<double>& z) {
  return json::array({sig15(z.real()), sig15(z.imag())});
}

Format effective_format(const RunConfig& cfg) {
  if (cfg.format) return *cfg.format;
  return cfg.command == Command::spectrum ? Format::csv : Format::json;
}

berger::Structure parse_structure(const std::string& s) {
  if (s == "canonical") return berger::Structure::canonical;
  if (s == "induced") return berger::Structure::induced;
  throw precondition_error("structure must be canonical or induced");
}

berger::Scan parse_scan(const std::string& s) {
  if (s == "confirmed") return berger::Scan::confirmed;
  if (s == "candidates") return berger::Scan::candidates;
  if (s == "confirmed-strict") return berger::Scan::confirmed_strict;
  throw precondition_error(
      "scan must be confirmed, candidates, or confirmed-strict");
}

// flat key/value rendering shared by the non-tabular commands
void write_table(const json& j, std::ostream& out, int indent = 0) {
  std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      write_table(value, out, indent + 2);
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const json& j, Format format, std::ostream& out) {
  if (format == Format::json)
    out << j.dump(2) << "\n";
  else
    write_table(j, out);
}

json describe_report(const RunConfig& cfg) {
  homogeneous::FrameModel m =
      homogeneous::build_frame_model({cfg.kappa, cfg.tau});
  homogeneous::RicciSpectrum ric = homogeneous::ricci_spectrum(m);
  geometry::ImmersionData imm = geometry::berger_immersion_data(
      m.params,
      cfg.paper_literal ? geometry::ShapeMode::paper_literal
                        : geometry::ShapeMode::corrected,
      true);

  json j;
  j["kappa"] = sig15(cfg.kappa);
  j["tau"] = sig15(cfg.tau);
  j["ricci_horizontal"] = sig15(ric.horizontal);
  j["ricci_vertical"] = sig15(ric.vertical);
  j["scalar"] = sig15(m.scalar);
  j["canonical_two_form"] =
      sig15(-(cfg.kappa - 4.0 * cfg.tau * cfg.tau));
  j["frame_residuals"] = {
      {"killing_field", sig15(homogeneous::killing_field_residual(m))},
      {"sasaki", sig15(homogeneous::sasaki_residual(m))},
  };
  json shape = json::array();
  for (int i = 0; i < 3; ++i) shape.push_back(sig15(imm.shape_operator(i, i)));
  j["immersion"] = {
      {"mean_curvature", sig15(imm.mean_curvature)},
      {"shape_diagonal", shape},
      {"trace_mismatch", sig15(imm.trace_mismatch)},
      {"shape_coefficient",
       cfg.paper_literal ? "paper-literal" : "corrected"},
  };
  return j;
}

json killing_report(const RunConfig& cfg) {
  homogeneous::FrameModel m =
      homogeneous::build_frame_model({cfg.kappa, cfg.tau});
  Eigen::Vector3d aux = spinc::canonical_aux(m.params);
  if (cfg.aux3) aux(2) = *cfg.aux3;
  double alpha = cfg.alpha.value_or(0.5 * cfg.tau);
  spinc::Connection conn = spinc::build_connection(m, aux);
  spinc::KillingSolution sol = spinc::killing_solve(conn, alpha);

  json j;
  j["kappa"] = sig15(cfg.kappa);
  j["tau"] = sig15(cfg.tau);
  j["aux3"] = sig15(aux(2));
  j["alpha"] = sig15(alpha);
  j["dimension"] = static_cast<int>(sol.basis.size());
  if (sol.basis.size() == 1) {
    j["xi_eigenvalue"] = complex_pair(sol.xi_eigenvalue);
    j["xi_residual"] = sig15(sol.xi_residual);
    Eigen::Matrix2cd d = spinc::dirac_matrix(conn);
    std::complex<double> rayleigh = sol.basis[0].dot(d * sol.basis[0]);
    j["dirac_eigenvalue"] = complex_pair(rayleigh);
  } else {
    j["xi_eigenvalue"] = nullptr;
    j["xi_residual"] = nullptr;
    j["dirac_eigenvalue"] = nullptr;
  }
  return j;
}

// identity checks; any failure here is a bug in the machinery, so the
// caller maps it to the internal-failure exit code
int verify_report(const RunConfig& cfg, Format format, std::ostream& out) {
  homogeneous::FrameModel m =
      homogeneous::build_frame_model({cfg.kappa, cfg.tau});
  spinc::Connection conn =
      spinc::build_connection(m, spinc::canonical_aux(m.params));
  double ricci_res = spinc::ricci_identity_residual(conn);
  double lich_res = spinc::lichnerowicz_residual(conn);
  spinc::KillingSolution sol = spinc::killing_solve(conn, 0.5 * cfg.tau);

  bool ok = ricci_res < 1e-12 && lich_res < 1e-12 &&
            sol.basis.size() == 1 &&
            std::abs(sol.xi_eigenvalue - std::complex<double>(0, -1)) < 1e-9;

  json j;
  j["kappa"] = sig15(cfg.kappa);
  j["tau"] = sig15(cfg.tau);
  j["ricci_residual"] = sig15(ricci_res);
  j["lichnerowicz_residual"] = sig15(lich_res);
  j["killing_dim"] = static_cast<int>(sol.basis.size());
  j["xi_eigenvalue"] = sol.basis.size() == 1
                           ? complex_pair(sol.xi_eigenvalue)
                           : json(nullptr);
  j["status"] = ok ? "ok" : "failed";
  emit(j, format, out);
  return ok ? 0 : 2;
}

json spectrum_rows(const RunConfig& cfg, berger::Structure s) {
  json rows = json::array();
  if (cfg.compare_paper) {
    for (const auto& r :
         berger::dirac_spectrum_compare(cfg.tau, s, cfg.k_max)) {
      json row;
      row["k"] = r.entry.k;
      row["p"] = r.entry.p;
      row["branch"] = r.entry.branch > 0 ? "+" : "-";
      row["value"] = sig15(r.entry.value);
      row["multiplicity"] = r.entry.multiplicity;
      row["certainty"] = r.entry.certainty == berger::Certainty::realized
                             ? "realized"
                             : "eigen_of_squared";
      row["reference"] = sig15(r.reference_value);
      row["discrepant"] = r.discrepant;
      rows.push_back(row);
    }
  } else {
    for (const auto& e : berger::dirac_spectrum(cfg.tau, s, cfg.k_max)) {
      json row;
      row["k"] = e.k;
      row["p"] = e.p;
      row["branch"] = e.branch > 0 ? "+" : "-";
      row["value"] = sig15(e.value);
      row["multiplicity"] = e.multiplicity;
      row["certainty"] = e.certainty == berger::Certainty::realized
                             ? "realized"
                             : "eigen_of_squared";
      rows.push_back(row);
    }
  }
  return rows;
}

void write_csv(const json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  if (!rows.empty())
    for (const auto& [key, value] : rows.front().items())
      columns.push_back(key);
  for (size_t i = 0; i < columns.size(); ++i)
    out << columns[i] << (i + 1 < columns.size() ? "," : "");
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < columns.size(); ++i) {
      const json& cell = row.at(columns[i]);
      if (cell.is_string())
        out << cell.get<std::string>();
      else if (cell.is_boolean())
        out << (cell.get<bool>() ? "true" : "false");
      else if (cell.is_number_integer())
        out << cell.get<long long>();
      else
        out << format_sig15(cell.get<double>());
      out << (i + 1 < columns.size() ? "," : "");
    }
    out << "\n";
  }
}

int spectrum_report(const RunConfig& cfg, Format format, std::ostream& out) {
  if (cfg.kappa != 4.0)
    throw precondition_error(
        "spectrum is computed at the kappa = 4 normalization");
  berger::Structure s = parse_structure(cfg.structure);
  json rows = spectrum_rows(cfg, s);
  if (format == Format::csv) {
    write_csv(rows, out);
  } else {
    json j;
    j["tau"] = sig15(cfg.tau);
    j["structure"] = cfg.structure;
    j["k_max"] = cfg.k_max;
    j["entries"] = rows;
    emit(j, format, out);
  }
  return 0;
}

json bounds_row(double tau, const RunConfig& cfg, berger::Structure s,
                berger::Scan scan) {
  geometry::ImmersionData imm =
      geometry::berger_immersion_data({cfg.kappa, tau});
  berger::FirstPositive fp =
      berger::first_positive_eigenvalue(tau, s, cfg.k_max, scan);

  geometry::HypersurfaceData hs;
  hs.n = 3;
  hs.mean_curvature = imm.mean_curvature;
  hs.killing_number = 0.0;
  hs.parallel_rank = 1;
  hs.lambda1 = fp.value;
  hs.constant_mean_curvature = true;
  geometry::BoundCheck low = geometry::lower_bound_check(hs);
  geometry::BoundCheck up = geometry::upper_bound_check(hs);

  json j;
  j["tau"] = sig15(tau);
  j["kappa"] = sig15(cfg.kappa);
  j["H"] = sig15(imm.mean_curvature);
  j["lambda1"] = sig15(fp.value);
  j["confirmed"] = fp.confirmed;
  j["lower_margin"] = sig15(low.margin);
  j["upper_margin"] = sig15(up.margin);
  j["equality_lower"] = low.equality;
  j["equality_upper"] = up.equality;
  return j;
}

int bounds_report(const RunConfig& cfg, Format format, std::ostream& out) {
  berger::Structure s = parse_structure(cfg.structure);
  berger::Scan scan = parse_scan(cfg.scan);
  if (cfg.tau_grid) {
    if (cfg.tau_grid->empty())
      throw precondition_error("tau grid must be non-empty");
    json rows = json::array();
    for (double tau : *cfg.tau_grid)
      rows.push_back(bounds_row(tau, cfg, s, scan));
    if (format == Format::csv)
      write_csv(rows, out);
    else
      emit(json{{"results", rows}}, format, out);
  } else {
    json row = bounds_row(cfg.tau, cfg, s, scan);
    if (format == Format::csv)
      write_csv(json::array({row}), out);
    else
      emit(row, format, out);
  }
  return 0;
}

json umbilic_report(const RunConfig& cfg) {
  geometry::SurfaceData s = geometry::make_umbilic_surface(
      {cfg.kappa, cfg.tau}, cfg.surface_H, cfg.f, cfg.theta);
  geometry::UmbilicResult u = geometry::umbilic_obstruction(s);

  json j;
  j["kappa"] = sig15(cfg.kappa);
  j["tau"] = sig15(cfg.tau);
  j["f"] = sig15(cfg.f);
  j["theta"] = sig15(cfg.theta);
  j["H"] = sig15(cfg.surface_H);
  j["dH"] = json::array({sig15(u.dH(0)), sig15(u.dH(1))});
  j["dH_closed_form"] = json::array(
      {sig15(u.dH_closed_form(0)), sig15(u.dH_closed_form(1))});
  j["residual"] = sig15(u.residual);
  j["constant_H_contradiction"] = u.constant_H_contradiction;
  return j;
}

}  // namespace

std::string format_sig15(double v) {
  if (v == 0.0) return "0";
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

double round_sig15(double v) {
  if (v == 0.0) return 0.0;
  return std::strtod(format_sig15(v).c_str(), nullptr);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Format format = effective_format(cfg);
    switch (cfg.command) {
      case Command::describe:
        emit(describe_report(cfg), format, out);
        return 0;
      case Command::killing_solve:
        emit(killing_report(cfg), format, out);
        return 0;
      case Command::verify:
        return verify_report(cfg, format, out);
      case Command::spectrum:
        return spectrum_report(cfg, format, out);
      case Command::bounds_check:
        return bounds_report(cfg, format, out);
      case Command::umbilic:
        emit(umbilic_report(cfg), format, out);
        return 0;
    }
    throw precondition_error("unknown command");
  } catch (const internal_error& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace spinclab::report
