// crosscap: experiments on nonorientable hyperbolic surfaces.
//
// Subcommands: collar, markoff, enumerate, count, fit, bx-identity,
// pml-orbit, volume.  Reports are emitted as a JSON machine block plus
// CSV tables; all randomized results carry their seed, fits carry their
// window.  Exit codes: 0 success, 1 when an experiment-level check
// fails, 2 on usage errors.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crosscap/collar.hpp"
#include "crosscap/counting.hpp"
#include "crosscap/curves.hpp"
#include "crosscap/markoff.hpp"
#include "crosscap/pml.hpp"
#include "crosscap/surface.hpp"
#include "crosscap/volume.hpp"

using json = nlohmann::ordered_json;
using namespace crosscap;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string output_path(const std::string& name) {
  if (name.empty() || name.front() == '/') return name;
  const char* dir = std::getenv("CROSSCAP_OUTDIR");
  if (dir == nullptr || dir[0] == '\0') return name;
  return std::string(dir) + "/" + name;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(output_path(path));
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

void emit_report(const json& report, const std::string& json_path) {
  std::string text = report.dump(2) + "\n";
  if (!json_path.empty()) {
    write_file(json_path, text);
  }
  std::cout << text;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

HolonomyRep load_model(const std::string& name, const std::vector<double>& params,
                       const std::string& config_path) {
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot read config " + config_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    ModelConfig config = parse_model_config(buffer.str());
    if (!name.empty()) config.model = name;  // flags override file values
    return model_from_config(config);
  }
  std::string model = name.empty() ? "N21" : name;
  std::vector<double> p = params;
  if (p.empty()) {
    if (model == "N12") p = default_model_params(BuiltinModel::N12);
    if (model == "N21") p = default_model_params(BuiltinModel::N21);
    if (model == "N3") p = default_model_params(BuiltinModel::N3);
    if (model == "N13") p = default_model_params(BuiltinModel::N13);
  }
  return builtin_model(model, p);
}

std::vector<double> read_lengths_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<double> lengths;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || !(std::isdigit(static_cast<unsigned char>(line[0])) || line[0] == '.')) {
      continue;
    }
    lengths.push_back(std::stod(line));
  }
  return lengths;
}

// ----------------------------------------------------------------- collar

int run_collar(double core, double width, std::int64_t kmax, double offset_p,
               double offset_q, const std::string& csv, const std::string& json_path) {
  CollarParams params{core, width, offset_p, offset_q};
  CollarCalibration cal = calibrate_collar_index(params);
  auto rows = verify_collar_inequality(params, -kmax, kmax);

  std::string table = "k,i_closed,i_geom,length,margin\n";
  double min_margin = std::numeric_limits<double>::infinity();
  bool closed_form_matches = true;
  for (const auto& row : rows) {
    min_margin = std::min(min_margin, row.margin);
    closed_form_matches = closed_form_matches && (row.i_closed == row.i_geom);
    table += std::to_string(row.k) + "," + std::to_string(row.i_closed) + "," +
             std::to_string(row.i_geom) + "," + format_double(row.length) + "," +
             format_double(row.margin) + "\n";
  }
  if (!csv.empty()) write_file(csv, table);

  json report;
  report["claim"] = "collar-intersection-bound";
  report["version"] = kVersion;
  report["inputs"] = {{"core", core}, {"width", width}, {"kmax", kmax},
                      {"offset_p", offset_p}, {"offset_q", offset_q}};
  report["calibration"] = {{"sign", cal.sign}, {"offset", cal.offset}};
  report["boundary_length"] = params.boundary_length();
  report["min_margin"] = min_margin;
  report["closed_form_matches_geometry"] = closed_form_matches;
  report["rows"] = rows.size();
  emit_report(report, json_path);
  return (min_margin >= 0.0 && closed_form_matches) ? 0 : 1;
}

// ---------------------------------------------------------------- markoff

int run_markoff(int arity, std::uint64_t bound, const std::string& emit,
                const std::string& csv, const std::string& json_path, bool check_oracle,
                bool calibrate_n13) {
  MarkoffConfig config = (arity == 3) ? MarkoffConfig::triples() : MarkoffConfig::quadruples();
  auto orbit = markoff_orbit(config, bound);

  bool oracle_ok = true;
  if (check_oracle) {
    oracle_ok = (orbit == markoff_bruteforce(config, bound));
  }

  if (emit == "csv" || !csv.empty()) {
    std::string table;
    for (int i = 0; i < arity; ++i) table += (i ? ",x" : "x") + std::to_string(i + 1);
    table += "\n";
    for (const auto& t : orbit) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        table += (i ? "," : "") + std::to_string(t[i]);
      }
      table += "\n";
    }
    if (!csv.empty()) {
      write_file(csv, table);
    } else {
      std::cout << table;
    }
  }

  CountSeries series = markoff_length_series(config, bound);
  json report;
  report["claim"] = "markoff-growth";
  report["version"] = kVersion;
  report["inputs"] = {{"arity", arity}, {"bound", bound}};
  report["tuples"] = orbit.size();
  report["integer_points"] = series.lengths.size();
  if (check_oracle) report["oracle_equal"] = oracle_ok;
  if (series.lengths.size() >= 8) {
    ExponentFit fit = fit_exponent_top(series, 1.0);
    report["fit"] = {{"slope", fit.slope},
                     {"r_squared", fit.r_squared},
                     {"window", {fit.window_lo, fit.window_hi}},
                     {"points", fit.points}};
  }

  if (calibrate_n13) {
    // research knob: compare the tuple length dictionary with the
    // one-sided spectrum of the three-holed projective plane model
    HolonomyRep n13 = builtin_model(BuiltinModel::N13, default_model_params(BuiltinModel::N13));
    SimpleEnumeration one_sided = enumerate_simple(n13, Sidedness::OneSided, 8.0, 8);
    json holonomy_lengths = json::array();
    for (const CurveRecord& r : one_sided.curves) holonomy_lengths.push_back(r.length);
    json tuple_lengths = json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(series.lengths.size(), 16); ++i) {
      tuple_lengths.push_back(series.lengths[i]);
    }
    double scale = 0.0;
    if (!one_sided.curves.empty() && !series.lengths.empty()) {
      scale = series.lengths[series.lengths.size() / 2] /
              one_sided.curves[one_sided.curves.size() / 2].length;
    }
    report["n13_calibration"] = {{"holonomy_lengths", holonomy_lengths},
                                 {"tuple_lengths", tuple_lengths},
                                 {"median_ratio", scale},
                                 {"certified", one_sided.certified}};
  }
  emit_report(report, json_path);
  return (check_oracle && !oracle_ok) ? 1 : 0;
}

// -------------------------------------------------------------- enumerate

int run_enumerate(const std::string& model, const std::vector<double>& params,
                  const std::string& config, const std::string& sided, double lmax,
                  int budget, const std::string& csv, const std::string& json_path) {
  HolonomyRep rep = load_model(model, params, config);
  Sidedness filter = (sided == "two") ? Sidedness::TwoSided : Sidedness::OneSided;
  SimpleEnumeration result = enumerate_simple(rep, filter, lmax, budget);

  std::string table = "word,length\n";
  for (const CurveRecord& r : result.curves) {
    table += format_word(r.word, rep.generator_names) + "," + format_double(r.length) + "\n";
  }
  if (!csv.empty()) write_file(csv, table);

  json report;
  report["claim"] = "simple-growth";
  report["version"] = kVersion;
  report["inputs"] = {{"model", rep.model_name}, {"sided", sided}, {"lmax", lmax},
                      {"budget", budget}};
  report["count"] = result.curves.size();
  report["certified"] = result.certified;
  if (result.curves.size() >= 8) {
    CountSeries series = result.to_series(rep.model_name);
    ExponentFit fit = fit_exponent_top(series, 1.0);
    report["fit"] = {{"slope", fit.slope},
                     {"r_squared", fit.r_squared},
                     {"window", {fit.window_lo, fit.window_hi}},
                     {"points", fit.points}};
  }
  emit_report(report, json_path);
  return 0;
}

// ------------------------------------------------------------ count / fit

int run_count(const std::string& input, int d, double grid_lo, double grid_hi,
              const std::string& csv, const std::string& json_path) {
  CountSeries series = CountSeries::from_lengths(read_lengths_csv(input), input);
  if (grid_hi <= 0) grid_hi = series.lengths.back();
  if (grid_lo <= 0) grid_lo = grid_hi / 10.0;
  auto rows = ball_count(series, geometric_grid(grid_lo, grid_hi), d);

  std::string table = "L,N,nu\n";
  bool nonincreasing = true;
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    table += format_double(row.L) + "," + std::to_string(row.count) + "," +
             format_double(row.nu) + "\n";
    if (row.nu > prev + 1e-15) nonincreasing = false;
    prev = row.nu;
  }
  if (!csv.empty()) write_file(csv, table);

  json report;
  report["claim"] = "growth-deficiency";
  report["version"] = kVersion;
  report["inputs"] = {{"input", input}, {"d", d}, {"grid", {grid_lo, grid_hi}}};
  report["entries"] = series.lengths.size();
  report["nu_first"] = rows.front().nu;
  report["nu_last"] = rows.back().nu;
  report["nu_nonincreasing"] = nonincreasing;
  emit_report(report, json_path);
  return 0;
}

int run_fit(const std::string& input, double decades, const std::string& json_path) {
  CountSeries series = CountSeries::from_lengths(read_lengths_csv(input), input);
  ExponentFit fit = fit_exponent_top(series, decades);
  json report;
  report["claim"] = "growth-exponent";
  report["version"] = kVersion;
  report["inputs"] = {{"input", input}, {"decades", decades}};
  report["slope"] = fit.slope;
  report["intercept"] = fit.intercept;
  report["r_squared"] = fit.r_squared;
  report["window"] = {fit.window_lo, fit.window_hi};
  report["points"] = fit.points;
  emit_report(report, json_path);
  return 0;
}

// ------------------------------------------------------------ bx identity

int run_bx(double l1, double l2, double L, double tol, const std::string& json_path) {
  double err = bx_identity_error_n12(l1, l2, L);
  json report;
  report["claim"] = "unit-ball-identity";
  report["version"] = kVersion;
  report["inputs"] = {{"l1", l1}, {"l2", l2}, {"L", L}};
  report["direct"] = (std::floor(L / l1) + std::floor(L / l2)) / L;
  report["predicted"] = 1.0 / l1 + 1.0 / l2;
  report["relative_error"] = err;
  report["tolerance"] = tol;
  emit_report(report, json_path);
  return (err <= tol) ? 0 : 1;
}

// -------------------------------------------------------------- pml-orbit

int run_pml_orbit(const std::string& model, const std::string& start, int depth,
                  const std::string& json_path) {
  json report;
  report["claim"] = "pml-orbit-structure";
  report["version"] = kVersion;
  if (model == "n13" || model == "N13") {
    N13CurveSystem sys = N13CurveSystem::build(depth);
    report["inputs"] = {{"model", "N13"}, {"depth", depth}};
    report["tuples"] = sys.tuple_count();
    report["curves"] = sys.curve_count();
    report["co_membership_connected"] = sys.co_membership_connected();
    emit_report(report, json_path);
    return 0;
  }

  PmlN21Point p = PmlN21Point::gamma_inf();
  if (start.rfind("vertex:", 0) == 0) {
    p = PmlN21Point::vertex(std::stoll(start.substr(7)));
  } else if (start.rfind("arc:", 0) == 0) {
    auto rest = start.substr(4);
    auto colon = rest.find(':');
    p = PmlN21Point::arc_point(std::stoll(rest.substr(0, colon)),
                               std::stod(rest.substr(colon + 1)));
  } else if (start != "gamma-inf") {
    throw std::invalid_argument("--start must be gamma-inf, vertex:<n> or arc:<n>:<t>");
  }
  N21OrbitClosure closure = n21_orbit_closure(p, depth);
  report["inputs"] = {{"model", "N21"}, {"start", start}, {"depth", depth}};
  switch (closure.kind) {
    case OrbitClosureKind::MarkedPointOnly:
      report["closure"] = "marked-point";
      break;
    case OrbitClosureKind::VerticesWithLimit:
      report["closure"] = "vertices-plus-marked-point";
      break;
    case OrbitClosureKind::ArcOrbitWithLimit:
      report["closure"] = "arc-orbit-plus-marked-point";
      break;
  }
  report["orbit_sample"] = closure.sample.size();
  report["accumulates_at_marked_point"] = closure.accumulates_at_marked_point;
  emit_report(report, json_path);
  return 0;
}

// ----------------------------------------------------------------- volume

int run_volume(const std::string& model, const std::vector<double>& params,
               const std::string& config, double eps, double cap,
               const std::string& method, std::uint64_t samples, std::uint32_t seed,
               const std::string& json_path) {
  HolonomyRep rep = load_model(model.empty() ? "N21" : model, params, config);
  if (cap <= 0.0) {
    double max_boundary = 0.0;
    for (double b : rep.surface.boundary_lengths) max_boundary = std::max(max_boundary, b);
    cap = 4.0 * (max_boundary + 1.0);
  }
  IntegrationMethod m = (method == "quadrature") ? IntegrationMethod::Quadrature
                                                 : IntegrationMethod::MonteCarlo;
  VolumeEstimate estimate = sys_region_volume(rep, eps, cap, m, samples, seed);
  json report;
  report["claim"] = "sys-region-volume";
  report["version"] = kVersion;
  report["inputs"] = {{"model", rep.model_name}, {"eps", eps}, {"cap", cap},
                      {"method", estimate.method}, {"samples", samples}};
  report["value"] = estimate.value;
  report["error"] = estimate.error;
  report["seed"] = estimate.seed;
  report["certified"] = estimate.certified;
  emit_report(report, json_path);
  return std::isfinite(estimate.value) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"experiments on nonorientable hyperbolic surfaces"};
  app.require_subcommand(1);

  // collar
  auto* collar = app.add_subcommand("collar", "arcs in a Mobius-band collar");
  double core = 1.0, width = 0.5, offset_p = 0.0, offset_q = 0.0;
  std::int64_t kmax = 30;
  std::string collar_csv, collar_json;
  collar->add_option("--core", core, "core geodesic length");
  collar->add_option("--width", width, "collar width");
  collar->add_option("--kmax", kmax, "arc class range");
  collar->add_option("--offset-p", offset_p, "endpoint lift height, right ray");
  collar->add_option("--offset-q", offset_q, "endpoint lift height, left ray");
  collar->add_option("--csv", collar_csv, "CSV output path");
  collar->add_option("--json", collar_json, "JSON report path");

  // markoff
  auto* markoff = app.add_subcommand("markoff", "Markoff-Hurwitz orbits");
  int arity = 3;
  std::uint64_t bound = 1000;
  std::string emit = "json", markoff_csv, markoff_json;
  bool check_oracle = false, calibrate_n13 = false;
  markoff->add_option("--arity", arity, "3 or 4")->check(CLI::IsMember({3, 4}));
  markoff->add_option("--bound", bound, "max coordinate");
  markoff->add_option("--emit", emit, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  markoff->add_option("--csv", markoff_csv, "CSV output path");
  markoff->add_option("--json", markoff_json, "JSON report path");
  markoff->add_flag("--check-oracle", check_oracle, "compare with the exhaustive scan");
  markoff->add_flag("--calibrate-n13", calibrate_n13,
                    "compare tuple lengths with the three-holed projective plane spectrum");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "simple closed geodesics");
  std::string model, sided = "one", config_path, enum_csv, enum_json;
  std::vector<double> params;
  double lmax = 20.0;
  int budget = 60;
  enumerate->add_option("--model", model, "N12, N21, N3 or N13");
  enumerate->add_option("--params", params, "model parameters");
  enumerate->add_option("--config", config_path, "model config file");
  enumerate->add_option("--sided", sided, "one or two")->check(CLI::IsMember({"one", "two"}));
  enumerate->add_option("--lmax", lmax, "length bound");
  enumerate->add_option("--budget", budget, "word-length budget");
  enumerate->add_option("--csv", enum_csv, "CSV output path");
  enumerate->add_option("--json", enum_json, "JSON report path");

  // count
  auto* count = app.add_subcommand("count", "N(L) and nu on a grid");
  std::string count_input, count_csv, count_json;
  int dim = 2;
  double grid_lo = 0, grid_hi = 0;
  count->add_option("--input", count_input, "lengths CSV (one value per line)")->required();
  count->add_option("--d", dim, "lamination-space dimension");
  count->add_option("--grid-lo", grid_lo, "grid lower end");
  count->add_option("--grid-hi", grid_hi, "grid upper end");
  count->add_option("--csv", count_csv, "CSV output path");
  count->add_option("--json", count_json, "JSON report path");

  // fit
  auto* fit = app.add_subcommand("fit", "growth exponent fit");
  std::string fit_input, fit_json;
  double decades = 2.0;
  fit->add_option("--input", fit_input, "lengths CSV")->required();
  fit->add_option("--decades", decades, "fit window in decades");
  fit->add_option("--json", fit_json, "JSON report path");

  // bx-identity
  auto* bx = app.add_subcommand("bx-identity",
                                "unit-ball identity on the two-holed projective plane");
  double l1 = 1.0, l2 = 1.0, big_l = 1e4, tol = 1e-3;
  std::string bx_json;
  bx->add_option("--l1", l1, "first one-sided length");
  bx->add_option("--l2", l2, "second one-sided length");
  bx->add_option("--L", big_l, "count scale");
  bx->add_option("--tol", tol, "failure threshold on the relative error");
  bx->add_option("--json", bx_json, "JSON report path");

  // pml-orbit
  auto* pml = app.add_subcommand("pml-orbit", "mapping class orbits in the lamination models");
  std::string pml_model = "n21", start = "vertex:0", pml_json;
  int depth = 16;
  pml->add_option("--model", pml_model, "n21 or n13");
  pml->add_option("--start", start, "gamma-inf, vertex:<n> or arc:<n>:<t>");
  pml->add_option("--depth", depth, "orbit depth");
  pml->add_option("--json", pml_json, "JSON report path");

  // volume
  auto* volume = app.add_subcommand("volume", "sys-region volume in Fenchel-Nielsen charts");
  std::string vol_model = "N21", vol_method = "mc", vol_config, vol_json;
  std::vector<double> vol_params;
  double eps = 0.1, cap = 0.0;
  std::uint64_t samples = 20000;
  std::uint32_t seed = 1;
  volume->add_option("--model", vol_model, "builtin model (N21)");
  volume->add_option("--params", vol_params, "model parameters");
  volume->add_option("--config", vol_config, "model config file");
  volume->add_option("--eps", eps, "one-sided systole cutoff");
  volume->add_option("--cap", cap, "coordinate cap (default 4 (max boundary + 1))");
  volume->add_option("--method", vol_method, "mc or quadrature")
      ->check(CLI::IsMember({"mc", "quadrature"}));
  volume->add_option("--samples", samples, "sample count / grid budget");
  volume->add_option("--seed", seed, "random seed");
  volume->add_option("--json", vol_json, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help and --version exit 0
  }

  try {
    if (collar->parsed()) {
      return run_collar(core, width, kmax, offset_p, offset_q, collar_csv, collar_json);
    }
    if (markoff->parsed()) {
      return run_markoff(arity, bound, emit, markoff_csv, markoff_json, check_oracle,
                         calibrate_n13);
    }
    if (enumerate->parsed()) {
      return run_enumerate(model, params, config_path, sided, lmax, budget, enum_csv,
                           enum_json);
    }
    if (count->parsed()) {
      return run_count(count_input, dim, grid_lo, grid_hi, count_csv, count_json);
    }
    if (fit->parsed()) {
      return run_fit(fit_input, decades, fit_json);
    }
    if (bx->parsed()) {
      return run_bx(l1, l2, big_l, tol, bx_json);
    }
    if (pml->parsed()) {
      return run_pml_orbit(pml_model, start, depth, pml_json);
    }
    if (volume->parsed()) {
      return run_volume(vol_model, vol_params, vol_config, eps, cap, vol_method, samples,
                        seed, vol_json);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
