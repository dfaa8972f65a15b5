// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

// qcc: command-line front end over the C API.
//
//   qcc analyze    --system harmonic --omega 1
//   qcc spectrum   --system poschl_teller --g 1 --hbar 0.2 --levels 4
//   qcc verify     --system calogero_a -N 3 --omega 1 --g 1
//   qcc correspond --system poschl_teller --g 1 --levels 3
//
// A JSON config (--config) supplies defaults; explicit flags win.

#include <CLI11.hpp>
#include <json.hpp>

#include "qcc/qcc.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUnmatched = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(qcc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  qcc_status status;
};

void check(qcc_status status) {
  if (status != QCC_OK)
    throw ApiError(status, std::string(qcc_status_string(status)) + ": " + qcc_last_error());
}

struct CString {
  char* ptr = nullptr;
  ~CString() { qcc_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* ptr = nullptr;
  ~Handle() { Destroy(ptr); }
};
using SystemHandle = Handle<qcc_system, qcc_system_destroy>;
using EquilibriumHandle = Handle<qcc_equilibrium, qcc_equilibrium_destroy>;
using SpectrumHandle = Handle<qcc_spectrum, qcc_spectrum_destroy>;
using CorrespondenceHandle = Handle<qcc_correspondence, qcc_correspondence_destroy>;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
  return s + "]";
}

/// Effective run configuration (config file, then flag overrides).
struct RunConfig {
  std::string command;
  std::string system;
  std::map<std::string, double> params;
  std::vector<double> hbar_list;
  std::optional<double> half_width;
  std::optional<std::size_t> points;
  std::size_t levels = 6;
  std::string prefix;
  std::string format = "json";
  std::uint64_t seed = 42;
  std::size_t samples = 64;
  std::vector<double> guess;
  double tol = 1e-12;
  double rel_tol = 1e-8;
  double match_tol = 0.0;
  int max_total = 12;
  unsigned workers = 1;
  bool reference = false;

  json to_json() const {
    json grid = json::object();
    if (half_width) grid["half_width"] = *half_width;
    if (points) grid["points"] = *points;
    grid["levels"] = levels;
    return json{{"command", command},
                {"system", {{"name", system}, {"params", params}}},
                {"hbar_list", hbar_list},
                {"grid", grid},
                {"levels", levels},
                {"output", {{"prefix", prefix}, {"format", format}}},
                {"seed", seed},
                {"samples", samples},
                {"guess", guess},
                {"tol", tol},
                {"rel_tol", rel_tol},
                {"match_tol", match_tol},
                {"max_total", max_total},
                {"workers", workers},
                {"reference", reference}};
  }
};

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw UsageError("unknown key '" + key + "' in " + where);
}

void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
    require_keys(j,
                 {"command", "system", "hbar_list", "grid", "levels", "output", "seed", "samples", "guess",
                  "tol", "rel_tol", "match_tol", "max_total", "workers", "reference"},
                 "config");
    if (j.contains("command")) cfg.command = j["command"].get<std::string>();
    if (j.contains("system")) {
      const json& s = j["system"];
      require_keys(s, {"name", "params"}, "system");
      if (s.contains("name")) cfg.system = s["name"].get<std::string>();
      if (s.contains("params")) {
        if (!s["params"].is_object()) throw UsageError("system.params must be a JSON object");
        for (const auto& [k, v] : s["params"].items()) cfg.params[k] = v.get<double>();
      }
    }
    if (j.contains("hbar_list")) cfg.hbar_list = j["hbar_list"].get<std::vector<double>>();
    if (j.contains("grid")) {
      const json& g = j["grid"];
      require_keys(g, {"half_width", "points", "levels"}, "grid");
      if (g.contains("half_width")) cfg.half_width = g["half_width"].get<double>();
      if (g.contains("points")) cfg.points = g["points"].get<std::size_t>();
      if (g.contains("levels")) cfg.levels = g["levels"].get<std::size_t>();
    }
    if (j.contains("levels")) cfg.levels = j["levels"].get<std::size_t>();
    if (j.contains("output")) {
      const json& o = j["output"];
      require_keys(o, {"prefix", "format"}, "output");
      if (o.contains("prefix")) cfg.prefix = o["prefix"].get<std::string>();
      if (o.contains("format")) cfg.format = o["format"].get<std::string>();
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::size_t>();
    if (j.contains("guess")) cfg.guess = j["guess"].get<std::vector<double>>();
    if (j.contains("tol")) cfg.tol = j["tol"].get<double>();
    if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("match_tol")) cfg.match_tol = j["match_tol"].get<double>();
    if (j.contains("max_total")) cfg.max_total = j["max_total"].get<int>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<unsigned>();
    if (j.contains("reference")) cfg.reference = j["reference"].get<bool>();
  } catch (const json::exception& e) {
    throw UsageError("malformed config '" + path + "': " + e.what());
  }
}

void validate(const RunConfig& cfg) {
  static const std::set<std::string> commands = {"analyze", "spectrum", "verify", "correspond"};
  if (cfg.command.empty()) throw UsageError("missing subcommand (analyze | spectrum | verify | correspond)");
  if (!commands.count(cfg.command)) throw UsageError("unknown subcommand '" + cfg.command + "'");
  if (cfg.system.empty()) throw UsageError("missing --system");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "both")
    throw UsageError("--format must be json, csv or both");
  for (double h : cfg.hbar_list)
    if (!(h > 0.0)) throw UsageError("hbar values must be strictly positive");
  if (std::set<double>(cfg.hbar_list.begin(), cfg.hbar_list.end()).size() != cfg.hbar_list.size())
    throw UsageError("hbar values must be distinct");
  if (cfg.levels == 0) throw UsageError("--levels must be at least 1");
  if (cfg.samples == 0) throw UsageError("--samples must be at least 1");
}

std::string params_json(const RunConfig& cfg) { return json(cfg.params).dump(); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

void emit(const RunConfig& cfg, const json& result, const std::string& csv) {
  if (cfg.prefix.empty()) return;
  if (cfg.format == "json" || cfg.format == "both") {
    const json doc{{"tool", {{"name", "qcc"}, {"version", qcc_version()}}},
                   {"config", cfg.to_json()},
                   {"result", result}};
    write_file(cfg.prefix + ".json", doc.dump(2) + "\n");
  }
  if (cfg.format == "csv" || cfg.format == "both") write_file(cfg.prefix + ".csv", csv);
}

std::vector<double> read_vector(std::size_t n, qcc_status (*getter)(const qcc_equilibrium*, double*),
                                const qcc_equilibrium* eq) {
  std::vector<double> v(n);
  check(getter(eq, v.data()));
  return v;
}

int run_analyze(const RunConfig& cfg, const qcc_system* sys) {
  const std::size_t r = qcc_system_dimension(sys);
  if (!cfg.guess.empty() && cfg.guess.size() != r)
    throw UsageError("--guess needs " + std::to_string(r) + " coordinates");
  EquilibriumHandle eq;
  check(qcc_equilibrium_find(sys, cfg.guess.empty() ? nullptr : cfg.guess.data(), cfg.tol, &eq.ptr));
  const auto qbar = read_vector(r, qcc_equilibrium_qbar, eq.ptr);
  const auto freqs = read_vector(r, qcc_equilibrium_frequencies, eq.ptr);
  std::cout << "system " << cfg.system << "\n"
            << "qbar = " << list(qbar) << "\n"
            << "grad_norm = " << num(qcc_equilibrium_grad_norm(eq.ptr)) << "\n"
            << "frequencies = " << list(freqs) << "\n";
  CString js, csv;
  check(qcc_equilibrium_to_json(eq.ptr, &js.ptr));
  check(qcc_equilibrium_to_csv(eq.ptr, &csv.ptr));
  emit(cfg, json::parse(js.str()), csv.str());
  return kExitOk;
}

qcc_grid grid_for(const RunConfig& cfg, const qcc_system* sys, double hbar) {
  qcc_grid grid{};
  check(qcc_grid_default(sys, hbar, cfg.levels, &grid));
  if (cfg.half_width) grid.half_width = *cfg.half_width;
  if (cfg.points) grid.points = *cfg.points;
  grid.levels = cfg.levels;
  return grid;
}

int run_spectrum(const RunConfig& cfg, const qcc_system* sys) {
  if (qcc_system_dimension(sys) != 1) throw UsageError("spectrum supports one-dimensional systems only");
  const std::vector<double> hbars = cfg.hbar_list.empty() ? std::vector<double>{1.0} : cfg.hbar_list;
  json tables = json::array();
  std::string csv;
  for (double h : hbars) {
    const qcc_grid grid = grid_for(cfg, sys, h);
    SpectrumHandle spec;
    check(qcc_spectrum_converge(sys, h, &grid, cfg.levels, cfg.rel_tol, &spec.ptr));
    std::vector<double> e(qcc_spectrum_levels(spec.ptr));
    check(qcc_spectrum_energies(spec.ptr, e.data()));
    std::cout << "hbar = " << num(h) << "  ground-state overlap = " << num(qcc_spectrum_ground_state_overlap(spec.ptr))
              << "\n";
    for (std::size_t n = 0; n < e.size(); ++n)
      std::cout << "  E_" << n << " = " << num(e[n])
                << (qcc_spectrum_level_is_continuum(spec.ptr, n) == 1 ? "  (continuum)" : "") << "\n";
    CString js, c;
    check(qcc_spectrum_to_json(spec.ptr, &js.ptr));
    check(qcc_spectrum_to_csv(spec.ptr, &c.ptr));
    tables.push_back(json::parse(js.str()));
    std::string rows = c.str();
    if (!csv.empty()) rows = rows.substr(rows.find('\n') + 1);
    csv += rows;
  }
  emit(cfg, json{{"spectra", tables}}, csv);
  return kExitOk;
}

int run_verify(const RunConfig& cfg, const qcc_system* sys) {
  CString js, csv;
  check(qcc_verify(sys, cfg.samples, cfg.seed, &js.ptr, &csv.ptr));
  const json entries = json::parse(js.str());
  for (const auto& e : entries) {
    std::cout << e["label"].get<std::string>() << ": E = " << num(e["eigenvalue"].get<double>())
              << "  residual = " << num(e["residual"].get<double>())
              << "  |phi(qbar)| = " << num(e["vanishing"].get<double>());
    const double h = e["hessian_residual"].get<double>();
    std::cout << "  hessian = " << (h < 0.0 ? std::string("non-elementary") : num(h))
              << (e["approximate"].get<bool>() ? "  (linearized)" : "") << "\n";
  }
  emit(cfg, json{{"samples", cfg.samples}, {"seed", cfg.seed}, {"entries", entries}}, csv.str());
  return kExitOk;
}

int run_correspond(const RunConfig& cfg, const qcc_system* sys) {
  qcc_correspond_options opt;
  qcc_correspond_options_init(&opt);
  opt.hbar = cfg.hbar_list.empty() ? nullptr : cfg.hbar_list.data();
  opt.hbar_count = cfg.hbar_list.size();
  opt.levels = cfg.levels;
  opt.rel_tol = cfg.rel_tol;
  opt.match_tol = cfg.match_tol;
  opt.max_total = cfg.max_total;
  opt.force_reference = cfg.reference ? 1 : 0;
  opt.workers = cfg.workers;
  qcc_grid grid{};
  if (cfg.half_width || cfg.points) {
    if (!cfg.half_width || !cfg.points) throw UsageError("--half-width and --points must be given together");
    grid = {*cfg.half_width, *cfg.points, cfg.levels};
    opt.grid = &grid;
  }
  CorrespondenceHandle run;
  check(qcc_correspond_run(sys, &opt, &run.ptr));
  CString js, csv;
  check(qcc_correspondence_to_json(run.ptr, &js.ptr));
  check(qcc_correspondence_to_csv(run.ptr, &csv.ptr));
  const json result = json::parse(js.str());

  std::cout << "source: " << result["source"].get<std::string>() << "  hbar = "
            << list(result["hbar"].get<std::vector<double>>()) << "\n"
            << "frequencies = " << list(result["equilibrium"]["frequencies"].get<std::vector<double>>()) << "\n";
  std::size_t matched = 0;
  for (const auto& l : result["levels"]) {
    const std::string status = l["status"].get<std::string>();
    matched += status == "matched";
    std::cout << "level " << l["level_index"].get<std::size_t>();
    if (l.contains("quantum_numbers") && !l["quantum_numbers"].empty()) std::cout << " " << l["quantum_numbers"].dump();
    std::cout << ": calE = " << num(l["calE"].get<double>()) << "  " << status;
    if (status == "matched") std::cout << " " << l["match_vector"].dump();
    if (status != "continuum") std::cout << "  residual = " << num(l["match_residual"].get<double>());
    std::cout << "\n";
  }
  std::cout << matched << " of " << result["levels"].size() << " levels matched\n";
  emit(cfg, result, csv.str());
  return qcc_correspondence_all_matched(run.ptr) ? kExitOk : kExitUnmatched;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum/classical spectrum correspondence from a prepotential"};
  app.set_version_flag("--version", std::string(qcc_version()));

  std::string command, config_path, system;
  std::optional<double> omega, g, particles, half_width, tol, rel_tol, match_tol;
  std::optional<std::size_t> points, levels, samples;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_total;
  std::optional<unsigned> workers;
  std::vector<std::string> extra_params;
  std::vector<double> hbar, guess;
  std::string out, format;
  bool reference = false;

  app.add_option("command", command, "analyze | spectrum | verify | correspond");
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--system", system, "catalog system: harmonic | poschl_teller | calogero_a");
  app.add_option("--omega", omega, "confinement frequency omega");
  app.add_option("--g", g, "coupling g");
  app.add_option("-N,--particles", particles, "particle count (calogero_a)");
  app.add_option("--param", extra_params, "extra system parameter key=value")->allow_extra_args(false);
  app.add_option("--hbar", hbar, "hbar value(s)")->delimiter(',');
  app.add_option("--levels", levels, "levels per spectrum (grid) or max quanta (reference)");
  app.add_option("--half-width", half_width, "grid half-width L");
  app.add_option("--points", points, "grid interior points M");
  app.add_option("--guess", guess, "initial guess for the equilibrium")->delimiter(',');
  app.add_option("--tol", tol, "equilibrium gradient tolerance");
  app.add_option("--rel-tol", rel_tol, "grid convergence tolerance");
  app.add_option("--match-tol", match_tol, "integer decomposition tolerance");
  app.add_option("--max-total", max_total, "largest total quantum number searched");
  app.add_option("--samples", samples, "sample points for verify");
  app.add_option("--jobs", workers, "concurrent hbar solves");
  app.add_flag("--reference", reference, "use the closed-form spectrum for correspond");
  app.add_option("--out", out, "output path prefix");
  app.add_option("--format", format, "json | csv | both");
  app.add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) load_config(config_path, cfg);
    if (!command.empty()) cfg.command = command;
    if (!system.empty()) cfg.system = system;
    if (omega) cfg.params["omega"] = *omega;
    if (g) cfg.params["g"] = *g;
    if (particles) cfg.params["N"] = *particles;
    for (const auto& kv : extra_params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + kv + "'");
      try {
        cfg.params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("--param value is not a number: '" + kv + "'");
      }
    }
    if (!hbar.empty()) cfg.hbar_list = hbar;
    if (levels) cfg.levels = *levels;
    if (half_width) cfg.half_width = half_width;
    if (points) cfg.points = points;
    if (!guess.empty()) cfg.guess = guess;
    if (tol) cfg.tol = *tol;
    if (rel_tol) cfg.rel_tol = *rel_tol;
    if (match_tol) cfg.match_tol = *match_tol;
    if (max_total) cfg.max_total = *max_total;
    if (samples) cfg.samples = *samples;
    if (workers) cfg.workers = *workers;
    if (reference) cfg.reference = true;
    if (!out.empty()) cfg.prefix = out;
    if (!format.empty()) cfg.format = format;
    if (seed) cfg.seed = *seed;
    validate(cfg);

    SystemHandle sys;
    check(qcc_system_create(cfg.system.c_str(), params_json(cfg).c_str(), &sys.ptr));

    if (cfg.command == "analyze") return run_analyze(cfg, sys.ptr);
    if (cfg.command == "spectrum") return run_spectrum(cfg, sys.ptr);
    if (cfg.command == "verify") return run_verify(cfg, sys.ptr);
    return run_correspond(cfg, sys.ptr);
  } catch (const UsageError& e) {
    std::cerr << "qcc: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "qcc: " << e.what() << "\n";
    switch (e.status) {
      case QCC_ERR_CATALOG:
      case QCC_ERR_VALIDATION:
      case QCC_ERR_DOMAIN:
      case QCC_ERR_INPUT:
      case QCC_ERR_NULL_ARGUMENT:
        return kExitUsage;
      default:
        return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "qcc: " << e.what() << "\n";
    return kExitFailure;
  }
}
