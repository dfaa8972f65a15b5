// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace qcc {

using nlohmann::json;

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

json vec(const Vector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

}  // namespace

json to_json(const EquilibriumReport& report) {
  json modes = json::array();
  for (Eigen::Index j = 0; j < report.modes.cols(); ++j) modes.push_back(vec(report.modes.col(j)));
  json hessian = json::array();
  for (Eigen::Index i = 0; i < report.hessian.rows(); ++i) hessian.push_back(vec(report.hessian.row(i).transpose()));
  return json{{"qbar", vec(report.qbar)},
              {"frequencies", vec(report.frequencies)},
              {"modes", modes},
              {"grad_norm", report.grad_norm},
              {"hessian", hessian},
              {"vc_hessian_mismatch", report.vc_hessian_mismatch},
              {"iterations", report.iterations}};
}

json to_json(const SpectrumTable& table) {
  json flags = json::array();
  for (auto f : table.flags) flags.push_back(to_string(f));
  return json{{"hbar", table.hbar},
              {"energies", table.energies},
              {"flags", flags},
              {"raw_energies", table.raw_energies},
              {"error_estimates", table.error_estimates},
              {"boundary_amplitudes", table.boundary_amplitudes},
              {"ground_state_overlap", table.ground_state_overlap},
              {"grid",
               {{"center", table.center},
                {"half_width", table.grid.half_width},
                {"points", table.grid.points},
                {"levels", table.grid.levels}}},
              {"refinements", table.refinements},
              {"warnings", table.warnings}};
}

json to_json(std::span<const VerificationEntry> entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"label", e.label},
                   {"exponents", e.exponents},
                   {"eigenvalue", e.eigenvalue},
                   {"approximate", e.approximate},
                   {"residual", e.residual},
                   {"normalization", e.normalization},
                   {"vanishing", e.vanishing},
                   {"hessian_residual", e.hessian_residual},
                   {"elementary", e.hessian_residual != kNonElementary}});
  }
  return out;
}

json to_json(const CorrespondenceRun& run) {
  json levels = json::array();
  for (const auto& r : run.levels) {
    levels.push_back({{"level_index", r.level_index},
                      {"quantum_numbers", r.quantum_numbers},
                      {"calE", r.calE},
                      {"fit_residual", r.fit_residual},
                      {"ill_fit", r.ill_fit},
                      {"match_vector", r.match_vector ? json(*r.match_vector) : json("unmatched")},
                      {"match_residual", r.match_residual},
                      {"degeneracy", r.degeneracy},
                      {"status", r.status}});
  }
  json tables = json::array();
  for (const auto& t : run.tables) tables.push_back(to_json(t));
  return json{{"source", run.source},
              {"hbar", run.hbar},
              {"equilibrium", to_json(run.equilibrium)},
              {"spectra", tables},
              {"levels", levels},
              {"all_matched", run.all_matched()}};
}

std::string spectrum_csv(std::span<const SpectrumTable> tables) {
  std::ostringstream os;
  os << "hbar,n,E_n,flag\n";
  for (const auto& t : tables)
    for (std::size_t n = 0; n < t.energies.size(); ++n)
      os << format_double(t.hbar) << ',' << n << ',' << format_double(t.energies[n]) << ','
         << to_string(t.flags[n]) << '\n';
  return os.str();
}

std::string correspondence_csv(const CorrespondenceRun& run) {
  const auto r = static_cast<std::size_t>(run.equilibrium.frequencies.size());
  std::ostringstream os;
  os << "level,calE";
  for (std::size_t j = 1; j <= r; ++j) os << ",n_" << j;
  os << ",match_residual,fit_residual,status\n";
  for (const auto& rep : run.levels) {
    os << rep.level_index << ',' << format_double(rep.calE);
    for (std::size_t j = 0; j < r; ++j) {
      os << ',';
      if (rep.match_vector) os << (*rep.match_vector)[j];
    }
    os << ',' << format_double(rep.match_residual) << ',' << format_double(rep.fit_residual) << ','
       << rep.status << '\n';
  }
  return os.str();
}

std::string verification_csv(std::span<const VerificationEntry> entries) {
  std::ostringstream os;
  os << "label,eigenvalue,residual,vanishing,hessian_residual,approximate\n";
  for (const auto& e : entries)
    os << e.label << ',' << format_double(e.eigenvalue) << ',' << format_double(e.residual) << ','
       << format_double(e.vanishing) << ',' << format_double(e.hessian_residual) << ','
       << (e.approximate ? "true" : "false") << '\n';
  return os.str();
}

std::string equilibrium_csv(const EquilibriumReport& report) {
  const auto r = report.frequencies.size();
  std::ostringstream os;
  os << "mode,frequency";
  for (Eigen::Index j = 1; j <= r; ++j) os << ",v_" << j;
  os << '\n';
  for (Eigen::Index j = 0; j < r; ++j) {
    os << j + 1 << ',' << format_double(report.frequencies[j]);
    for (Eigen::Index i = 0; i < r; ++i) os << ',' << format_double(report.modes(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace qcc
