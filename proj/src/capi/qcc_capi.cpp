// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/qcc.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "../core/classical_spectrum.hpp"
#include "../core/correspondence.hpp"
#include "../core/equilibrium.hpp"
#include "../core/error.hpp"
#include "../core/quantum_1d.hpp"
#include "../core/report.hpp"
#include "../core/systems.hpp"
#include "version.hpp"

struct qcc_system {
  qcc::SystemPtr impl;
};
struct qcc_equilibrium {
  qcc::EquilibriumReport impl;
};
struct qcc_spectrum {
  qcc::SpectrumTable impl;
};
struct qcc_correspondence {
  qcc::CorrespondenceRun impl;
};

namespace {

thread_local std::string last_error;

qcc_status code_for(qcc::ErrorKind kind) {
  switch (kind) {
    case qcc::ErrorKind::Catalog: return QCC_ERR_CATALOG;
    case qcc::ErrorKind::Validation: return QCC_ERR_VALIDATION;
    case qcc::ErrorKind::Domain: return QCC_ERR_DOMAIN;
    case qcc::ErrorKind::Solver: return QCC_ERR_SOLVER;
    case qcc::ErrorKind::Convergence: return QCC_ERR_CONVERGENCE;
    case qcc::ErrorKind::Input: return QCC_ERR_INPUT;
    case qcc::ErrorKind::Precondition: return QCC_ERR_PRECONDITION;
  }
  return QCC_ERR_INTERNAL;
}

template <class F>
qcc_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return QCC_OK;
  } catch (const qcc::ConvergenceError& e) {
    last_error = std::string(e.what()) + " [" + e.diagnostics() + "]";
    return QCC_ERR_CONVERGENCE;
  } catch (const qcc::Error& e) {
    last_error = e.what();
    return code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return QCC_ERR_VALIDATION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QCC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QCC_ERR_INTERNAL;
  }
}

qcc_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return QCC_ERR_NULL_ARGUMENT;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qcc::Vector point(const qcc_system* system, const double* q) {
  const auto n = static_cast<Eigen::Index>(system->impl->dimension());
  return Eigen::Map<const qcc::Vector>(q, n);
}

void copy_out(const qcc::Vector& v, double* out) { std::copy(v.data(), v.data() + v.size(), out); }

qcc::GridSpec to_grid(const qcc_grid& g) { return {g.half_width, g.points, g.levels}; }
qcc_grid from_grid(const qcc::GridSpec& g) { return {g.half_width, g.points, g.levels}; }

}  // namespace

extern "C" {

const char* qcc_version(void) { return QCC_VERSION; }

const char* qcc_status_string(qcc_status status) {
  switch (status) {
    case QCC_OK: return "ok";
    case QCC_ERR_CATALOG: return "catalog error";
    case QCC_ERR_VALIDATION: return "validation error";
    case QCC_ERR_DOMAIN: return "domain error";
    case QCC_ERR_SOLVER: return "solver error";
    case QCC_ERR_CONVERGENCE: return "convergence error";
    case QCC_ERR_INPUT: return "input error";
    case QCC_ERR_PRECONDITION: return "precondition error";
    case QCC_ERR_NULL_ARGUMENT: return "null argument";
    case QCC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qcc_last_error(void) { return last_error.c_str(); }

void qcc_string_free(char* str) { std::free(str); }

qcc_status qcc_system_create(const char* name, const char* params_json, qcc_system** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    std::map<std::string, double> params;
    if (params_json && *params_json) {
      const auto j = nlohmann::json::parse(params_json);
      if (!j.is_object()) throw qcc::ValidationError("system parameters must be a JSON object");
      for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw qcc::ValidationError("parameter '" + key + "' must be a number");
        params[key] = value.get<double>();
      }
    }
    *out = new qcc_system{qcc::make_system(name, params)};
  });
}

qcc_status qcc_system_create_custom(const char* name, size_t dimension, qcc_scalar_fn prepotential,
                                    qcc_array_fn gradient, qcc_array_fn hessian, void* user_data,
                                    qcc_system** out) {
  if (!prepotential) return null_argument("prepotential");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    qcc::SystemDefinition def;
    def.name = name ? name : "custom";
    def.dimension = dimension;
    def.prepotential = [=](const qcc::Vector& q) { return prepotential(q.data(), dimension, user_data); };
    if (gradient)
      def.gradient = [=](const qcc::Vector& q) {
        qcc::Vector g(static_cast<Eigen::Index>(dimension));
        gradient(q.data(), dimension, g.data(), user_data);
        return g;
      };
    if (hessian)
      def.hessian = [=](const qcc::Vector& q) {
        const auto n = static_cast<Eigen::Index>(dimension);
        Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> h(n, n);
        hessian(q.data(), dimension, h.data(), user_data);
        return qcc::Matrix(h);
      };
    *out = new qcc_system{std::make_shared<const qcc::PrepotentialSystem>(std::move(def))};
  });
}

void qcc_system_destroy(qcc_system* system) { delete system; }

size_t qcc_system_dimension(const qcc_system* system) { return system ? system->impl->dimension() : 0; }

qcc_status qcc_system_default_guess(const qcc_system* system, double* out) {
  if (!system || !out) return null_argument("system/out");
  return guarded([&] { copy_out(system->impl->default_guess(), out); });
}

qcc_status qcc_system_prepotential(const qcc_system* system, const double* q, double* out) {
  if (!system || !q || !out) return null_argument("system/q/out");
  return guarded([&] { *out = system->impl->prepotential(point(system, q)); });
}

qcc_status qcc_system_gradient(const qcc_system* system, const double* q, double* out) {
  if (!system || !q || !out) return null_argument("system/q/out");
  return guarded([&] { copy_out(system->impl->gradient(point(system, q)), out); });
}

qcc_status qcc_system_classical_potential(const qcc_system* system, const double* q, double* out) {
  if (!system || !q || !out) return null_argument("system/q/out");
  return guarded([&] { *out = qcc::classical_potential(*system->impl, point(system, q)); });
}

qcc_status qcc_system_quantum_potential(const qcc_system* system, const double* q, double hbar,
                                        double* out) {
  if (!system || !q || !out) return null_argument("system/q/out");
  return guarded([&] { *out = qcc::quantum_potential(*system->impl, point(system, q), hbar); });
}

qcc_status qcc_equilibrium_find(const qcc_system* system, const double* guess, double tol,
                                qcc_equilibrium** out) {
  if (!system || !out) return null_argument("system/out");
  *out = nullptr;
  return guarded([&] {
    const qcc::Vector start = guess ? point(system, guess) : system->impl->default_guess();
    qcc::NewtonOptions options;
    if (tol > 0.0) options.tol = tol;
    *out = new qcc_equilibrium{qcc::find_equilibrium(*system->impl, start, options)};
  });
}

void qcc_equilibrium_destroy(qcc_equilibrium* eq) { delete eq; }

size_t qcc_equilibrium_dimension(const qcc_equilibrium* eq) {
  return eq ? static_cast<size_t>(eq->impl.qbar.size()) : 0;
}

double qcc_equilibrium_grad_norm(const qcc_equilibrium* eq) { return eq ? eq->impl.grad_norm : -1.0; }

qcc_status qcc_equilibrium_qbar(const qcc_equilibrium* eq, double* out) {
  if (!eq || !out) return null_argument("eq/out");
  copy_out(eq->impl.qbar, out);
  return QCC_OK;
}

qcc_status qcc_equilibrium_frequencies(const qcc_equilibrium* eq, double* out) {
  if (!eq || !out) return null_argument("eq/out");
  copy_out(eq->impl.frequencies, out);
  return QCC_OK;
}

qcc_status qcc_equilibrium_modes(const qcc_equilibrium* eq, double* out) {
  if (!eq || !out) return null_argument("eq/out");
  const auto r = eq->impl.modes.rows();
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < r; ++i) out[j * r + i] = eq->impl.modes(i, j);
  return QCC_OK;
}

qcc_status qcc_equilibrium_to_json(const qcc_equilibrium* eq, char** out) {
  if (!eq || !out) return null_argument("eq/out");
  return guarded([&] { *out = duplicate(qcc::to_json(eq->impl).dump()); });
}

qcc_status qcc_equilibrium_to_csv(const qcc_equilibrium* eq, char** out) {
  if (!eq || !out) return null_argument("eq/out");
  return guarded([&] { *out = duplicate(qcc::equilibrium_csv(eq->impl)); });
}

qcc_status qcc_grid_default(const qcc_system* system, double hbar, size_t levels, qcc_grid* out) {
  if (!system || !out) return null_argument("system/out");
  return guarded([&] { *out = from_grid(qcc::default_grid(*system->impl, hbar, levels)); });
}

qcc_status qcc_spectrum_solve(const qcc_system* system, double hbar, const qcc_grid* grid,
                              qcc_spectrum** out) {
  if (!system || !grid || !out) return null_argument("system/grid/out");
  *out = nullptr;
  return guarded([&] { *out = new qcc_spectrum{qcc::solve_spectrum(*system->impl, hbar, to_grid(*grid))}; });
}

qcc_status qcc_spectrum_converge(const qcc_system* system, double hbar, const qcc_grid* base,
                                 size_t levels, double rel_tol, qcc_spectrum** out) {
  if (!system || !out) return null_argument("system/out");
  *out = nullptr;
  return guarded([&] {
    qcc::GridSpec grid = base ? to_grid(*base) : qcc::default_grid(*system->impl, hbar, levels);
    if (levels > 0) grid.levels = levels;
    *out = new qcc_spectrum{qcc::converge_spectrum(*system->impl, hbar, grid, rel_tol > 0.0 ? rel_tol : 1e-8)};
  });
}

void qcc_spectrum_destroy(qcc_spectrum* spectrum) { delete spectrum; }

size_t qcc_spectrum_levels(const qcc_spectrum* spectrum) { return spectrum ? spectrum->impl.energies.size() : 0; }

double qcc_spectrum_hbar(const qcc_spectrum* spectrum) { return spectrum ? spectrum->impl.hbar : 0.0; }

qcc_status qcc_spectrum_energies(const qcc_spectrum* spectrum, double* out) {
  if (!spectrum || !out) return null_argument("spectrum/out");
  std::copy(spectrum->impl.energies.begin(), spectrum->impl.energies.end(), out);
  return QCC_OK;
}

int qcc_spectrum_level_is_continuum(const qcc_spectrum* spectrum, size_t level) {
  if (!spectrum || level >= spectrum->impl.flags.size()) return -1;
  return spectrum->impl.flags[level] == qcc::LevelFlag::Continuum ? 1 : 0;
}

double qcc_spectrum_ground_state_overlap(const qcc_spectrum* spectrum) {
  return spectrum ? spectrum->impl.ground_state_overlap : 0.0;
}

qcc_status qcc_spectrum_grid(const qcc_spectrum* spectrum, qcc_grid* out) {
  if (!spectrum || !out) return null_argument("spectrum/out");
  *out = from_grid(spectrum->impl.grid);
  return QCC_OK;
}

qcc_status qcc_spectrum_to_json(const qcc_spectrum* spectrum, char** out) {
  if (!spectrum || !out) return null_argument("spectrum/out");
  return guarded([&] { *out = duplicate(qcc::to_json(spectrum->impl).dump()); });
}

qcc_status qcc_spectrum_to_csv(const qcc_spectrum* spectrum, char** out) {
  if (!spectrum || !out) return null_argument("spectrum/out");
  return guarded([&] {
    *out = duplicate(qcc::spectrum_csv(std::span<const qcc::SpectrumTable>(&spectrum->impl, 1)));
  });
}

qcc_status qcc_verify(const qcc_system* system, size_t samples, uint64_t seed, char** json_out,
                      char** csv_out) {
  if (!system || !json_out) return null_argument("system/json_out");
  *json_out = nullptr;
  if (csv_out) *csv_out = nullptr;
  return guarded([&] {
    const auto eq = qcc::find_equilibrium(*system->impl);
    const auto entries = qcc::verify_suite(*system->impl, eq, samples, seed);
    const std::string json = qcc::to_json(entries).dump();
    const std::string csv = csv_out ? qcc::verification_csv(entries) : std::string();
    *json_out = duplicate(json);
    if (csv_out) *csv_out = duplicate(csv);
  });
}

void qcc_correspond_options_init(qcc_correspond_options* options) {
  if (!options) return;
  *options = qcc_correspond_options{};
  options->levels = 6;
  options->rel_tol = 1e-8;
  options->max_total = 12;
  options->workers = 1;
}

qcc_status qcc_correspond_run(const qcc_system* system, const qcc_correspond_options* options,
                              qcc_correspondence** out) {
  if (!system || !out) return null_argument("system/out");
  *out = nullptr;
  return guarded([&] {
    qcc::CorrespondenceOptions opt;
    if (options) {
      if (options->hbar && options->hbar_count) opt.hbar.assign(options->hbar, options->hbar + options->hbar_count);
      if (options->levels) opt.levels = options->levels;
      if (options->grid) opt.grid = to_grid(*options->grid);
      if (options->rel_tol > 0.0) opt.rel_tol = options->rel_tol;
      opt.match_tol = options->match_tol;
      if (options->max_total > 0) opt.max_total = options->max_total;
      opt.force_reference = options->force_reference != 0;
      opt.workers = std::max(1u, options->workers);
    }
    *out = new qcc_correspondence{qcc::run_correspondence(*system->impl, opt)};
  });
}

void qcc_correspondence_destroy(qcc_correspondence* run) { delete run; }

size_t qcc_correspondence_levels(const qcc_correspondence* run) { return run ? run->impl.levels.size() : 0; }

int qcc_correspondence_all_matched(const qcc_correspondence* run) {
  return run && run->impl.all_matched() ? 1 : 0;
}

double qcc_correspondence_calE(const qcc_correspondence* run, size_t level) {
  if (!run || level >= run->impl.levels.size()) return 0.0;
  return run->impl.levels[level].calE;
}

qcc_status qcc_correspondence_to_json(const qcc_correspondence* run, char** out) {
  if (!run || !out) return null_argument("run/out");
  return guarded([&] { *out = duplicate(qcc::to_json(run->impl).dump()); });
}

qcc_status qcc_correspondence_to_csv(const qcc_correspondence* run, char** out) {
  if (!run || !out) return null_argument("run/out");
  return guarded([&] { *out = duplicate(qcc::correspondence_csv(run->impl)); });
}

qcc_status qcc_decompose(double calE, const double* frequencies, size_t count, double tol, int max_total,
                         int* out_vector, double* out_residual, int* matched) {
  if (!frequencies || !out_vector || !matched) return null_argument("frequencies/out_vector/matched");
  return guarded([&] {
    const std::span<const double> freqs(frequencies, count);
    const double t = tol > 0.0 ? tol : qcc::default_match_tolerance(freqs);
    const qcc::Match m = qcc::decompose(calE, freqs, t, max_total > 0 ? max_total : 12);
    *matched = m.vector ? 1 : 0;
    for (size_t j = 0; j < count; ++j) out_vector[j] = m.vector ? (*m.vector)[j] : 0;
    if (out_residual) *out_residual = m.residual;
  });
}

}  // extern "C"
