// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace qcc {

HbarFit fit_hbar_series(std::span<const double> hbar, std::span<const double> energies,
                        double expected_error) {
  if (hbar.size() != energies.size()) throw InputError("hbar and energy series differ in length");
  const std::set<double> distinct(hbar.begin(), hbar.end());
  if (distinct.size() < 3) throw InputError("the hbar fit needs at least 3 distinct hbar values");
  const auto n = static_cast<Eigen::Index>(hbar.size());
  Matrix design(n, 2);
  Vector rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = hbar[static_cast<std::size_t>(i)];
    if (!(x > 0.0)) throw InputError("hbar values must be positive");
    design(i, 0) = x;
    design(i, 1) = x * x;
    rhs[i] = energies[static_cast<std::size_t>(i)];
  }
  const Vector coef = design.colPivHouseholderQr().solve(rhs);
  HbarFit fit;
  fit.calE = coef[0];
  fit.second_order = coef[1];
  fit.rms = std::sqrt((design * coef - rhs).squaredNorm() / static_cast<double>(n));
  fit.ill_fit = fit.rms > std::max(10.0 * expected_error, 1e-10);
  return fit;
}

HbarFit extrapolate_calE(std::span<const SpectrumTable> tables, std::size_t level) {
  std::vector<double> hbar, energy;
  double expected = 0.0;
  for (const auto& t : tables) {
    if (level >= t.energies.size()) throw InputError("level not present in every spectrum table");
    if (t.flags[level] != LevelFlag::Ok)
      throw InputError("level " + std::to_string(level) + " is flagged at hbar " + std::to_string(t.hbar));
    hbar.push_back(t.hbar);
    energy.push_back(t.energies[level]);
    if (level < t.error_estimates.size()) expected = std::max(expected, t.error_estimates[level]);
  }
  return fit_hbar_series(hbar, energy, expected);
}

Match decompose(double calE, std::span<const double> frequencies, double tol, int max_total) {
  if (frequencies.empty()) throw InputError("decomposition needs at least one frequency");
  for (double f : frequencies)
    if (!(f > 0.0)) throw InputError("frequencies must be positive for decomposition");
  if (!(tol > 0.0)) throw InputError("match tolerance must be positive");
  if (max_total < 1) throw InputError("max_total must be at least 1");

  const std::size_t r = frequencies.size();
  const double tie = 1e-12 * std::max(1.0, std::abs(calE));
  Match best;
  double best_res = std::numeric_limits<double>::infinity();
  int best_total = 0;
  std::vector<int> current(r, 0);
  std::vector<int> best_vec;

  auto consider = [&](double sum, int total) {
    const double res = std::abs(calE - sum);
    if (res <= tol) ++best.degeneracy;
    bool take = false;
    if (res < best_res - tie) {
      take = true;
    } else if (res <= best_res + tie) {
      if (total != best_total)
        take = total < best_total;
      else
        take = std::lexicographical_compare(best_vec.begin(), best_vec.end(), current.begin(), current.end());
    }
    if (take) {
      best_res = res;
      best_total = total;
      best_vec = current;
    }
  };

  // Depth-first over coordinates; sums beyond calE + tol cannot improve.
  std::function<void(std::size_t, double, int)> walk = [&](std::size_t j, double sum, int total) {
    if (j == r) {
      consider(sum, total);
      return;
    }
    for (int n = 0; total + n <= max_total; ++n) {
      const double s = sum + n * frequencies[j];
      if (n > 0 && s > calE + tol && s - frequencies[j] > calE + tol) break;
      current[j] = n;
      walk(j + 1, s, total + n);
    }
    current[j] = 0;
  };
  walk(0, 0.0, 0);

  best.residual = best_res;
  if (best_res <= tol) best.vector = best_vec;
  return best;
}

bool CorrespondenceRun::all_matched() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const CorrespondenceReport& r) { return r.status == "matched"; });
}

std::vector<double> default_hbar_sweep(const PrepotentialSystem& system, std::size_t highest_level) {
  std::vector<double> sweep = {0.4, 0.2, 0.1, 0.05};
  for (int guard = 0; guard < 40; ++guard) {
    const auto bound = system.bound_state_count(sweep.front());
    if (!bound || *bound > highest_level + 1) break;
    for (double& h : sweep) h *= 0.5;
  }
  return sweep;
}

namespace {

void finish_level(CorrespondenceReport& rep, const HbarFit& fit, std::span<const double> freqs,
                  const CorrespondenceOptions& options) {
  rep.calE = fit.calE;
  rep.fit_residual = fit.rms;
  rep.ill_fit = fit.ill_fit;
  const double tol = options.match_tol > 0.0 ? options.match_tol : default_match_tolerance(freqs);
  const Match m = decompose(fit.calE, freqs, tol, options.max_total);
  rep.match_vector = m.vector;
  rep.match_residual = m.residual;
  rep.degeneracy = m.degeneracy;
  rep.status = m.vector ? "matched" : "unmatched";
}

std::vector<std::vector<int>> occupations(std::size_t modes, int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(modes, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t j, int left) {
    if (j == modes) {
      out.push_back(cur);
      return;
    }
    for (int n = 0; n <= left; ++n) {
      cur[j] = n;
      walk(j + 1, left - n);
    }
    cur[j] = 0;
  };
  walk(0, cap);
  return out;
}

void check_hbar_list(const std::vector<double>& hbar) {
  for (double h : hbar)
    if (!(h > 0.0) || !std::isfinite(h)) throw InputError("hbar values must be positive");
  if (std::set<double>(hbar.begin(), hbar.end()).size() != hbar.size())
    throw InputError("hbar values must be distinct");
  if (hbar.size() < 3) throw InputError("the hbar sweep needs at least 3 values");
}

}  // namespace

CorrespondenceRun run_correspondence(const PrepotentialSystem& system,
                                     const CorrespondenceOptions& options) {
  if (options.levels == 0) throw InputError("at least one level must be requested");
  CorrespondenceRun run;
  run.equilibrium = find_equilibrium(system);
  const std::vector<double> freqs(run.equilibrium.frequencies.data(),
                                  run.equilibrium.frequencies.data() + run.equilibrium.frequencies.size());

  const bool reference = options.force_reference || system.dimension() > 1;
  if (reference && !system.reference_spectrum())
    throw PreconditionError("system '" + system.name() +
                            "' has more than one degree of freedom and no reference spectrum");
  run.source = reference ? "reference" : "grid";
  run.hbar = options.hbar.empty() ? default_hbar_sweep(system, reference ? 0 : options.levels - 1) : options.hbar;
  check_hbar_list(run.hbar);

  if (reference) {
    const ReferenceSpectrum& spec = *system.reference_spectrum();
    auto series = [&](const std::vector<int>& occ) {
      std::vector<double> e;
      for (double h : run.hbar) e.push_back(spec.energy(occ, h));
      return e;
    };
    // Single-quantum slopes must reproduce the normal-mode frequencies.
    std::vector<double> slopes;
    for (std::size_t k = 0; k < spec.modes; ++k) {
      std::vector<int> unit(spec.modes, 0);
      unit[k] = 1;
      slopes.push_back(fit_hbar_series(run.hbar, series(unit)).calE);
    }
    std::vector<double> sorted_freqs = freqs;
    std::sort(slopes.begin(), slopes.end());
    std::sort(sorted_freqs.begin(), sorted_freqs.end());
    if (slopes.size() != sorted_freqs.size())
      throw PreconditionError("reference spectrum mode count differs from the system dimension");
    for (std::size_t k = 0; k < slopes.size(); ++k)
      if (std::abs(slopes[k] - sorted_freqs[k]) > 1e-8 * std::max(1.0, sorted_freqs[k])) {
        std::ostringstream os;
        os << "reference spectrum slope " << slopes[k] << " disagrees with normal-mode frequency "
           << sorted_freqs[k];
        throw PreconditionError(os.str());
      }

    struct Item {
      std::vector<int> occ;
      HbarFit fit;
    };
    std::vector<Item> items;
    for (auto& occ : occupations(spec.modes, static_cast<int>(options.levels))) {
      const HbarFit fit = fit_hbar_series(run.hbar, series(occ));
      items.push_back({std::move(occ), fit});
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (std::abs(a.fit.calE - b.fit.calE) > 1e-9 * std::max(1.0, std::abs(a.fit.calE)))
        return a.fit.calE < b.fit.calE;
      const int ta = std::accumulate(a.occ.begin(), a.occ.end(), 0);
      const int tb = std::accumulate(b.occ.begin(), b.occ.end(), 0);
      if (ta != tb) return ta < tb;
      return std::lexicographical_compare(b.occ.begin(), b.occ.end(), a.occ.begin(), a.occ.end());
    });
    for (std::size_t i = 0; i < items.size(); ++i) {
      CorrespondenceReport rep;
      rep.level_index = i;
      rep.quantum_numbers = items[i].occ;
      finish_level(rep, items[i].fit, freqs, options);
      run.levels.push_back(std::move(rep));
    }
    return run;
  }

  auto solve = [&](double h) {
    GridSpec base = options.grid ? *options.grid : default_grid(system, h, options.levels);
    base.levels = options.levels;
    base.points = std::max(base.points, 16 * base.levels);
    return converge_spectrum(system, h, base, options.rel_tol);
  };
  if (options.workers > 1) {
    std::vector<std::future<SpectrumTable>> jobs;
    for (double h : run.hbar) jobs.push_back(std::async(std::launch::async, solve, h));
    for (auto& j : jobs) run.tables.push_back(j.get());
  } else {
    for (double h : run.hbar) run.tables.push_back(solve(h));
  }

  for (std::size_t n = 0; n < options.levels; ++n) {
    CorrespondenceReport rep;
    rep.level_index = n;
    rep.quantum_numbers = {static_cast<int>(n)};
    const bool flagged = std::any_of(run.tables.begin(), run.tables.end(),
                                     [n](const SpectrumTable& t) { return t.flags[n] != LevelFlag::Ok; });
    if (flagged) {
      rep.status = "continuum";
      run.levels.push_back(std::move(rep));
      continue;
    }
    finish_level(rep, extrapolate_calE(run.tables, n), freqs, options);
    run.levels.push_back(std::move(rep));
  }
  return run;
}

}  // namespace qcc
