// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equilibrium.hpp"
#include "quantum_1d.hpp"
#include "systems.hpp"

namespace qcc {

/// E(hbar) = calE * hbar + second_order * hbar^2, least squares through the origin.
struct HbarFit {
  double calE = 0.0;
  double second_order = 0.0;
  double rms = 0.0;
  bool ill_fit = false;
};

HbarFit fit_hbar_series(std::span<const double> hbar, std::span<const double> energies,
                        double expected_error = 0.0);

/// Fits level `level` across spectra computed at >= 3 distinct hbar values.
HbarFit extrapolate_calE(std::span<const SpectrumTable> tables, std::size_t level);

struct Match {
  /// Empty when nothing lies within tolerance.
  std::optional<std::vector<int>> vector;
  double residual = 0.0;
  /// Number of vectors within tolerance.
  std::size_t degeneracy = 0;
};

/// Non-negative integer n with sum n_j <= max_total minimizing |calE - n.freq|.
/// Ties: smallest sum n_j, then lexicographically largest vector.
Match decompose(double calE, std::span<const double> frequencies, double tol, int max_total = 12);
inline double default_match_tolerance(std::span<const double> frequencies) {
  double top = 0.0;
  for (double f : frequencies) top = std::max(top, f);
  return 1e-3 * top;
}

struct CorrespondenceReport {
  std::size_t level_index = 0;
  /// Mode occupation numbers when the quantum side is a reference spectrum.
  std::vector<int> quantum_numbers;
  double calE = 0.0;
  double fit_residual = 0.0;
  bool ill_fit = false;
  std::optional<std::vector<int>> match_vector;
  double match_residual = 0.0;
  std::size_t degeneracy = 0;
  /// "matched", "unmatched" or "continuum".
  std::string status;
};

struct CorrespondenceOptions {
  /// Empty selects default_hbar_sweep.
  std::vector<double> hbar;
  /// Grid levels 0..levels-1, or the cap on sum n_k for reference spectra.
  std::size_t levels = 6;
  /// Base grid for every hbar; the default derives one per hbar.
  std::optional<GridSpec> grid;
  double rel_tol = 1e-8;
  /// <= 0 selects default_match_tolerance.
  double match_tol = 0.0;
  int max_total = 12;
  /// Use the closed-form spectrum even for one-dimensional systems.
  bool force_reference = false;
  /// Concurrent hbar solves; 1 runs sequentially.
  unsigned workers = 1;
};

struct CorrespondenceRun {
  EquilibriumReport equilibrium;
  std::vector<double> hbar;
  /// "grid" or "reference".
  std::string source;
  std::vector<SpectrumTable> tables;
  std::vector<CorrespondenceReport> levels;

  bool all_matched() const;
};

/// {0.4, 0.2, 0.1, 0.05}, halved until every requested level is bound.
std::vector<double> default_hbar_sweep(const PrepotentialSystem& system, std::size_t highest_level);

/// Equilibrium, frequencies, spectra, hbar fit and decomposition per level.
CorrespondenceRun run_correspondence(const PrepotentialSystem& system,
                                     const CorrespondenceOptions& options);

}  // namespace qcc
