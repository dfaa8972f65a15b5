// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "systems.hpp"

namespace qcc {

/// Uniform grid on [center - half_width, center + half_width] with `points`
/// interior nodes and Dirichlet walls.
struct GridSpec {
  double half_width = 10.0;
  std::size_t points = 2000;
  std::size_t levels = 6;

  double spacing() const { return 2.0 * half_width / static_cast<double>(points + 1); }
};

/// Throws ValidationError unless L > 0, k >= 1 and M >= 16 k.
void validate(const GridSpec& grid);

enum class LevelFlag { Ok, Continuum };
const char* to_string(LevelFlag flag);

struct SpectrumTable {
  double hbar = 0.0;
  /// Ascending; Richardson-extrapolated after converge_spectrum.
  std::vector<double> energies;
  std::vector<LevelFlag> flags;
  /// Finest-grid raw eigenvalues (equal to `energies` for a single solve).
  std::vector<double> raw_energies;
  /// Change between the last two extrapolated estimates (empty for a single solve).
  std::vector<double> error_estimates;
  /// max(|psi| at the two walls) / max |psi| per level.
  std::vector<double> boundary_amplitudes;
  /// |<psi_0, exp(W/hbar)>| / (|psi_0| |exp(W/hbar)|) on the grid.
  double ground_state_overlap = 0.0;
  double center = 0.0;
  GridSpec grid;
  int refinements = 0;
  std::vector<std::string> warnings;

  std::size_t trusted_levels() const;
};

/// Lowest grid.levels eigenvalues of -(hbar^2/2) d^2/dq^2 + V on the grid,
/// centred on the classical equilibrium.
SpectrumTable solve_spectrum(const PrepotentialSystem& system, double hbar, const GridSpec& grid);
SpectrumTable solve_spectrum(const PrepotentialSystem& system, double hbar, const GridSpec& grid,
                             double center);

/// Box and resolution guess from the decay of exp(W/hbar) and the level count.
GridSpec default_grid(const PrepotentialSystem& system, double hbar, std::size_t levels);

/// Grows the box until the trusted levels decay at the walls, then halves the
/// spacing with Richardson extrapolation until successive estimates agree to
/// rel_tol.
SpectrumTable converge_spectrum(const PrepotentialSystem& system, double hbar,
                                const GridSpec& base_grid, double rel_tol = 1e-8);

}  // namespace qcc
