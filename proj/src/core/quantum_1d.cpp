// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "quantum_1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "equilibrium.hpp"
#include "error.hpp"
#include "tridiagonal.hpp"

namespace qcc {

namespace {

constexpr double kWallAmplitude = 1e-10;
constexpr double kGroundWallAmplitude = 1e-12;
constexpr int kMaxDoublings = 6;
constexpr int kMaxBoxGrowth = 10;

Vector point(double x) { return Vector::Constant(1, x); }

double ground_wall_ratio(const PrepotentialSystem& system, double hbar, double center, double half) {
  const double w0 = system.prepotential(point(center));
  const double left = system.prepotential(point(center - half));
  const double right = system.prepotential(point(center + half));
  return std::exp((std::max(left, right) - w0) / hbar);
}

bool box_ok(const SpectrumTable& t) {
  for (std::size_t n = 0; n < t.energies.size(); ++n)
    if (t.flags[n] == LevelFlag::Ok && t.boundary_amplitudes[n] > kWallAmplitude) return false;
  return true;
}

}  // namespace

const char* to_string(LevelFlag flag) { return flag == LevelFlag::Ok ? "ok" : "continuum"; }

std::size_t SpectrumTable::trusted_levels() const {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), LevelFlag::Ok));
}

void validate(const GridSpec& grid) {
  if (!(grid.half_width > 0.0) || !std::isfinite(grid.half_width))
    throw ValidationError("grid half-width must be positive");
  if (grid.levels == 0) throw ValidationError("at least one level must be requested");
  if (grid.points < 16 * grid.levels) {
    std::ostringstream os;
    os << "grid needs at least 16 points per level (" << grid.points << " < " << 16 * grid.levels << ")";
    throw ValidationError(os.str());
  }
}

SpectrumTable solve_spectrum(const PrepotentialSystem& system, double hbar, const GridSpec& grid) {
  if (system.dimension() != 1) throw PreconditionError("grid spectra are limited to one degree of freedom");
  const EquilibriumReport eq = find_equilibrium(system);
  return solve_spectrum(system, hbar, grid, eq.qbar[0]);
}

SpectrumTable solve_spectrum(const PrepotentialSystem& system, double hbar, const GridSpec& grid,
                             double center) {
  if (system.dimension() != 1) throw PreconditionError("grid spectra are limited to one degree of freedom");
  if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ValidationError("hbar must be positive");
  validate(grid);

  const std::size_t m = grid.points;
  const double h = grid.spacing();
  const double lo = center - grid.half_width;
  const double kinetic = hbar * hbar / (2.0 * h * h);

  std::vector<double> x(m), potential(m), diag(m);
  for (std::size_t i = 0; i < m; ++i) {
    x[i] = lo + static_cast<double>(i + 1) * h;
    potential[i] = quantum_potential(system, point(x[i]), hbar);
    diag[i] = 2.0 * kinetic + potential[i];
  }
  const SymmetricTridiagonal t(std::move(diag), std::vector<double>(m - 1, -kinetic));

  SpectrumTable table;
  table.hbar = hbar;
  table.center = center;
  table.grid = grid;
  const std::vector<double> bisected = lowest_eigenvalues(t, grid.levels);

  const double w0 = system.prepotential(point(center));
  std::vector<double> ground(m);
  for (std::size_t i = 0; i < m; ++i) ground[i] = std::exp((system.prepotential(point(x[i])) - w0) / hbar);

  const std::size_t bound = system.bound_state_count(hbar).value_or(std::numeric_limits<std::size_t>::max());
  const double wall_potential = std::min(potential.front(), potential.back());

  for (std::size_t n = 0; n < grid.levels; ++n) {
    const std::vector<double> psi = inverse_iteration(t, bisected[n], 0x5eed + n);
    // Rayleigh quotient in difference form: avoids cancellation in the
    // 2/h^2 diagonal on fine grids.
    double energy = kinetic * (psi.front() * psi.front() + psi.back() * psi.back());
    double amp = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      energy += potential[i] * psi[i] * psi[i];
      if (i + 1 < m) energy += kinetic * (psi[i + 1] - psi[i]) * (psi[i + 1] - psi[i]);
      amp = std::max(amp, std::abs(psi[i]));
    }
    table.energies.push_back(energy);
    table.boundary_amplitudes.push_back(std::max(std::abs(psi.front()), std::abs(psi.back())) / amp);
    const bool continuum = n >= bound || energy >= wall_potential;
    table.flags.push_back(continuum ? LevelFlag::Continuum : LevelFlag::Ok);

    if (n == 0) {
      double dot = 0.0, gg = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        dot += psi[i] * ground[i];
        gg += ground[i] * ground[i];
      }
      table.ground_state_overlap = std::min(1.0, std::abs(dot) / std::sqrt(gg));
    }
    if (!continuum && table.boundary_amplitudes.back() > kWallAmplitude) {
      std::ostringstream os;
      os << "level " << n << " reaches the box wall (relative amplitude "
         << table.boundary_amplitudes.back() << "); enlarge the half-width";
      table.warnings.push_back(os.str());
    }
  }
  table.raw_energies = table.energies;

  const double ratio = std::max(ground.front(), ground.back());
  if (ratio > kGroundWallAmplitude) {
    std::ostringstream os;
    os << "exp(W/hbar) at the box wall is " << ratio << " of its maximum";
    table.warnings.push_back(os.str());
  }
  return table;
}

GridSpec default_grid(const PrepotentialSystem& system, double hbar, std::size_t levels) {
  if (system.dimension() != 1) throw PreconditionError("grid spectra are limited to one degree of freedom");
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  if (levels == 0) throw ValidationError("at least one level must be requested");
  const EquilibriumReport eq = find_equilibrium(system);
  const double center = eq.qbar[0];
  const double freq = std::max(eq.frequencies[0], 1e-8);
  const double width = std::sqrt(hbar / freq);

  // Decay budget: ln(1e12) plus a margin per requested level.
  const double target = std::log(1.0 / kGroundWallAmplitude) + 2.0 * static_cast<double>(levels);
  double half = width;
  while (half < 1e4 && -std::log(ground_wall_ratio(system, hbar, center, half)) < target) half *= 1.25;

  const double top_energy = static_cast<double>(levels) * hbar * freq;
  const double spacing =
      std::min(0.1 * width, 0.1 * hbar / std::sqrt(2.0 * std::max(top_energy, 1e-12)));
  GridSpec grid;
  grid.half_width = half;
  grid.levels = levels;
  grid.points = std::max<std::size_t>(16 * levels, static_cast<std::size_t>(std::ceil(2.0 * half / spacing)));
  return grid;
}

SpectrumTable converge_spectrum(const PrepotentialSystem& system, double hbar,
                                const GridSpec& base_grid, double rel_tol) {
  if (system.dimension() != 1) throw PreconditionError("grid spectra are limited to one degree of freedom");
  if (!(rel_tol > 0.0)) throw ValidationError("relative tolerance must be positive");
  validate(base_grid);
  const EquilibriumReport eq = find_equilibrium(system);
  const double center = eq.qbar[0];
  // Levels near zero converge against the quantum energy unit hbar * E_1.
  const double floor = std::max(1e-12, rel_tol * hbar * std::abs(eq.frequencies[0]));

  GridSpec grid = base_grid;
  SpectrumTable coarse = solve_spectrum(system, hbar, grid, center);
  int growth = 0;
  while (!box_ok(coarse) || ground_wall_ratio(system, hbar, center, grid.half_width) > kGroundWallAmplitude) {
    if (++growth > kMaxBoxGrowth)
      throw ConvergenceError("box did not contain the bound states",
                             "half-width " + std::to_string(grid.half_width));
    grid.half_width *= 1.5;
    grid.points = static_cast<std::size_t>(std::ceil(1.5 * static_cast<double>(grid.points + 1))) - 1;
    coarse = solve_spectrum(system, hbar, grid, center);
  }

  const std::size_t k = grid.levels;
  std::vector<double> previous;
  std::ostringstream diag;
  for (int d = 1; d <= kMaxDoublings; ++d) {
    grid.points = 2 * (grid.points + 1) - 1;  // halves the spacing exactly
    SpectrumTable fine = solve_spectrum(system, hbar, grid, center);
    std::vector<double> extrapolated(k);
    for (std::size_t n = 0; n < k; ++n)
      extrapolated[n] = (4.0 * fine.energies[n] - coarse.energies[n]) / 3.0;

    if (!previous.empty()) {
      std::vector<double> change(k);
      bool done = box_ok(fine);
      for (std::size_t n = 0; n < k; ++n) {
        change[n] = std::abs(extrapolated[n] - previous[n]);
        if (fine.flags[n] == LevelFlag::Ok && change[n] > std::max(rel_tol * std::abs(extrapolated[n]), floor))
          done = false;
      }
      diag << "M=" << grid.points << " max change=" << *std::max_element(change.begin(), change.end()) << "; ";
      if (done) {
        fine.raw_energies = fine.energies;
        fine.energies = extrapolated;
        fine.error_estimates = change;
        fine.refinements = d;
        return fine;
      }
    }
    previous = std::move(extrapolated);
    coarse = std::move(fine);
  }
  throw ConvergenceError("grid spectrum did not converge within 6 doublings", diag.str());
}

}  // namespace qcc
