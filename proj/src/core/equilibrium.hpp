// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "systems.hpp"

namespace qcc {

/// Classical equilibrium (maximum of exp(W/hbar)) and its small oscillations.
struct EquilibriumReport {
  Vector qbar;
  double grad_norm = 0.0;
  /// Hessian of W at qbar.
  Matrix hessian;
  /// Eigenvalues of -hessian, ascending.
  Vector frequencies;
  /// Column j is the unit eigenvector belonging to frequencies[j].
  Matrix modes;
  /// Largest |mu_j - frequency_j^2| / max_j frequency_j^2 where mu are the
  /// eigenvalues of the finite-difference Hessian of V_C.
  double vc_hessian_mismatch = 0.0;
  int iterations = 0;
};

struct NewtonOptions {
  double tol = 1e-12;
  int max_iterations = 200;
};

/// Damped Newton on grad W = 0, started from `guess` and kept inside the
/// domain. The result must be a local maximum of W.
EquilibriumReport find_equilibrium(const PrepotentialSystem& system, const Vector& guess,
                                   const NewtonOptions& options = {});
inline EquilibriumReport find_equilibrium(const PrepotentialSystem& system) {
  return find_equilibrium(system, system.default_guess());
}

/// Frequencies and modes at a stationary point (requires |grad W| < 1e-8).
EquilibriumReport normal_modes(const PrepotentialSystem& system, const Vector& qbar);

}  // namespace qcc
