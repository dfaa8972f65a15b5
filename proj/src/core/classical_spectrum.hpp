// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equilibrium.hpp"
#include "systems.hpp"

namespace qcc {

/// Returned by check_gradient_eigenvector when grad phi vanishes at qbar.
inline constexpr double kNonElementary = -1.0;

struct OperatorResidual {
  double max_abs_residual = 0.0;
  std::vector<Vector> sample_points;
  /// max |phi| over the samples.
  double normalization = 0.0;
};

/// -grad W(q) . grad phi(q)
double apply_operator(const PrepotentialSystem& system, const ClassicalEigenfunction& f,
                      const Vector& q);

/// Seeded quasi-random points in the box qbar + sum_j u_j v_j / sqrt(E_j),
/// |u_j| <= 1, restricted to the domain.
std::vector<Vector> sample_points(const PrepotentialSystem& system, const EquilibriumReport& eq,
                                  std::size_t count, std::uint64_t seed);

OperatorResidual verify_eigenfunction(const PrepotentialSystem& system,
                                      const ClassicalEigenfunction& f,
                                      const EquilibriumReport& eq, std::size_t samples,
                                      std::uint64_t seed);
OperatorResidual verify_eigenfunction(const PrepotentialSystem& system,
                                      const ClassicalEigenfunction& f, std::size_t samples,
                                      std::uint64_t seed);

/// phi_f * phi_g with eigenvalue E_f + E_g.
ClassicalEigenfunction product(const ClassicalEigenfunction& f, const ClassicalEigenfunction& g);

/// |phi(qbar)|
double check_vanishing(const ClassicalEigenfunction& f, const Vector& qbar);

/// |(-W~) v - E v| / |v| with v = grad phi(qbar) / normalization, or
/// kNonElementary when |v| < 1e-10.
double check_gradient_eigenvector(const PrepotentialSystem& system, const ClassicalEigenfunction& f,
                                  const EquilibriumReport& eq, double normalization = 1.0);

/// Linearized excitations phi_j(q) = v_j . (q - qbar), one per normal mode.
std::vector<ClassicalEigenfunction> elementary_candidates(const EquilibriumReport& eq);

struct VerificationEntry {
  std::string label;
  std::vector<int> exponents;
  double eigenvalue = 0.0;
  bool approximate = false;
  double residual = 0.0;
  double normalization = 0.0;
  double vanishing = 0.0;
  /// kNonElementary for functions with vanishing gradient at qbar.
  double hessian_residual = 0.0;
};

/// Verifies the system's closed-form registry (or the linearized candidates
/// when it has none) together with every pairwise product.
std::vector<VerificationEntry> verify_suite(const PrepotentialSystem& system,
                                            const EquilibriumReport& eq, std::size_t samples,
                                            std::uint64_t seed);

}  // namespace qcc
