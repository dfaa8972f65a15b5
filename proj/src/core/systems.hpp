// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

using ScalarField = std::function<double(const Vector&)>;
using VectorField = std::function<Vector(const Vector&)>;
using MatrixField = std::function<Matrix(const Vector&)>;

/// A claimed solution of -grad W . grad phi = E phi.
///
/// The label holds the exponents of the elementary excitations the function
/// is built from; products add labels component-wise.
class ClassicalEigenfunction {
 public:
  ClassicalEigenfunction(ScalarField phi, VectorField grad_phi, double eigenvalue,
                         std::vector<int> label, std::string name = {}, bool approximate = false);

  /// phi == 1 with eigenvalue 0 on an r-dimensional system.
  static ClassicalEigenfunction constant(std::size_t dimension);

  double value(const Vector& q) const { return phi_(q); }
  Vector gradient(const Vector& q) const { return grad_(q); }
  double eigenvalue() const noexcept { return eigenvalue_; }
  const std::vector<int>& label() const noexcept { return label_; }
  const std::string& name() const noexcept { return name_; }
  /// True for linearized candidates that are eigenfunctions only to first order.
  bool approximate() const noexcept { return approximate_; }

 private:
  ScalarField phi_;
  VectorField grad_;
  double eigenvalue_;
  std::vector<int> label_;
  std::string name_;
  bool approximate_;
};

/// Closed-form quantum spectrum indexed by mode occupation numbers.
struct ReferenceSpectrum {
  std::size_t modes = 0;
  std::function<double(const std::vector<int>& occupation, double hbar)> energy;
};

/// Everything needed to build a PrepotentialSystem. Optional members may be
/// left empty: missing derivatives fall back to central differences, a
/// missing domain means all of R^r.
struct SystemDefinition {
  std::string name;
  std::size_t dimension = 0;
  std::map<std::string, double> params;
  ScalarField prepotential;
  VectorField gradient;
  MatrixField hessian;
  std::function<bool(const Vector&)> domain;
  /// Largest t > 0 with q + s*dq inside the domain for all s < t.
  std::function<double(const Vector& q, const Vector& dq)> step_limit;
  std::optional<ReferenceSpectrum> reference_spectrum;
  std::vector<ClassicalEigenfunction> reference_eigenfunctions;
  /// Number of discrete levels at a given hbar, when finite.
  std::function<std::size_t(double hbar)> bound_state_count;
  Vector default_guess;
};

/// An immutable multi-particle system defined by its prepotential W.
///
/// All evaluators are pure; instances are safe to share between threads.
class PrepotentialSystem {
 public:
  explicit PrepotentialSystem(SystemDefinition def);

  const std::string& name() const noexcept { return def_.name; }
  std::size_t dimension() const noexcept { return def_.dimension; }
  const std::map<std::string, double>& params() const noexcept { return def_.params; }
  double param(const std::string& key) const;

  bool in_domain(const Vector& q) const;
  /// Throws DomainError when q is outside the validity region.
  void require_domain(const Vector& q) const;
  /// Largest step fraction along dq that stays inside the domain (inf if unbounded).
  double step_limit(const Vector& q, const Vector& dq) const;

  double prepotential(const Vector& q) const;
  Vector gradient(const Vector& q) const;
  Matrix hessian(const Vector& q) const;

  bool has_analytic_gradient() const noexcept { return static_cast<bool>(def_.gradient); }
  bool has_analytic_hessian() const noexcept { return static_cast<bool>(def_.hessian); }

  const std::optional<ReferenceSpectrum>& reference_spectrum() const noexcept {
    return def_.reference_spectrum;
  }
  const std::vector<ClassicalEigenfunction>& reference_eigenfunctions() const noexcept {
    return def_.reference_eigenfunctions;
  }
  std::optional<std::size_t> bound_state_count(double hbar) const;
  Vector default_guess() const;

 private:
  Vector gradient_unchecked(const Vector& q) const;

  SystemDefinition def_;
};

using SystemPtr = std::shared_ptr<const PrepotentialSystem>;

/// Per-coordinate central-difference step used by every fallback.
double difference_step(double x);

/// Builds a catalog system: "harmonic" (omega), "poschl_teller" (g) or
/// "calogero_a" (N, omega, g).
SystemPtr make_system(std::string_view name, const std::map<std::string, double>& params);
std::vector<std::string> catalog_names();

/// V_C(q) = |grad W|^2 / 2.
double classical_potential(const PrepotentialSystem& system, const Vector& q);
/// grad V_C = Hess(W) grad W.
Vector classical_potential_gradient(const PrepotentialSystem& system, const Vector& q);
/// V(q) = V_C(q) + (hbar/2) tr Hess W(q); the ground state energy is zero.
double quantum_potential(const PrepotentialSystem& system, const Vector& q, double hbar);

}  // namespace qcc
