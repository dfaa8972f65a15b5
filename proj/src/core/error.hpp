// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qcc {

enum class ErrorKind {
  Catalog,
  Validation,
  Domain,
  Solver,
  Convergence,
  Input,
  Precondition,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct CatalogError : Error {
  explicit CatalogError(const std::string& w) : Error(ErrorKind::Catalog, w) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& w) : Error(ErrorKind::Validation, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::Domain, w) {}
};
struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::Input, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};

/// Newton/iteration failure; carries the best iterate found.
class SolverError : public Error {
 public:
  SolverError(const std::string& w, std::vector<double> best, double best_grad_norm)
      : Error(ErrorKind::Solver, w), best_(std::move(best)), best_grad_norm_(best_grad_norm) {}
  const std::vector<double>& best_iterate() const noexcept { return best_; }
  double best_grad_norm() const noexcept { return best_grad_norm_; }

 private:
  std::vector<double> best_;
  double best_grad_norm_;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& w, std::string diagnostics)
      : Error(ErrorKind::Convergence, w), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace qcc
