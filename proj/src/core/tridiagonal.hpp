// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qcc {

/// Real symmetric tridiagonal matrix: diagonal a (n), off-diagonal b (n-1).
class SymmetricTridiagonal {
 public:
  SymmetricTridiagonal(std::vector<double> diagonal, std::vector<double> off_diagonal);

  std::size_t size() const noexcept { return diag_.size(); }
  std::span<const double> diagonal() const noexcept { return diag_; }
  std::span<const double> off_diagonal() const noexcept { return off_; }

  /// Number of eigenvalues strictly below x (Sturm sequence via LDL^T pivots).
  std::size_t count_below(double x) const;
  /// Gershgorin enclosure of the spectrum.
  double lower_bound() const;
  double upper_bound() const;
  double norm_bound() const;

 private:
  std::vector<double> diag_;
  std::vector<double> off_;
  double pivmin_;
};

/// The k smallest eigenvalues, ascending, by bisection.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k);

/// Unit eigenvector for an (approximate) eigenvalue by inverse iteration.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      std::uint64_t seed = 0x5eed, int iterations = 3);

}  // namespace qcc
