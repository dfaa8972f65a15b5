// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "error.hpp"

namespace qcc {

SymmetricTridiagonal::SymmetricTridiagonal(std::vector<double> diagonal,
                                           std::vector<double> off_diagonal)
    : diag_(std::move(diagonal)), off_(std::move(off_diagonal)) {
  if (diag_.empty()) throw ValidationError("tridiagonal matrix must be non-empty");
  if (off_.size() + 1 != diag_.size())
    throw ValidationError("off-diagonal must have one element fewer than the diagonal");
  double bmax = 1.0;
  for (double b : off_) bmax = std::max(bmax, b * b);
  pivmin_ = std::numeric_limits<double>::min() * bmax;
}

std::size_t SymmetricTridiagonal::count_below(double x) const {
  std::size_t count = 0;
  double d = diag_[0] - x;
  if (std::abs(d) < pivmin_) d = -pivmin_;
  if (d < 0.0) ++count;
  for (std::size_t i = 1; i < diag_.size(); ++i) {
    d = diag_[i] - x - off_[i - 1] * off_[i - 1] / d;
    if (std::abs(d) < pivmin_) d = -pivmin_;
    if (d < 0.0) ++count;
  }
  return count;
}

double SymmetricTridiagonal::lower_bound() const {
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    const double radius = (i > 0 ? std::abs(off_[i - 1]) : 0.0) + (i < off_.size() ? std::abs(off_[i]) : 0.0);
    lo = std::min(lo, diag_[i] - radius);
  }
  return lo;
}

double SymmetricTridiagonal::upper_bound() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    const double radius = (i > 0 ? std::abs(off_[i - 1]) : 0.0) + (i < off_.size() ? std::abs(off_[i]) : 0.0);
    hi = std::max(hi, diag_[i] + radius);
  }
  return hi;
}

double SymmetricTridiagonal::norm_bound() const {
  return std::max(std::abs(lower_bound()), std::abs(upper_bound()));
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t k) {
  if (k == 0 || k > t.size()) throw ValidationError("requested eigenvalue count out of range");
  const double lo0 = t.lower_bound();
  const double hi0 = t.upper_bound();
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> out;
  out.reserve(k);
  double lo = lo0;
  for (std::size_t j = 0; j < k; ++j) {
    double hi = hi0;
    // Lambda_j is the smallest x with count_below(x) > j.
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi || hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)))
        break;
      if (t.count_below(mid) > j)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

namespace {

// LU with partial pivoting of a general tridiagonal matrix, as in LAPACK's
// dgttrf/dgtts2: dl, d, du are overwritten, du2 holds the second superdiagonal.
struct TridiagonalLU {
  std::vector<double> dl, d, du, du2;
  std::vector<bool> swapped;

  TridiagonalLU(std::vector<double> lower, std::vector<double> diag, std::vector<double> upper,
                double tiny)
      : dl(std::move(lower)), d(std::move(diag)), du(std::move(upper)) {
    const std::size_t n = d.size();
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped.assign(n > 1 ? n - 1 : 0, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d[i]) >= std::abs(dl[i])) {
        if (d[i] == 0.0) d[i] = tiny;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = true;
      }
    }
    for (auto& x : d)
      if (x == 0.0) x = tiny;
  }

  void solve(std::vector<double>& b) const {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!swapped[i]) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n < 2) return;
    b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

void normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  if (s == 0.0 || !std::isfinite(s)) throw SolverError("inverse iteration collapsed", {}, 0.0);
  for (double& x : v) x /= s;
}

}  // namespace

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double eigenvalue,
                                      std::uint64_t seed, int iterations) {
  const std::size_t n = t.size();
  const double tiny = std::numeric_limits<double>::epsilon() * std::max(1.0, t.norm_bound());
  std::vector<double> diag(t.diagonal().begin(), t.diagonal().end());
  for (double& x : diag) x -= eigenvalue;
  std::vector<double> off(t.off_diagonal().begin(), t.off_diagonal().end());
  const TridiagonalLU lu(off, std::move(diag), off, tiny);

  std::mt19937_64 rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = static_cast<double>(rng() >> 11) * 0x1p-53 - 0.5;
  normalize(v);
  for (int it = 0; it < iterations; ++it) {
    lu.solve(v);
    // Rescale before normalizing to keep huge growth finite.
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    if (m > 0.0 && std::isfinite(m))
      for (double& x : v) x /= m;
    normalize(v);
  }
  return v;
}

}  // namespace qcc
