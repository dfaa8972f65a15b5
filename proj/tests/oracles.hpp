// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations used only by the tests. Nothing here
// calls into the library's solvers.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace qcc::oracle {

using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

inline Vec central_gradient(const std::function<double(const Vec&)>& f, Vec x, double rel = 1e-5) {
  Vec g(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double h = rel * std::max(1.0, std::abs(x[j]));
    const double x0 = x[j];
    x[j] = x0 + h;
    const double up = f(x);
    x[j] = x0 - h;
    const double down = f(x);
    x[j] = x0;
    g[j] = (up - down) / (2 * h);
  }
  return g;
}

inline Mat central_jacobian(const std::function<Vec(const Vec&)>& f, Vec x, double rel = 1e-5) {
  const std::size_t n = x.size();
  Mat jac(n, Vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double h = rel * std::max(1.0, std::abs(x[j]));
    const double x0 = x[j];
    x[j] = x0 + h;
    const Vec up = f(x);
    x[j] = x0 - h;
    const Vec down = f(x);
    x[j] = x0;
    for (std::size_t i = 0; i < n; ++i) jac[i][j] = (up[i] - down[i]) / (2 * h);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) jac[i][j] = jac[j][i] = 0.5 * (jac[i][j] + jac[j][i]);
  return jac;
}

/// Cyclic Jacobi rotations; returns ascending eigenvalues of a symmetric matrix.
inline Vec jacobi_eigenvalues(Mat a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  Vec ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Gradient ascent with a shrinking step until |grad| < tol.
inline Vec gradient_ascent(const std::function<double(const Vec&)>& w,
                           const std::function<Vec(const Vec&)>& grad,
                           const std::function<bool(const Vec&)>& inside, Vec x, double tol = 1e-12) {
  double step = 0.1;
  for (int it = 0; it < 200000; ++it) {
    const Vec g = grad(x);
    double gn = 0.0;
    for (double v : g) gn += v * v;
    if (std::sqrt(gn) < tol) return x;
    while (step > 1e-300) {
      Vec trial = x;
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] += step * g[i];
      if (inside(trial) && w(trial) > w(x)) {
        x = trial;
        step *= 1.2;
        break;
      }
      step *= 0.5;
    }
  }
  return x;
}

/// Physicists' Hermite polynomial H_n(x).
inline double hermite(int n, double x) {
  double h0 = 1.0, h1 = 2 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2 * x * h1 - 2 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

struct Lattice {
  std::vector<int> vec;
  double residual = std::numeric_limits<double>::infinity();
  std::size_t within = 0;
};

/// Every non-negative vector with sum <= max_total, no pruning. Same
/// selection rule as the library: minimal residual, then minimal total, then
/// lexicographically largest.
inline Lattice brute_force_lattice(double target, const Vec& freq, double tol, int max_total) {
  Lattice best;
  std::vector<int> cur(freq.size(), 0);
  const double tie = 1e-12 * std::max(1.0, std::abs(target));
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == freq.size()) {
      double s = 0.0;
      for (std::size_t i = 0; i < freq.size(); ++i) s += cur[i] * freq[i];
      const double r = std::abs(target - s);
      if (r <= tol) ++best.within;
      const int total = std::accumulate(cur.begin(), cur.end(), 0);
      const int best_total = std::accumulate(best.vec.begin(), best.vec.end(), 0);
      bool take = best.vec.empty() || r < best.residual - tie;
      if (!take && std::abs(r - best.residual) <= tie)
        take = total < best_total || (total == best_total && cur > best.vec);
      if (take) {
        best.vec = cur;
        best.residual = r;
      }
      return;
    }
    for (int n = 0; n <= left; ++n) {
      cur[j] = n;
      rec(j + 1, left - n);
    }
    cur[j] = 0;
  };
  rec(0, max_total);
  return best;
}

}  // namespace qcc::oracle
