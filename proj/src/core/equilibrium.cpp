// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace qcc {

namespace {

std::vector<double> to_std(const Vector& v) { return {v.data(), v.data() + v.size()}; }

// Flip so the largest-magnitude component (first one on ties) is positive.
void fix_sign(Eigen::Ref<Vector> v) {
  Eigen::Index arg = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[arg]) + 1e-12) arg = i;
  if (v[arg] < 0.0) v = -v;
}

bool lexicographically_greater(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) <= 1e-12) continue;
    return a[i] > b[i];
  }
  return false;
}

Matrix vc_hessian_fd(const PrepotentialSystem& system, const Vector& q) {
  const auto n = q.size();
  Matrix h(n, n);
  Vector x = q;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double step = difference_step(q[j]);
    x[j] = q[j] + step;
    const Vector up = classical_potential_gradient(system, x);
    x[j] = q[j] - step;
    const Vector down = classical_potential_gradient(system, x);
    x[j] = q[j];
    h.col(j) = (up - down) / (2.0 * step);
  }
  return 0.5 * (h + h.transpose());
}

}  // namespace

EquilibriumReport normal_modes(const PrepotentialSystem& system, const Vector& qbar) {
  system.require_domain(qbar);
  const Vector grad = system.gradient(qbar);
  if (!(grad.norm() < 1e-8)) {
    std::ostringstream os;
    os << "normal modes need a stationary point; |grad W| = " << grad.norm();
    throw PreconditionError(os.str());
  }

  EquilibriumReport report;
  report.qbar = qbar;
  report.grad_norm = grad.norm();
  report.hessian = system.hessian(qbar);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(-report.hessian);
  if (eig.info() != Eigen::Success) throw SolverError("Hessian eigensolve failed", to_std(qbar), grad.norm());
  const auto n = qbar.size();
  Vector values = eig.eigenvalues();
  Matrix vectors = eig.eigenvectors();
  for (Eigen::Index j = 0; j < n; ++j) fix_sign(vectors.col(j));

  // Ascending; degenerate frequencies ordered by lexicographically largest eigenvector.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (std::abs(values[a] - values[b]) > 1e-10 * scale) return values[a] < values[b];
    return lexicographically_greater(vectors.col(a), vectors.col(b));
  });
  report.frequencies.resize(n);
  report.modes.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    report.frequencies[j] = values[order[static_cast<std::size_t>(j)]];
    report.modes.col(j) = vectors.col(order[static_cast<std::size_t>(j)]);
  }

  // The Hessian of V_C at an equilibrium is the square of the Hessian of W.
  Eigen::SelfAdjointEigenSolver<Matrix> vc(vc_hessian_fd(system, qbar), Eigen::EigenvaluesOnly);
  Vector squared = report.frequencies.array().square();
  std::sort(squared.data(), squared.data() + n);
  const double sq_scale = std::max(squared.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  report.vc_hessian_mismatch = (vc.eigenvalues() - squared).cwiseAbs().maxCoeff() / sq_scale;
  const double allowed = system.has_analytic_hessian() ? 1e-6 : 1e-3;
  if (!(report.vc_hessian_mismatch <= allowed)) {
    std::ostringstream os;
    os << "Hessian of V_C does not match the squared Hessian of W (relative mismatch "
       << report.vc_hessian_mismatch << ")";
    throw SolverError(os.str(), to_std(qbar), report.grad_norm);
  }
  return report;
}

EquilibriumReport find_equilibrium(const PrepotentialSystem& system, const Vector& guess,
                                   const NewtonOptions& options) {
  if (!(options.tol > 0.0)) throw ValidationError("equilibrium tolerance must be positive");
  system.require_domain(guess);

  Vector q = guess;
  Vector grad = system.gradient(q);
  double gnorm = grad.norm();
  Vector best = q;
  double best_norm = gnorm;
  int it = 0;

  for (; it < options.max_iterations && gnorm > options.tol; ++it) {
    // Newton step for grad W = 0 with the Hessian forced negative definite,
    // so the direction always climbs W.
    const Matrix hess = system.hessian(q);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hess);
    const Vector lambda = eig.eigenvalues();
    const double floor = 1e-12 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
    const Vector coeffs = eig.eigenvectors().transpose() * grad;
    Vector dq = Vector::Zero(q.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k)
      dq += eig.eigenvectors().col(k) * (coeffs[k] / std::max(std::abs(lambda[k]), floor));

    double t = std::min(1.0, 0.5 * system.step_limit(q, dq));
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving, t *= 0.5) {
      const Vector trial = q + t * dq;
      if (!system.in_domain(trial)) continue;
      const Vector trial_grad = system.gradient(trial);
      const double trial_norm = trial_grad.norm();
      if (trial_norm * trial_norm <= (1.0 - 1e-4 * t) * gnorm * gnorm ||
          (trial_norm < gnorm && halving > 30)) {
        q = trial;
        grad = trial_grad;
        gnorm = trial_norm;
        accepted = true;
        break;
      }
    }
    if (gnorm < best_norm) {
      best = q;
      best_norm = gnorm;
    }
    if (!accepted) break;
  }

  if (!(best_norm <= options.tol)) {
    std::ostringstream os;
    os << "equilibrium search did not converge after " << it << " iterations (best |grad W| = "
       << best_norm << ", tol " << options.tol << ")";
    throw SolverError(os.str(), to_std(best), best_norm);
  }

  EquilibriumReport report = normal_modes(system, best);
  report.iterations = it;
  if (report.frequencies.size() > 0 && report.frequencies.minCoeff() < -1e-10) {
    std::ostringstream os;
    os << "stationary point is not a maximum of W (lowest frequency " << report.frequencies.minCoeff()
       << ")";
    throw SolverError(os.str(), to_std(best), best_norm);
  }
  return report;
}

}  // namespace qcc
