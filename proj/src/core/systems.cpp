// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace qcc {

ClassicalEigenfunction::ClassicalEigenfunction(ScalarField phi, VectorField grad_phi,
                                               double eigenvalue, std::vector<int> label,
                                               std::string name, bool approximate)
    : phi_(std::move(phi)),
      grad_(std::move(grad_phi)),
      eigenvalue_(eigenvalue),
      label_(std::move(label)),
      name_(std::move(name)),
      approximate_(approximate) {
  if (!phi_ || !grad_) throw ValidationError("classical eigenfunction needs phi and its gradient");
  if (!(eigenvalue_ >= 0.0)) throw ValidationError("classical eigenvalue must be non-negative");
  if (std::any_of(label_.begin(), label_.end(), [](int n) { return n < 0; }))
    throw ValidationError("eigenfunction label exponents must be non-negative");
}

ClassicalEigenfunction ClassicalEigenfunction::constant(std::size_t dimension) {
  return ClassicalEigenfunction([](const Vector&) { return 1.0; },
                                [dimension](const Vector&) { return Vector::Zero(dimension).eval(); },
                                0.0, std::vector<int>(dimension, 0), "1");
}

double difference_step(double x) { return 1e-5 * std::max(1.0, std::abs(x)); }

PrepotentialSystem::PrepotentialSystem(SystemDefinition def) : def_(std::move(def)) {
  if (def_.dimension == 0) throw ValidationError("system dimension must be positive");
  if (!def_.prepotential) throw ValidationError("system needs a prepotential W");
  for (const auto& [key, value] : def_.params) {
    if (key == "hbar" || key == "h" || key == "planck")
      throw ValidationError("prepotential must not depend on hbar (parameter '" + key +
                            "'); only hbar-independent W with a finite classical limit is supported");
    if (!std::isfinite(value)) throw ValidationError("parameter '" + key + "' is not finite");
  }
  if (def_.default_guess.size() != 0 &&
      static_cast<std::size_t>(def_.default_guess.size()) != def_.dimension)
    throw ValidationError("default guess has wrong dimension");
}

double PrepotentialSystem::param(const std::string& key) const {
  auto it = def_.params.find(key);
  if (it == def_.params.end()) throw ValidationError("system has no parameter '" + key + "'");
  return it->second;
}

bool PrepotentialSystem::in_domain(const Vector& q) const {
  if (static_cast<std::size_t>(q.size()) != def_.dimension) return false;
  if (!q.allFinite()) return false;
  return !def_.domain || def_.domain(q);
}

void PrepotentialSystem::require_domain(const Vector& q) const {
  if (static_cast<std::size_t>(q.size()) != def_.dimension) {
    std::ostringstream os;
    os << "point has dimension " << q.size() << ", system '" << def_.name << "' has "
       << def_.dimension;
    throw DomainError(os.str());
  }
  if (!in_domain(q)) throw DomainError("point outside the domain of system '" + def_.name + "'");
}

double PrepotentialSystem::step_limit(const Vector& q, const Vector& dq) const {
  if (!def_.step_limit) return std::numeric_limits<double>::infinity();
  return def_.step_limit(q, dq);
}

double PrepotentialSystem::prepotential(const Vector& q) const {
  require_domain(q);
  return def_.prepotential(q);
}

Vector PrepotentialSystem::gradient_unchecked(const Vector& q) const {
  if (def_.gradient) return def_.gradient(q);
  Vector g(q.size());
  Vector x = q;
  for (Eigen::Index j = 0; j < q.size(); ++j) {
    const double h = difference_step(q[j]);
    x[j] = q[j] + h;
    const double up = def_.prepotential(x);
    x[j] = q[j] - h;
    const double down = def_.prepotential(x);
    x[j] = q[j];
    g[j] = (up - down) / (2.0 * h);
  }
  return g;
}

Vector PrepotentialSystem::gradient(const Vector& q) const {
  require_domain(q);
  return gradient_unchecked(q);
}

Matrix PrepotentialSystem::hessian(const Vector& q) const {
  require_domain(q);
  if (def_.hessian) return def_.hessian(q);
  const auto n = q.size();
  Matrix h(n, n);
  Vector x = q;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double step = def_.gradient ? difference_step(q[j]) : 1e-4 * std::max(1.0, std::abs(q[j]));
    x[j] = q[j] + step;
    const Vector up = gradient_unchecked(x);
    x[j] = q[j] - step;
    const Vector down = gradient_unchecked(x);
    x[j] = q[j];
    h.col(j) = (up - down) / (2.0 * step);
  }
  return (0.5 * (h + h.transpose())).eval();
}

std::optional<std::size_t> PrepotentialSystem::bound_state_count(double hbar) const {
  if (!def_.bound_state_count) return std::nullopt;
  return def_.bound_state_count(hbar);
}

Vector PrepotentialSystem::default_guess() const {
  if (def_.default_guess.size() != 0) return def_.default_guess;
  return Vector::Zero(static_cast<Eigen::Index>(def_.dimension));
}

double classical_potential(const PrepotentialSystem& system, const Vector& q) {
  return 0.5 * system.gradient(q).squaredNorm();
}

Vector classical_potential_gradient(const PrepotentialSystem& system, const Vector& q) {
  return system.hessian(q) * system.gradient(q);
}

double quantum_potential(const PrepotentialSystem& system, const Vector& q, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
  return classical_potential(system, q) + 0.5 * hbar * system.hessian(q).trace();
}

namespace {

using Params = std::map<std::string, double>;

double positive_param(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ValidationError("missing parameter '" + key + "'");
  if (!(it->second > 0.0) || !std::isfinite(it->second))
    throw ValidationError("parameter '" + key + "' must be positive");
  return it->second;
}

void reject_unknown(const Params& params, std::initializer_list<const char*> known,
                    std::string_view system) {
  for (const auto& [key, value] : params) {
    if (key == "hbar")
      throw ValidationError("prepotential must not depend on hbar; drop parameter 'hbar'");
    bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) { return key == k; });
    if (!ok)
      throw ValidationError("unknown parameter '" + key + "' for system '" + std::string(system) + "'");
  }
}

SystemPtr make_harmonic(const Params& params) {
  reject_unknown(params, {"omega"}, "harmonic");
  const double omega = positive_param(params, "omega");

  SystemDefinition def;
  def.name = "harmonic";
  def.dimension = 1;
  def.params = {{"omega", omega}};
  def.prepotential = [omega](const Vector& q) { return -0.5 * omega * q[0] * q[0]; };
  def.gradient = [omega](const Vector& q) { return Vector::Constant(1, -omega * q[0]).eval(); };
  def.hessian = [omega](const Vector&) { return Matrix::Constant(1, 1, -omega).eval(); };
  def.reference_spectrum = ReferenceSpectrum{
      1, [omega](const std::vector<int>& n, double hbar) { return n.at(0) * hbar * omega; }};
  // omega^{n/2} q^n, E = n omega
  for (int n = 1; n <= 4; ++n) {
    const double scale = std::pow(omega, 0.5 * n);
    def.reference_eigenfunctions.emplace_back(
        [n, scale](const Vector& q) { return scale * std::pow(q[0], n); },
        [n, scale](const Vector& q) {
          return Vector::Constant(1, scale * n * std::pow(q[0], n - 1)).eval();
        },
        n * omega, std::vector<int>{n}, "q^" + std::to_string(n));
  }
  return std::make_shared<const PrepotentialSystem>(std::move(def));
}

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

SystemPtr make_poschl_teller(const Params& params) {
  reject_unknown(params, {"g"}, "poschl_teller");
  const double g = positive_param(params, "g");

  SystemDefinition def;
  def.name = "poschl_teller";
  def.dimension = 1;
  def.params = {{"g", g}};
  def.prepotential = [g](const Vector& q) { return -g * log_cosh(q[0]); };
  def.gradient = [g](const Vector& q) { return Vector::Constant(1, -g * std::tanh(q[0])).eval(); };
  def.hessian = [g](const Vector& q) {
    const double c = std::cosh(q[0]);
    return Matrix::Constant(1, 1, -g / (c * c)).eval();
  };
  // Discrete levels are n = 0, 1, ... with g/hbar - n > 0.
  def.bound_state_count = [g](double hbar) {
    return static_cast<std::size_t>(std::ceil(g / hbar));
  };
  def.reference_spectrum = ReferenceSpectrum{
      1, [g](const std::vector<int>& occ, double hbar) {
        const double n = occ.at(0);
        if (!(g / hbar - n > 0.0)) throw InputError("level above the Poschl-Teller bound-state count");
        return g * n * hbar - 0.5 * n * n * hbar * hbar;
      }};
  // g^n sinh^n q, E = g n
  for (int n = 1; n <= 4; ++n) {
    const double scale = std::pow(g, n);
    def.reference_eigenfunctions.emplace_back(
        [n, scale](const Vector& q) { return scale * std::pow(std::sinh(q[0]), n); },
        [n, scale](const Vector& q) {
          return Vector::Constant(1, scale * n * std::pow(std::sinh(q[0]), n - 1) * std::cosh(q[0]))
              .eval();
        },
        n * g, std::vector<int>{n}, "sinh^" + std::to_string(n));
  }
  return std::make_shared<const PrepotentialSystem>(std::move(def));
}

SystemPtr make_calogero_a(const Params& params) {
  reject_unknown(params, {"N", "omega", "g"}, "calogero_a");
  const double n_raw = positive_param(params, "N");
  if (n_raw != std::floor(n_raw) || n_raw < 2.0 || n_raw > 64.0)
    throw ValidationError("calogero_a needs an integer particle count 2 <= N <= 64");
  const auto N = static_cast<Eigen::Index>(n_raw);
  const double omega = positive_param(params, "omega");
  const double g = positive_param(params, "g");

  SystemDefinition def;
  def.name = "calogero_a";
  def.dimension = static_cast<std::size_t>(N);
  def.params = {{"N", n_raw}, {"omega", omega}, {"g", g}};
  def.prepotential = [=](const Vector& q) {
    double w = -0.5 * omega * q.squaredNorm();
    for (Eigen::Index j = 0; j < N; ++j)
      for (Eigen::Index k = j + 1; k < N; ++k) w += g * std::log(std::abs(q[j] - q[k]));
    return w;
  };
  def.gradient = [=](const Vector& q) {
    Vector grad = -omega * q;
    for (Eigen::Index j = 0; j < N; ++j)
      for (Eigen::Index k = j + 1; k < N; ++k) {
        const double inv = g / (q[j] - q[k]);
        grad[j] += inv;
        grad[k] -= inv;
      }
    return grad;
  };
  def.hessian = [=](const Vector& q) {
    Matrix h = Matrix::Identity(N, N) * -omega;
    for (Eigen::Index j = 0; j < N; ++j)
      for (Eigen::Index k = j + 1; k < N; ++k) {
        const double d = q[j] - q[k];
        const double c = g / (d * d);
        h(j, j) -= c;
        h(k, k) -= c;
        h(j, k) += c;
        h(k, j) += c;
      }
    return h;
  };
  // Ordered sector q_1 < q_2 < ... < q_N.
  def.domain = [N](const Vector& q) {
    for (Eigen::Index j = 0; j + 1 < N; ++j)
      if (!(q[j] < q[j + 1])) return false;
    return true;
  };
  def.step_limit = [N](const Vector& q, const Vector& dq) {
    double t = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j + 1 < N; ++j) {
      const double closing = dq[j] - dq[j + 1];
      if (closing > 0.0) t = std::min(t, (q[j + 1] - q[j]) / closing);
    }
    return t;
  };
  def.reference_spectrum = ReferenceSpectrum{
      static_cast<std::size_t>(N), [omega, N](const std::vector<int>& occ, double hbar) {
        if (static_cast<Eigen::Index>(occ.size()) != N)
          throw InputError("occupation vector length must equal N");
        double e = 0.0;
        for (Eigen::Index k = 0; k < N; ++k) e += static_cast<double>(k + 1) * occ[k];
        return hbar * omega * e;
      }};
  Vector guess(N);
  const double scale = std::sqrt(g / omega);
  for (Eigen::Index j = 0; j < N; ++j) guess[j] = scale * (static_cast<double>(j) - 0.5 * (N - 1));
  def.default_guess = guess;
  return std::make_shared<const PrepotentialSystem>(std::move(def));
}

}  // namespace

std::vector<std::string> catalog_names() { return {"harmonic", "poschl_teller", "calogero_a"}; }

SystemPtr make_system(std::string_view name, const std::map<std::string, double>& params) {
  if (name == "harmonic") return make_harmonic(params);
  if (name == "poschl_teller") return make_poschl_teller(params);
  if (name == "calogero_a") return make_calogero_a(params);
  if (name == "hydrogen" || name == "coulomb")
    throw CatalogError("system '" + std::string(name) +
                       "' has no classical equilibrium (its prepotential diverges as hbar -> 0)");
  throw CatalogError("unknown system '" + std::string(name) +
                     "' (known: harmonic, poschl_teller, calogero_a)");
}

}  // namespace qcc
