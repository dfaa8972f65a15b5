// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "classical_spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "error.hpp"

namespace qcc {

namespace {

constexpr std::array<int, 24> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                         41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

double radical_inverse(std::uint64_t index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f /= base;
  }
  return result;
}

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

}  // namespace

double apply_operator(const PrepotentialSystem& system, const ClassicalEigenfunction& f,
                      const Vector& q) {
  system.require_domain(q);
  return -system.gradient(q).dot(f.gradient(q));
}

std::vector<Vector> sample_points(const PrepotentialSystem& system, const EquilibriumReport& eq,
                                  std::size_t count, std::uint64_t seed) {
  if (count == 0) throw ValidationError("sample count must be at least 1");
  const auto r = eq.qbar.size();
  if (static_cast<std::size_t>(r) > kPrimes.size())
    throw ValidationError("quasi-random sampling supports at most 24 dimensions");

  // Cranley-Patterson rotated Halton sequence.
  std::mt19937_64 rng(seed);
  std::vector<double> shift(static_cast<std::size_t>(r));
  for (auto& s : shift) s = unit_double(rng);

  Vector scale(r);
  const double top = eq.frequencies.size() ? eq.frequencies.cwiseAbs().maxCoeff() : 1.0;
  for (Eigen::Index j = 0; j < r; ++j) {
    const double e = eq.frequencies[j];
    scale[j] = e > 1e-12 * std::max(1.0, top) ? 1.0 / std::sqrt(e) : 1.0;
  }

  std::vector<Vector> points;
  points.reserve(count);
  const std::size_t max_attempts = 100 * count;
  std::size_t attempts = 0;
  for (std::uint64_t index = 1; points.size() < count; ++index) {
    if (attempts++ >= max_attempts) {
      std::ostringstream os;
      os << "more than 99% of sample points fell outside the domain (" << points.size() << " of "
         << count << " accepted)";
      throw DomainError(os.str());
    }
    Vector q = eq.qbar;
    for (Eigen::Index j = 0; j < r; ++j) {
      double u = radical_inverse(index, kPrimes[static_cast<std::size_t>(j)]) +
                 shift[static_cast<std::size_t>(j)];
      u -= std::floor(u);
      q += eq.modes.col(j) * ((2.0 * u - 1.0) * scale[j]);
    }
    if (system.in_domain(q)) points.push_back(std::move(q));
  }
  return points;
}

OperatorResidual verify_eigenfunction(const PrepotentialSystem& system,
                                      const ClassicalEigenfunction& f,
                                      const EquilibriumReport& eq, std::size_t samples,
                                      std::uint64_t seed) {
  OperatorResidual out;
  out.sample_points = sample_points(system, eq, samples, seed);
  for (const auto& q : out.sample_points) {
    const double phi = f.value(q);
    const double res = std::abs(apply_operator(system, f, q) - f.eigenvalue() * phi);
    out.max_abs_residual = std::max(out.max_abs_residual, res);
    out.normalization = std::max(out.normalization, std::abs(phi));
  }
  return out;
}

OperatorResidual verify_eigenfunction(const PrepotentialSystem& system,
                                      const ClassicalEigenfunction& f, std::size_t samples,
                                      std::uint64_t seed) {
  return verify_eigenfunction(system, f, find_equilibrium(system), samples, seed);
}

ClassicalEigenfunction product(const ClassicalEigenfunction& f, const ClassicalEigenfunction& g) {
  std::vector<int> label = f.label();
  const auto& other = g.label();
  if (label.size() < other.size()) label.resize(other.size(), 0);
  for (std::size_t i = 0; i < other.size(); ++i) label[i] += other[i];
  std::string name = f.name() + "*" + g.name();
  return ClassicalEigenfunction(
      [f, g](const Vector& q) { return f.value(q) * g.value(q); },
      [f, g](const Vector& q) { return (f.gradient(q) * g.value(q) + g.gradient(q) * f.value(q)).eval(); },
      f.eigenvalue() + g.eigenvalue(), std::move(label), std::move(name),
      f.approximate() || g.approximate());
}

double check_vanishing(const ClassicalEigenfunction& f, const Vector& qbar) {
  return std::abs(f.value(qbar));
}

double check_gradient_eigenvector(const PrepotentialSystem& system, const ClassicalEigenfunction& f,
                                  const EquilibriumReport& eq, double normalization) {
  system.require_domain(eq.qbar);
  const double norm = normalization > 0.0 ? normalization : 1.0;
  const Vector v = f.gradient(eq.qbar) / norm;
  const double vn = v.norm();
  if (vn < 1e-10) return kNonElementary;
  return ((-eq.hessian) * v - f.eigenvalue() * v).norm() / vn;
}

std::vector<ClassicalEigenfunction> elementary_candidates(const EquilibriumReport& eq) {
  std::vector<ClassicalEigenfunction> out;
  const auto r = eq.qbar.size();
  for (Eigen::Index j = 0; j < r; ++j) {
    const Vector v = eq.modes.col(j);
    const Vector center = eq.qbar;
    std::vector<int> label(static_cast<std::size_t>(r), 0);
    label[static_cast<std::size_t>(j)] = 1;
    out.emplace_back([v, center](const Vector& q) { return v.dot(q - center); },
                     [v](const Vector&) { return v; }, std::max(0.0, eq.frequencies[j]),
                     std::move(label), "elementary-" + std::to_string(j + 1), true);
  }
  return out;
}

std::vector<VerificationEntry> verify_suite(const PrepotentialSystem& system,
                                            const EquilibriumReport& eq, std::size_t samples,
                                            std::uint64_t seed) {
  std::vector<ClassicalEigenfunction> base = system.reference_eigenfunctions();
  if (base.empty()) base = elementary_candidates(eq);

  std::vector<ClassicalEigenfunction> all = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) all.push_back(product(base[i], base[j]));

  std::vector<VerificationEntry> entries;
  entries.reserve(all.size());
  for (const auto& f : all) {
    const OperatorResidual res = verify_eigenfunction(system, f, eq, samples, seed);
    VerificationEntry e;
    e.label = f.name();
    e.exponents = f.label();
    e.eigenvalue = f.eigenvalue();
    e.approximate = f.approximate();
    e.residual = res.max_abs_residual;
    e.normalization = res.normalization;
    e.vanishing = check_vanishing(f, eq.qbar);
    e.hessian_residual = check_gradient_eigenvector(system, f, eq, res.normalization);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace qcc
