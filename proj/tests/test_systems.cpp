// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "error.hpp"
#include "oracles.hpp"
#include "systems.hpp"

using namespace qcc;

namespace {

Vector v1(double x) { return Vector::Constant(1, x); }

oracle::Vec to_vec(const Vector& v) { return {v.data(), v.data() + v.size()}; }
Vector from_vec(const oracle::Vec& v) { return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())); }

std::vector<SystemPtr> catalog() {
  return {make_system("harmonic", {{"omega", 1.3}}), make_system("poschl_teller", {{"g", 0.8}}),
          make_system("calogero_a", {{"N", 3}, {"omega", 1.0}, {"g", 1.0}}),
          make_system("calogero_a", {{"N", 5}, {"omega", 0.7}, {"g", 2.5}})};
}

// Interior points: 1D uniform in [-3, 3]; Calogero sorted with a minimum gap.
Vector random_interior(const PrepotentialSystem& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  Vector q(static_cast<Eigen::Index>(s.dimension()));
  for (auto& x : q) x = u(rng);
  if (s.dimension() > 1) {
    std::sort(q.data(), q.data() + q.size());
    for (Eigen::Index j = 1; j < q.size(); ++j) q[j] = std::max(q[j], q[j - 1] + 0.2);
  }
  return q;
}

}  // namespace

TEST_CASE("make_system builds the catalog prepotentials") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  CHECK(ho->dimension() == 1);
  for (double q : {-2.0, 0.0, 0.5, 3.0}) CHECK(ho->prepotential(v1(q)) == doctest::Approx(-q * q / 2).epsilon(1e-15));

  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  for (double q : {-30.0, -1.0, 0.0, 0.7, 25.0})
    CHECK(pt->prepotential(v1(q)) == doctest::Approx(-std::log(std::cosh(q))).epsilon(1e-14));

  const auto cal = make_system("calogero_a", {{"N", 3}, {"omega", 1.0}, {"g", 1.0}});
  CHECK(cal->dimension() == 3);
  Vector q(3);
  q << 1, 2, 3;
  // -(1 + 4 + 9)/2 + log 1 + log 2 + log 1
  CHECK(cal->prepotential(q) == doctest::Approx(-7.0 + std::log(2.0)).epsilon(1e-15));
  CHECK(cal->prepotential(q) == doctest::Approx(-6.3069).epsilon(1e-4));
}

TEST_CASE("make_system rejects bad names and parameters") {
  CHECK_THROWS_AS(make_system("morse", {}), CatalogError);
  CHECK_THROWS_AS(make_system("hydrogen", {}), CatalogError);
  CHECK_THROWS_AS(make_system("harmonic", {}), ValidationError);
  CHECK_THROWS_AS(make_system("harmonic", {{"omega", 0.0}}), ValidationError);
  CHECK_THROWS_AS(make_system("poschl_teller", {{"g", -1.0}}), ValidationError);
  CHECK_THROWS_AS(make_system("harmonic", {{"omega", 1.0}, {"hbar", 0.1}}), ValidationError);
  CHECK_THROWS_AS(make_system("harmonic", {{"omega", 1.0}, {"beta", 2.0}}), ValidationError);
  CHECK_THROWS_AS(make_system("calogero_a", {{"N", 2.5}, {"omega", 1.0}, {"g", 1.0}}), ValidationError);
  CHECK_THROWS_AS(make_system("calogero_a", {{"N", 1}, {"omega", 1.0}, {"g", 1.0}}), ValidationError);
  CHECK_THROWS_AS(make_system("calogero_a", {{"N", 3}, {"omega", 1.0}}), ValidationError);
}

TEST_CASE("classical potential") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  CHECK(classical_potential(*ho, v1(2.0)) == doctest::Approx(2.0));
  CHECK(classical_potential(*ho, v1(0.0)) == 0.0);

  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  CHECK(classical_potential(*pt, v1(std::log(1.0 + std::sqrt(2.0)))) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(classical_potential(*pt, v1(0.0)) == 0.0);

  const auto cal = make_system("calogero_a", {{"N", 3}, {"omega", 1.0}, {"g", 1.0}});
  Vector qbar(3);
  qbar << -std::sqrt(1.5), 0.0, std::sqrt(1.5);
  CHECK(classical_potential(*cal, qbar) == doctest::Approx(0.0).epsilon(1e-28));

  Vector outside(3);
  outside << 1, 0, 2;
  CHECK_THROWS_AS(classical_potential(*cal, outside), DomainError);
  CHECK_THROWS_AS(classical_potential(*cal, v1(0.0)), DomainError);
}

TEST_CASE("quantum potential") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  CHECK(quantum_potential(*ho, v1(0.0), 1.0) == doctest::Approx(-0.5));
  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  CHECK(quantum_potential(*pt, v1(0.0), 0.5) == doctest::Approx(-0.25));
  // closed form: -g(g + hbar)/(2 cosh^2 q) + g^2/2
  for (double q : {-2.0, 0.3, 1.7}) {
    const double c = std::cosh(q);
    CHECK(quantum_potential(*pt, v1(q), 0.3) == doctest::Approx(-1.3 / (2 * c * c) + 0.5).epsilon(1e-14));
  }
  CHECK_THROWS_AS(quantum_potential(*pt, v1(0.0), 0.0), ValidationError);

  SUBCASE("V - V_C is linear in hbar with slope tr(Hess W)/2") {
    for (const auto& s : catalog()) {
      std::mt19937_64 rng(11);
      const Vector q = random_interior(*s, rng);
      const double vc = classical_potential(*s, q);
      const double slope = 0.5 * s->hessian(q).trace();
      for (double hbar : {1.0, 0.1, 1e-3, 1e-6}) {
        const double diff = quantum_potential(*s, q, hbar) - vc;
        CHECK(diff == doctest::Approx(slope * hbar).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("analytic derivatives agree with central differences at random interior points") {
  for (const auto& s : catalog()) {
    CAPTURE(s->name());
    std::mt19937_64 rng(2026);
    auto w = [&](const oracle::Vec& x) { return s->prepotential(from_vec(x)); };
    auto grad = [&](const oracle::Vec& x) { return to_vec(s->gradient(from_vec(x))); };
    for (int trial = 0; trial < 100; ++trial) {
      const Vector q = random_interior(*s, rng);
      const Vector g = s->gradient(q);
      const oracle::Vec fd = oracle::central_gradient(w, to_vec(q));
      const double scale = std::max(1.0, g.norm());
      for (Eigen::Index j = 0; j < g.size(); ++j) CHECK(std::abs(g[j] - fd[static_cast<std::size_t>(j)]) / scale < 1e-6);

      const Matrix h = s->hessian(q);
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      const oracle::Mat fdh = oracle::central_jacobian(grad, to_vec(q));
      const double hscale = std::max(1.0, h.cwiseAbs().maxCoeff());
      for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
          CHECK(std::abs(h(i, j) - fdh[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) / hscale < 1e-5);
    }
  }
}

TEST_CASE("calogero prepotential diverges at the sector walls") {
  const auto cal = make_system("calogero_a", {{"N", 3}, {"omega", 1.0}, {"g", 1.0}});
  double previous = std::numeric_limits<double>::infinity();
  for (double gap : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
    Vector q(3);
    q << -1.0, 0.5, 0.5 + gap;
    const double w = cal->prepotential(q);
    CHECK(w < previous);
    previous = w;
  }
  CHECK(previous < -13.0);
  Vector touching(3);
  touching << -1.0, 0.5, 0.5;
  CHECK_FALSE(cal->in_domain(touching));
  CHECK_THROWS_AS(cal->prepotential(touching), DomainError);
}

TEST_CASE("user-defined systems fall back to finite differences") {
  SystemDefinition def;
  def.name = "quartic";
  def.dimension = 2;
  def.prepotential = [](const Vector& q) { return -0.5 * q.squaredNorm() - 0.25 * std::pow(q[0], 4) - q[0] * q[1] * 0.1; };
  const PrepotentialSystem s(def);
  CHECK_FALSE(s.has_analytic_gradient());
  Vector q(2);
  q << 0.4, -1.2;
  Vector exact(2);
  exact << -q[0] - std::pow(q[0], 3) - 0.1 * q[1], -q[1] - 0.1 * q[0];
  CHECK((s.gradient(q) - exact).norm() < 1e-8);
  Matrix hess(2, 2);
  hess << -1 - 3 * q[0] * q[0], -0.1, -0.1, -1;
  CHECK((s.hessian(q) - hess).cwiseAbs().maxCoeff() < 1e-5);

  SystemDefinition bad = def;
  bad.params["hbar"] = 0.1;
  CHECK_THROWS_AS(PrepotentialSystem{bad}, ValidationError);
}

TEST_CASE("registry eigenfunctions carry consistent gradients") {
  for (const auto& s : catalog()) {
    std::mt19937_64 rng(5);
    for (const auto& f : s->reference_eigenfunctions()) {
      CHECK(f.eigenvalue() >= 0.0);
      auto phi = [&](const oracle::Vec& x) { return f.value(from_vec(x)); };
      for (int trial = 0; trial < 20; ++trial) {
        Vector q = random_interior(*s, rng) * 0.5;
        const Vector g = f.gradient(q);
        const oracle::Vec fd = oracle::central_gradient(phi, to_vec(q));
        for (Eigen::Index j = 0; j < g.size(); ++j)
          CHECK(std::abs(g[j] - fd[static_cast<std::size_t>(j)]) <= 1e-6 * std::max(1.0, std::abs(g[j])));
      }
    }
  }
  CHECK_THROWS_AS(ClassicalEigenfunction([](const Vector&) { return 0.0; },
                                         [](const Vector& q) { return Vector::Zero(q.size()).eval(); }, -1.0, {1}),
                  ValidationError);
}
