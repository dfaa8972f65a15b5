// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "classical_spectrum.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace qcc;

namespace {

Vector v1(double x) { return Vector::Constant(1, x); }

const ClassicalEigenfunction& by_name(const PrepotentialSystem& s, const std::string& name) {
  for (const auto& f : s.reference_eigenfunctions())
    if (f.name() == name) return f;
  throw std::runtime_error("missing " + name);
}

}  // namespace

TEST_CASE("registry eigenfunctions satisfy the eigenvalue equation") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  const auto& q2 = by_name(*ho, "q^2");
  CHECK(apply_operator(*ho, q2, v1(1.5)) == doctest::Approx(q2.eigenvalue() * 2.25).epsilon(1e-14));
  CHECK(q2.eigenvalue() == 2.0);

  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  const auto& s1 = by_name(*pt, "sinh^1");
  CHECK(apply_operator(*pt, s1, v1(0.8)) == doctest::Approx(std::sinh(0.8)).epsilon(1e-14));

  for (const auto& sys : {ho, pt, make_system("harmonic", {{"omega", 2.0}}),
                          make_system("poschl_teller", {{"g", 0.5}})}) {
    const auto eq = find_equilibrium(*sys);
    for (const auto& f : sys->reference_eigenfunctions()) {
      CAPTURE(f.name());
      const auto r = verify_eigenfunction(*sys, f, eq, 64, 7);
      CHECK(r.sample_points.size() == 64);
      CHECK(r.max_abs_residual <= 1e-10 * std::max(1.0, r.normalization));
      CHECK(check_vanishing(f, eq.qbar) < 1e-12);
    }
  }
}

TEST_CASE("products of eigenfunctions are eigenfunctions with summed eigenvalues") {
  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  const auto eq = find_equilibrium(*pt);
  const auto& a = by_name(*pt, "sinh^1");
  const auto& b = by_name(*pt, "sinh^2");
  const auto ab = product(a, b);
  CHECK(ab.eigenvalue() == doctest::Approx(3.0));
  CHECK(ab.label() == std::vector<int>{3});
  CHECK_FALSE(ab.approximate());
  const auto r = verify_eigenfunction(*pt, ab, eq, 64, 1);
  CHECK(r.max_abs_residual < 1e-10 * std::max(1.0, r.normalization));

  SUBCASE("a product is compared against the matching registry member") {
    const auto& s3 = by_name(*pt, "sinh^3");
    for (double q : {-1.0, 0.1, 2.0}) CHECK(ab.value(v1(q)) == doctest::Approx(s3.value(v1(q))).epsilon(1e-14));
  }

  SUBCASE("constant times f keeps the eigenvalue") {
    const auto one = ClassicalEigenfunction::constant(1);
    const auto f = product(one, a);
    CHECK(f.eigenvalue() == a.eigenvalue());
    CHECK(verify_eigenfunction(*pt, f, eq, 16, 3).max_abs_residual < 1e-12);
  }
}

TEST_CASE("a wrong eigenvalue gives a large residual") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  const auto& q1 = by_name(*ho, "q^1");
  const ClassicalEigenfunction wrong([&](const Vector& q) { return q1.value(q); },
                                     [&](const Vector& q) { return q1.gradient(q); }, 2.0, {1});
  const auto r = verify_eigenfunction(*ho, wrong, 32, 3);
  CHECK(r.max_abs_residual > 0.1);
}

TEST_CASE("gradients of elementary eigenfunctions are eigenvectors of -Hess W") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  const auto eq = find_equilibrium(*ho);
  CHECK(check_gradient_eigenvector(*ho, by_name(*ho, "q^1"), eq) < 1e-12);
  CHECK(check_gradient_eigenvector(*ho, by_name(*ho, "q^2"), eq) == kNonElementary);

  const auto pt = make_system("poschl_teller", {{"g", 3.0}});
  const auto pteq = find_equilibrium(*pt);
  CHECK(check_gradient_eigenvector(*pt, by_name(*pt, "sinh^1"), pteq, 3.0) < 1e-12);
}

TEST_CASE("linearized candidates for Calogero") {
  for (int n : {3, 4, 5}) {
    const auto cal = make_system("calogero_a", {{"N", n}, {"omega", 1.0}, {"g", 1.0}});
    const auto eq = find_equilibrium(*cal);
    const auto cands = elementary_candidates(eq);
    REQUIRE(cands.size() == static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < cands.size(); ++j) {
      CHECK(cands[j].approximate());
      CHECK(cands[j].eigenvalue() == doctest::Approx(j + 1.0).epsilon(1e-8));
      CHECK(cands[j].label()[j] == 1);
      CHECK(check_vanishing(cands[j], eq.qbar) < 1e-14);
      CHECK(check_gradient_eigenvector(*cal, cands[j], eq) < 1e-8);
      // first-order accuracy: the residual shrinks quadratically with the distance
      const Vector dir = eq.modes.col(static_cast<Eigen::Index>(j));
      const double r1 = std::abs(apply_operator(*cal, cands[j], eq.qbar + 1e-2 * dir) -
                                 cands[j].eigenvalue() * cands[j].value(eq.qbar + 1e-2 * dir));
      const double r2 = std::abs(apply_operator(*cal, cands[j], eq.qbar + 5e-3 * dir) -
                                 cands[j].eigenvalue() * cands[j].value(eq.qbar + 5e-3 * dir));
      if (r1 > 1e-12) CHECK(r2 < 0.3 * r1);
    }
  }
}

TEST_CASE("sample points are seeded, inside the domain and spread over the box") {
  const auto cal = make_system("calogero_a", {{"N", 4}, {"omega", 1.0}, {"g", 1.0}});
  const auto eq = find_equilibrium(*cal);
  const auto a = sample_points(*cal, eq, 64, 42);
  const auto b = sample_points(*cal, eq, 64, 42);
  const auto c = sample_points(*cal, eq, 64, 43);
  REQUIRE(a.size() == 64);
  bool same = true, differ = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && (a[i] - b[i]).norm() == 0.0;
    differ = differ || (a[i] - c[i]).norm() > 0.0;
    CHECK(cal->in_domain(a[i]));
    const Vector u = eq.modes.transpose() * (a[i] - eq.qbar);
    for (Eigen::Index j = 0; j < u.size(); ++j) CHECK(std::abs(u[j]) * std::sqrt(eq.frequencies[j]) <= 1.0 + 1e-12);
  }
  CHECK(same);
  CHECK(differ);
  CHECK_THROWS_AS(sample_points(*cal, eq, 0, 1), ValidationError);
}

TEST_CASE("verify_suite covers the registry and every pairwise product") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  const auto eq = find_equilibrium(*ho);
  const auto entries = verify_suite(*ho, eq, 64, 9);
  // 4 registry members + 10 unordered pairs
  CHECK(entries.size() == 14);
  for (const auto& e : entries) {
    CAPTURE(e.label);
    CHECK(e.residual < 1e-10 * std::max(1.0, e.normalization));
    CHECK(e.vanishing < 1e-10);
    const int total = e.exponents.at(0);
    CHECK(e.eigenvalue == doctest::Approx(total));
    if (total == 1) {
      CHECK(e.hessian_residual < 1e-8);
    } else {
      CHECK(e.hessian_residual == kNonElementary);
    }
  }

  const auto cal = make_system("calogero_a", {{"N", 3}, {"omega", 1.0}, {"g", 1.0}});
  const auto ceq = find_equilibrium(*cal);
  const auto centries = verify_suite(*cal, ceq, 16, 9);
  CHECK(centries.size() == 3 + 6);
  for (const auto& e : centries) CHECK(e.approximate);
}
