// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "correspondence.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace qcc;

TEST_CASE("hbar fit recovers exact quadratic data") {
  const std::vector<double> hbar{0.05, 0.1, 0.2};
  std::vector<double> e;
  for (double h : hbar) e.push_back(3.0 * h - 4.5 * h * h);
  const auto fit = fit_hbar_series(hbar, e);
  CHECK(fit.calE == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.second_order == doctest::Approx(-4.5).epsilon(1e-10));
  CHECK(fit.rms < 1e-14);
  CHECK_FALSE(fit.ill_fit);

  SUBCASE("cubic contamination is flagged") {
    std::vector<double> bad;
    for (double h : hbar) bad.push_back(3.0 * h + 50.0 * h * h * h);
    CHECK(fit_hbar_series(hbar, bad, 1e-10).ill_fit);
  }
  SUBCASE("too few distinct points") {
    const std::vector<double> two{0.1, 0.1, 0.2};
    CHECK_THROWS_AS(fit_hbar_series(two, std::vector<double>{0.1, 0.1, 0.2}), InputError);
    CHECK_THROWS_AS(fit_hbar_series(hbar, std::vector<double>{0.1, 0.2}), InputError);
  }
}

TEST_CASE("decompose picks the closest lattice point with the stated tie rule") {
  const std::vector<double> f12{1.0, 2.0};
  auto m = decompose(2.0, f12, 1e-3);
  REQUIRE(m.vector);
  CHECK(*m.vector == std::vector<int>{0, 1});
  CHECK(m.degeneracy == 2);

  const std::vector<double> same{1.0, 1.0};
  m = decompose(1.0, same, 1e-3);
  REQUIRE(m.vector);
  CHECK(*m.vector == std::vector<int>{1, 0});

  m = decompose(0.0, f12, 1e-3);
  REQUIRE(m.vector);
  CHECK(*m.vector == std::vector<int>{0, 0});

  const std::vector<double> one{1.0};
  m = decompose(0.5, one, 1e-3);
  CHECK_FALSE(m.vector);
  CHECK(m.residual == doctest::Approx(0.5));

  m = decompose(13.0, one, 1e-3);
  CHECK_FALSE(m.vector);

  CHECK_THROWS_AS(decompose(1.0, std::vector<double>{1.0, -1.0}, 1e-3), InputError);
  CHECK_THROWS_AS(decompose(1.0, one, 0.0), InputError);
  CHECK_THROWS_AS(decompose(1.0, one, 1e-3, 0), InputError);
}

TEST_CASE("decompose agrees with exhaustive enumeration") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> fdist(0.3, 3.0);
  std::uniform_int_distribution<int> ndist(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = ndist(rng);
    std::vector<double> freq(static_cast<std::size_t>(r));
    for (auto& f : freq) f = trial % 3 == 0 ? std::round(fdist(rng)) + 1.0 : fdist(rng);
    std::vector<int> target(freq.size());
    double calE = 0.0;
    for (std::size_t j = 0; j < freq.size(); ++j) {
      target[j] = static_cast<int>(rng() % 3);
      calE += target[j] * freq[j];
    }
    calE += (trial % 2 == 0 ? 0.0 : 1e-5);
    const double tol = 1e-3;
    const auto m = decompose(calE, freq, tol, 8);
    const auto ref = oracle::brute_force_lattice(calE, freq, tol, 8);
    CHECK(m.degeneracy == ref.within);
    REQUIRE(m.vector.has_value() == (ref.residual <= tol));
    if (m.vector) {
      CHECK(*m.vector == ref.vec);
      CHECK(m.residual == doctest::Approx(ref.residual).epsilon(1e-12));
    }
  }
}

TEST_CASE("default hbar sweep") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  CHECK(default_hbar_sweep(*ho, 5) == std::vector<double>{0.4, 0.2, 0.1, 0.05});
  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  const auto sweep = default_hbar_sweep(*pt, 3);
  for (double h : sweep) CHECK(*pt->bound_state_count(h) > 4);
}

TEST_CASE("grid correspondence: harmonic oscillator") {
  const auto ho = make_system("harmonic", {{"omega", 1.0}});
  CorrespondenceOptions opts;
  opts.hbar = {0.4, 0.2, 0.1};
  opts.levels = 6;
  const auto run = run_correspondence(*ho, opts);
  CHECK(run.source == "grid");
  CHECK(run.tables.size() == 3);
  REQUIRE(run.levels.size() == 6);
  CHECK(run.all_matched());
  for (std::size_t n = 0; n < 6; ++n) {
    const auto& lv = run.levels[n];
    CHECK(lv.level_index == n);
    CHECK(lv.calE == doctest::Approx(static_cast<double>(n)).epsilon(1e-6));
    REQUIRE(lv.match_vector);
    CHECK(lv.match_vector->at(0) == static_cast<int>(n));
    CHECK(lv.status == "matched");
  }

  SUBCASE("parallel workers give identical numbers") {
    opts.workers = 3;
    const auto par = run_correspondence(*ho, opts);
    for (std::size_t n = 0; n < 6; ++n) CHECK(par.levels[n].calE == run.levels[n].calE);
  }

  SUBCASE("an impossible tolerance leaves levels unmatched") {
    opts.match_tol = 1e-15;
    const auto strict = run_correspondence(*ho, opts);
    CHECK_FALSE(strict.all_matched());
  }
}

TEST_CASE("grid correspondence: Poschl-Teller") {
  const auto pt = make_system("poschl_teller", {{"g", 1.0}});
  CorrespondenceOptions opts;
  opts.hbar = {0.05, 0.1, 0.2};
  opts.levels = 4;
  const auto run = run_correspondence(*pt, opts);
  REQUIRE(run.levels.size() == 4);
  CHECK(run.all_matched());
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(run.levels[n].calE == doctest::Approx(static_cast<double>(n)).epsilon(1e-6));
    // E = g n hbar - n^2 hbar^2 / 2 is exactly quadratic
    CHECK(run.levels[n].fit_residual < 1e-8);
  }

  SUBCASE("levels past the bound-state count at the largest hbar are reported as continuum") {
    opts.hbar = {0.1, 0.2, 0.4};
    opts.levels = 4;
    const auto r = run_correspondence(*pt, opts);
    CHECK(r.levels[3].status == "continuum");
    CHECK_FALSE(r.all_matched());
  }
}

TEST_CASE("reference correspondence: Calogero") {
  for (int n : {3, 4}) {
    const auto cal = make_system("calogero_a", {{"N", n}, {"omega", 1.0}, {"g", 2.0}});
    CorrespondenceOptions opts;
    opts.levels = 6;
    const auto run = run_correspondence(*cal, opts);
    CHECK(run.source == "reference");
    CHECK(run.all_matched());
    // occupation vectors of N modes with sum <= 6
    const auto expected = n == 3 ? 84u : 210u;
    CHECK(run.levels.size() == expected);
    for (const auto& lv : run.levels) {
      CHECK(lv.match_residual < 1e-9);
      double weighted = 0.0;
      for (std::size_t k = 0; k < lv.quantum_numbers.size(); ++k) weighted += (k + 1.0) * lv.quantum_numbers[k];
      CHECK(lv.calE == doctest::Approx(weighted).epsilon(1e-12));
    }
    for (std::size_t i = 0; i + 1 < run.levels.size(); ++i) CHECK(run.levels[i].calE <= run.levels[i + 1].calE + 1e-12);
  }

  SUBCASE("a user system in several dimensions needs a closed-form spectrum") {
    SystemDefinition def;
    def.name = "pair";
    def.dimension = 2;
    def.prepotential = [](const Vector& q) { return -0.5 * q.squaredNorm(); };
    def.default_guess = Vector::Zero(2);
    const PrepotentialSystem s(def);
    CHECK_THROWS_AS(run_correspondence(s, CorrespondenceOptions{}), PreconditionError);
  }
}

TEST_CASE("forcing the reference path on a one-dimensional system") {
  const auto ho = make_system("harmonic", {{"omega", 1.5}});
  CorrespondenceOptions opts;
  opts.levels = 4;
  opts.force_reference = true;
  const auto run = run_correspondence(*ho, opts);
  CHECK(run.source == "reference");
  REQUIRE(run.levels.size() == 5);
  for (std::size_t n = 0; n < 5; ++n) CHECK(run.levels[n].calE == doctest::Approx(1.5 * n).epsilon(1e-12));
}
