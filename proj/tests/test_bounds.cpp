// Copyright (c) 2026 the hohlov authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "hohlov/bounds.hpp"
#include "oracles.hpp"

using hohlov::BoundReport;
using hohlov::ClassParams;
using hohlov::cplx;
using hohlov::HohlovParams;
using hohlov::SpecialCase;
using hohlov::TransformKind;

namespace {

void check_reports_close(const BoundReport& lhs, const BoundReport& rhs, double tol) {
  REQUIRE(lhs.a2_branches.size() == rhs.a2_branches.size());
  for (std::size_t i = 0; i < lhs.a2_branches.size(); ++i) {
    CHECK(oracles::close(lhs.a2_branches[i], rhs.a2_branches[i], tol));
  }
  CHECK(oracles::close(lhs.a2_bound, rhs.a2_bound, tol));
  CHECK(oracles::close(lhs.a3_bound, rhs.a3_bound, tol));
}

}  // namespace

TEST_CASE("unit-multiplier values at lambda = 0 and 1 match hand substitution") {
  const ClassParams base(cplx{1.0}, 0.0, 0.0, 2.0);

  const BoundReport s0 = hohlov::coefficient_bounds_phi(TransformKind::S, base, 1.0, 1.0);
  CHECK(s0.a2_branches[0] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(s0.a2_branches[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s0.a2_bound == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(s0.a2_argmin == 0);
  CHECK(s0.a3_bound == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(s0.a3_argmin == 1);

  const ClassParams l1(cplx{1.0}, 1.0, 0.0, 2.0);
  const BoundReport s1 = hohlov::coefficient_bounds_phi(TransformKind::S, l1, 1.0, 1.0);
  CHECK(s1.a2_branches[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(s1.a2_branches[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s1.a2_bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  const BoundReport k0 = hohlov::coefficient_bounds_phi(TransformKind::K, base, 1.0, 1.0);
  CHECK(k0.a2_branches[0] == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(k0.a2_branches[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(k0.a2_bound == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-14));
  CHECK(k0.a3_bound == doctest::Approx(2.0 / 9.0).epsilon(1e-14));

  // |6 phi3 - 4 phi2^2| = 2 makes both a2 branches 1; ties pick index 0.
  const BoundReport k1 = hohlov::coefficient_bounds_phi(TransformKind::K, l1, 1.0, 1.0);
  CHECK(k1.a2_branches[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k1.a2_branches[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k1.a2_bound == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k1.a2_argmin == 0);
}

TEST_CASE("identity operator reproduces the unit-multiplier reports") {
  const ClassParams cp(cplx{1.0}, 0.0, 0.0, 2.0);
  const HohlovParams identity = hohlov::identity_params(2.7);
  for (const auto kind : {TransformKind::S, TransformKind::K}) {
    const BoundReport via_op = hohlov::coefficient_bounds(kind, cp, identity);
    const BoundReport via_phi = hohlov::coefficient_bounds_phi(kind, cp, 1.0, 1.0);
    CHECK(via_op.phi2 == 1.0);
    CHECK(via_op.phi3 == 1.0);
    check_reports_close(via_op, via_phi, 1e-14);
  }
}

TEST_CASE("all branches vanish as beta approaches 1") {
  const ClassParams cp(cplx{2.0, 1.0}, 0.6, 1.0 - 1e-12, 4.0);
  for (const auto kind : {TransformKind::S, TransformKind::K}) {
    const BoundReport r = hohlov::coefficient_bounds_phi(kind, cp, 0.8, 1.3);
    for (double b : r.a2_branches) CHECK(b < 1e-5);
    for (double b : r.a3_branches) CHECK(b < 1e-5);
  }
}

TEST_CASE("reports depend on gamma only through its modulus") {
  oracles::Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const double mod = rng.uniform(0.2, 3.0);
    const double theta = rng.uniform(0.0, 2.0 * oracles::pi);
    const ClassParams straight(cplx{mod}, rng.u01(), rng.uniform(0.0, 0.9), rng.uniform(2.0, 4.0));
    const ClassParams rotated(std::polar(mod, theta), straight.lambda, straight.beta, straight.m);
    const double phi2 = rng.uniform(0.3, 2.0);
    const double phi3 = rng.uniform(0.3, 2.0);
    for (const auto kind : {TransformKind::S, TransformKind::K}) {
      check_reports_close(hohlov::coefficient_bounds_phi(kind, straight, phi2, phi3),
                          hohlov::coefficient_bounds_phi(kind, rotated, phi2, phi3), 1e-12);
    }
  }
}

TEST_CASE("every finite branch is monotone in m, |gamma| and beta") {
  oracles::Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const double lambda = rng.u01();
    const double beta = rng.uniform(0.0, 0.8);
    const double m = rng.uniform(2.0, 4.0);
    const double mod_gamma = rng.uniform(0.2, 3.0);
    const double phi2 = rng.uniform(0.3, 2.0);
    const double phi3 = rng.uniform(0.3, 2.0);
    for (const auto kind : {TransformKind::S, TransformKind::K}) {
      const auto eval = [&](double mm, double gg, double bb) {
        return hohlov::coefficient_bounds_phi(kind, ClassParams(cplx{gg}, lambda, bb, mm), phi2,
                                              phi3);
      };
      const BoundReport lo = eval(m, mod_gamma, beta);
      const BoundReport up_m = eval(m + 0.7, mod_gamma, beta);
      const BoundReport up_g = eval(m, mod_gamma * 1.4, beta);
      const BoundReport up_b = eval(m, mod_gamma, std::min(beta + 0.15, 0.95));
      for (std::size_t i = 0; i < lo.a2_branches.size(); ++i) {
        if (!std::isfinite(lo.a2_branches[i])) continue;
        CHECK(up_m.a2_branches[i] >= lo.a2_branches[i] * (1.0 - 1e-12));
        CHECK(up_g.a2_branches[i] >= lo.a2_branches[i] * (1.0 - 1e-12));
        CHECK(up_b.a2_branches[i] <= lo.a2_branches[i] * (1.0 + 1e-12));
      }
      for (std::size_t i = 0; i < lo.a3_branches.size(); ++i) {
        if (!std::isfinite(lo.a3_branches[i])) continue;
        CHECK(up_m.a3_branches[i] >= lo.a3_branches[i] * (1.0 - 1e-12));
        CHECK(up_g.a3_branches[i] >= lo.a3_branches[i] * (1.0 - 1e-12));
        CHECK(up_b.a3_branches[i] <= lo.a3_branches[i] * (1.0 + 1e-12));
      }
      CHECK(up_m.a2_bound >= lo.a2_bound * (1.0 - 1e-12));
      CHECK(up_b.a3_bound <= lo.a3_bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("special cases coincide with the general evaluators at their lambda") {
  oracles::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const double m = rng.uniform(2.0, 4.0);
    const double beta = rng.uniform(0.0, 0.9);
    const cplx gamma = rng.annulus(0.2, 3.0);
    const double phi2 = rng.uniform(0.3, 2.0);
    const double phi3 = rng.uniform(0.3, 2.0);

    const ClassParams at1(gamma, 1.0, beta, m);
    const ClassParams at0(gamma, 0.0, beta, m);

    // S family, lambda = 1: full branch-by-branch agreement.
    {
      const BoundReport thm = hohlov::coefficient_bounds_phi(TransformKind::S, at1, phi2, phi3);
      const BoundReport cor = hohlov::special_case_bounds(SpecialCase::SLambda1, at1, phi2, phi3);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(oracles::close(thm.a2_branches[i], cor.a2_branches[i], 1e-12));
      }
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(oracles::close(thm.a3_branches[i], cor.a3_branches[i], 1e-12));
      }
    }
    // S family, lambda = 0: the specialized a3 is the selected minimum.
    {
      const BoundReport thm = hohlov::coefficient_bounds_phi(TransformKind::S, at0, phi2, phi3);
      const BoundReport cor = hohlov::special_case_bounds(SpecialCase::HLambda0, at0, phi2, phi3);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(oracles::close(thm.a2_branches[i], cor.a2_branches[i], 1e-12));
      }
      CHECK(oracles::close(thm.a3_bound, cor.a3_bound, 1e-12));
    }
    // K family, lambda = 1.
    {
      const BoundReport thm = hohlov::coefficient_bounds_phi(TransformKind::K, at1, phi2, phi3);
      const BoundReport cor = hohlov::special_case_bounds(SpecialCase::KLambda1, at1, phi2, phi3);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(oracles::close(thm.a2_branches[i], cor.a2_branches[i], 1e-12));
      }
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(oracles::close(thm.a3_branches[i], cor.a3_branches[i], 1e-12));
      }
    }
    // K family, lambda = 0.
    {
      const BoundReport thm = hohlov::coefficient_bounds_phi(TransformKind::K, at0, phi2, phi3);
      const BoundReport cor = hohlov::special_case_bounds(SpecialCase::QLambda0, at0, phi2, phi3);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(oracles::close(thm.a2_branches[i], cor.a2_branches[i], 1e-12));
      }
      CHECK(oracles::close(thm.a3_bound, cor.a3_bound, 1e-12));
    }
  }
}

TEST_CASE("a vanishing branch denominator yields the +inf sentinel, not an error") {
  // phi2^2 = 2 phi3 kills the first branch of the lambda = 1 S-form bound.
  const ClassParams cp(cplx{1.0}, 1.0, 0.0, 2.0);
  const double phi2 = std::sqrt(2.0);
  const double phi3 = 1.0;
  const BoundReport cor = hohlov::special_case_bounds(SpecialCase::SLambda1, cp, phi2, phi3);
  CHECK(std::isinf(cor.a2_branches[0]));
  CHECK(cor.a2_bound == doctest::Approx(2.0 / phi2).epsilon(1e-14));
  CHECK(cor.a2_argmin == 1);
  CHECK(std::isinf(cor.a3_branches[0]));
  CHECK(std::isfinite(cor.a3_bound));

  const BoundReport thm = hohlov::coefficient_bounds_phi(TransformKind::S, cp, phi2, phi3);
  CHECK(std::isinf(thm.a2_branches[0]));
  CHECK(thm.a2_argmin == 1);
}

TEST_CASE("phi arguments must be positive") {
  const ClassParams cp(cplx{1.0}, 0.5, 0.0, 2.0);
  CHECK_THROWS_AS(hohlov::coefficient_bounds_phi(TransformKind::S, cp, 0.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(hohlov::special_case_bounds(SpecialCase::QLambda0, cp, 1.0, -2.0),
                  std::invalid_argument);
}
