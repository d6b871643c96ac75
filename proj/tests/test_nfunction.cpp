// Copyright 2026 The ncorlicz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/suites.hpp"

using namespace ncorlicz;

namespace {

NFunction tabulated_p2() {
  std::vector<double> grid, phi;
  for (double t = 1e-3; t <= 1.0001e3; t *= std::pow(10.0, 0.05)) {
    grid.push_back(t);
    phi.push_back(t);
  }
  return NFunction::tabulated(grid, phi, 1.0, 1.0);
}

}  // namespace

TEST_SUITE("nfunction") {

TEST_CASE("evaluation closed forms") {
  const NFunction p2 = NFunction::power(2.0);
  CHECK(p2.value(3.0) == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(p2.value(0.0) == 0.0);
  CHECK(NFunction::power_log(2.0).value(1.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(NFunction::exp_type().value(1.0) ==
        doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-14));
  CHECK(NFunction::exp_type().value(0.0) == 0.0);
  CHECK_THROWS_AS((void)p2.value(-1.0), std::domain_error);
}

TEST_CASE("inversion") {
  const NFunction p2 = NFunction::power(2.0);
  CHECK(p2.inverse(4.5) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(p2.inverse(0.0) == 0.0);
  CHECK(NFunction::exp_type().inverse(std::exp(1.0) - 2.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)p2.inverse(-0.5), std::domain_error);

  // Phi^{-1}(Phi(t)) = t across the battery
  for (const NFunction& f : family_battery()) {
    for (double t = 1e-3; t <= 1.0001e2; t *= 3.7) {
      const double tol = f.family() == NFunction::Family::Tabulated ? 1e-9 : 1e-11;
      CHECK(f.inverse(f.value(t)) == doctest::Approx(t).epsilon(tol));
    }
  }
}

TEST_CASE("complement closed forms") {
  const NFunction p3 = NFunction::power(3.0);
  const NFunction psi = p3.complement();
  REQUIRE(psi.family() == NFunction::Family::Power);
  CHECK(psi.parameter() == doctest::Approx(1.5).epsilon(1e-14));
  // numeric Legendre oracle at sampled points
  for (double s : {0.3, 1.0, 2.5, 10.0}) {
    const double oracle =
        legendre_transform_numeric([&](double t) { return p3.value(t); }, s);
    CHECK(psi.value(s) == doctest::Approx(oracle).epsilon(1e-10));
  }
  // p = 2 is self-conjugate under the t^2/2 normalization
  const NFunction p2c = NFunction::power(2.0).complement();
  CHECK(p2c.parameter() == doctest::Approx(2.0));
  // exp-type conjugate: (1+s)log(1+s) - s
  const NFunction ec = NFunction::exp_type().complement();
  CHECK(ec.value(1.0) == doctest::Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-14));
}

TEST_CASE("biconjugation on a grid") {
  for (const NFunction& f : family_battery()) {
    const NFunction ff = f.complement().complement();
    for (double t = 1e-2; t <= 1.0001e2; t *= 2.3) {
      CHECK(ff.value(t) == doctest::Approx(f.value(t)).epsilon(1e-6));
    }
  }
}

TEST_CASE("young inequality") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 2.0);
  for (const NFunction& f : family_battery()) {
    const NFunction psi = f.complement();
    for (int i = 0; i < 2000; ++i) {
      const double s = std::pow(10.0, u(rng)), t = std::pow(10.0, u(rng));
      const double rhs = f.value(t) + psi.value(s);
      CHECK(s * t <= rhs + 1e-9 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("inverse product ratio") {
  CHECK(inverse_product_ratio(NFunction::power(2.0), 7.3) == doctest::Approx(2.0).epsilon(1e-12));
  const double want3 = std::pow(3.0, 1.0 / 3.0) * std::pow(1.5, 2.0 / 3.0);
  CHECK(inverse_product_ratio(NFunction::power(3.0), 1.0) ==
        doctest::Approx(want3).epsilon(1e-12));
  CHECK(inverse_product_ratio(tabulated_p2(), 5.0) == doctest::Approx(2.0).epsilon(1e-6));
  for (const NFunction& f : family_battery())
    for (double t = 1e-5; t < 1.0001e5; t *= 10.0) {
      const double r = inverse_product_ratio(f, t);
      CHECK(r >= 1.0 - 1e-9);
      CHECK(r <= 2.0 + 1e-9);
    }
}

TEST_CASE("growth indices") {
  const GrowthIndices g25 = growth_indices(NFunction::power(2.5));
  CHECK(g25.lower == 2.5);
  CHECK(g25.upper == 2.5);
  const GrowthIndices ge = growth_indices(NFunction::exp_type());
  CHECK(ge.lower == 2.0);
  CHECK(ge.upper_unbounded);
  const GrowthIndices gl = growth_indices(NFunction::power_log(2.0));
  CHECK(gl.lower >= 2.0);
  CHECK(gl.upper <= 3.0);
}

TEST_CASE("delta2 and nabla2") {
  for (double p : {1.5, 2.0, 3.0}) {
    const Delta2Result d = delta2_constant(NFunction::power(p));
    CHECK_FALSE(d.unbounded);
    CHECK(d.constant == doctest::Approx(std::pow(2.0, p)).epsilon(1e-12));
  }
  CHECK(delta2_constant(NFunction::exp_type()).unbounded);
  for (const NFunction& f : family_battery())
    CHECK(delta2_constant(f).unbounded == !nabla2_check(f.complement()));
}

TEST_CASE("fundamental function") {
  const NFunction p2 = NFunction::power(2.0);
  CHECK(fundamental_function(p2, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (double p : {1.5, 3.0}) {
    const NFunction f = NFunction::power(p);
    const double q = p / (p - 1.0);
    for (double t : {0.25, 1.0, 9.0})
      CHECK(fundamental_function(f, t) ==
            doctest::Approx(std::pow(t / q, 1.0 / q)).epsilon(1e-11));
  }
  // t / fund(t) -> 0 at zero
  for (const NFunction& f : family_battery()) {
    double prev = 1e300;
    for (double t : {1e-2, 1e-4, 1e-6, 1e-8}) {
      const double v = t / fundamental_function(f, t);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("dilation indices of the power fundamental") {
  for (double p : {1.5, 2.0, 3.0}) {
    const double q = p / (p - 1.0);
    const DilationIndices di = dilation_indices(NFunction::power(p));
    CHECK(di.lower == doctest::Approx(1.0 / q).epsilon(1e-6));
    CHECK(di.upper == doctest::Approx(1.0 / q).epsilon(1e-6));
    CHECK(di.reliable);
  }
}

TEST_CASE("dilation fit flags non-power behavior") {
  // the exp-type fundamental function is not regularly varying over the
  // fitting window, so the log-log fit must report an unreliable slope
  const DilationIndices di = dilation_indices(NFunction::exp_type());
  CHECK_FALSE(di.reliable);
  CHECK(di.fit_residual > 1e-3);
}

TEST_CASE("dilation function is scale invariant") {
  // M(t, c*fund) = M(t, fund): ratios cancel; checked with a local fit
  const NFunction f = NFunction::power(3.0);
  const auto fund = [&](double t) { return fundamental_function(f, t); };
  for (double c : {0.1, 7.0}) {
    for (double t : {0.125, 8.0}) {
      double m1 = 0.0, m2 = 0.0;
      for (double s = 1e-6; s <= 1.0001e6; s *= 10.0) {
        m1 = std::max(m1, fund(t * s) / fund(s));
        m2 = std::max(m2, c * fund(t * s) / (c * fund(s)));
      }
      CHECK(m1 == doctest::Approx(m2).epsilon(1e-12));
    }
  }
}

TEST_CASE("tabulated validation and complement") {
  CHECK_THROWS_AS(NFunction::tabulated({1.0, 0.5}, {1.0, 2.0}, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(NFunction::tabulated({1.0, 2.0}, {2.0, 1.0}, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(NFunction::tabulated({1.0, 2.0}, {1.0, 2.0}, -1.0, 1.0), std::invalid_argument);
  const NFunction tb = tabulated_p2();
  const NFunction tc = tb.complement();
  for (double t : {0.01, 0.5, 3.0, 50.0})
    CHECK(tc.value(t) == doctest::Approx(t * t / 2.0).epsilon(1e-12));
  // flats in phi collapse to the left endpoint of the preimage
  const NFunction flat = NFunction::tabulated({1.0, 2.0, 3.0, 4.0}, {1.0, 2.0, 2.0, 3.0}, 1.0, 1.0);
  CHECK(flat.complement().derivative(2.0) == doctest::Approx(2.0));
}

TEST_CASE("convexity") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const NFunction& f : family_battery()) {
    for (int i = 0; i < 500; ++i) {
      const double t1 = std::pow(10.0, -3.0 + 5.0 * u(rng));
      const double t2 = std::pow(10.0, -3.0 + 5.0 * u(rng));
      const double th = u(rng);
      const double rhs = th * f.value(t1) + (1.0 - th) * f.value(t2);
      CHECK(f.value(th * t1 + (1.0 - th) * t2) <= rhs + 1e-12 * std::max(1.0, rhs));
    }
  }
}

}  // TEST_SUITE
