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

#include "ncorlicz/duality.hpp"
#include "ncorlicz/spectra.hpp"

using namespace ncorlicz;

TEST_SUITE("duality") {

TEST_CASE("trace pairing") {
  const TracedMatrix e = TracedMatrix::unit(2, 0, 0);
  CHECK(pairing(e, e) == std::complex<double>(1.0, 0.0));
  RandomSource rng(71);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Index n = 2 + i % 5;
    const TracedMatrix x = rng.gaussian_matrix(n);
    const TracedMatrix y = rng.gaussian_matrix(n);
    CHECK(std::abs(pairing(x, y) - std::conj(pairing(y, x))) <= 1e-12);
    // rearrangement bound
    CHECK(std::abs(pairing(x, y)) <=
          pairing_integral(singular_value_function(x), singular_value_function(y)) *
                  (1.0 + 1e-9) +
              1e-12);
  }
}

TEST_CASE("dual norm bruteforce equals marcinkiewicz") {
  RandomSource rng(73);
  const NFunction p2 = NFunction::power(2.0);
  // rank-1 projection: both equal sqrt(2) for t^2/2
  const DecreasingStepFunction proj({{1.0, 1.0}});
  CHECK(dual_norm_bruteforce(proj, p2).value ==
        doctest::Approx(marcinkiewicz_norm(proj, p2).value).epsilon(1e-10));
  for (int i = 0; i < 120; ++i) {
    const DecreasingStepFunction m = rng.random_steps(10);
    const double brute = dual_norm_bruteforce(m, p2).value;
    CHECK(brute == doctest::Approx(marcinkiewicz_norm(m, p2).value).epsilon(1e-8));
    // candidate feasibility: single scaled indicator has Lorentz norm 1
    const double t = rng.log_uniform(0.1, m.total_length());
    const DecreasingStepFunction y({{1.0 / fundamental_function(p2, t), t}});
    CHECK(lorentz_norm(y, p2).value == doctest::Approx(1.0).epsilon(1e-10));
    // random feasible candidates stay below the sup
    DecreasingStepFunction cand = rng.random_steps(8);
    cand = scale(cand, 1.0 / lorentz_norm(cand, p2).value);
    CHECK(pairing_integral(m, cand) <= brute * (1.0 + 1e-8) + 1e-10);
  }
}

TEST_CASE("weak dual bracket") {
  RandomSource rng(79);
  const NFunction p2 = NFunction::power(2.0);
  const BracketReport r = weak_dual_bracket(p2, 300, 6, rng);
  CHECK(r.trials == 300);
  CHECK(std::isfinite(r.c_emp));
  CHECK(r.c_emp > 0.0);
  CHECK(r.attained_ratio >= 0.5);
  CHECK(r.attained_ratio <= 1.0 + 1e-12);
  // seed stability: identical seeds give identical constants
  RandomSource rng_a(123), rng_b(123);
  const BracketReport a = weak_dual_bracket(p2, 100, 4, rng_a);
  const BracketReport b = weak_dual_bracket(p2, 100, 4, rng_b);
  CHECK(a.c_emp == b.c_emp);
  CHECK(a.attained_ratio == b.attained_ratio);
}

}  // TEST_SUITE
