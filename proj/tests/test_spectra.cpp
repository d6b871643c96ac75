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

#include <Eigen/Dense>
#include <cmath>

#include "ncorlicz/errors.hpp"
#include "ncorlicz/hermitian_eigen.hpp"
#include "ncorlicz/random.hpp"
#include "ncorlicz/spectra.hpp"

using namespace ncorlicz;

namespace {

TracedMatrix diag_matrix(std::initializer_list<double> d, double c = 1.0) {
  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  Eigen::Index i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return TracedMatrix(std::move(m), c);
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("jacobi eigensolver against the Eigen oracle") {
  RandomSource rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 7;
    const Eigen::MatrixXcd g = rng.gaussian_matrix(n).entries;
    const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint().eval());
    const HermitianEigenResult mine = hermitian_eigen(h, true);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(h);
    for (Eigen::Index i = 0; i < n; ++i)
      CHECK(mine.eigenvalues(i) ==
            doctest::Approx(oracle.eigenvalues()(n - 1 - i)).epsilon(1e-11));
    // eigenvector residual ||H v - lambda v||
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::VectorXcd v = mine.eigenvectors.col(i);
      CHECK((h * v - mine.eigenvalues(i) * v).norm() <= 1e-10 * (1.0 + h.norm()));
      CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("singular value function on diagonal and nilpotent input") {
  const DecreasingStepFunction m = singular_value_function(diag_matrix({3.0, 1.0, 2.0}));
  REQUIRE(m.size() == 3);
  CHECK(m.steps()[0].value == doctest::Approx(3.0));
  CHECK(m.steps()[1].value == doctest::Approx(2.0));
  CHECK(m.steps()[2].value == doctest::Approx(1.0));
  CHECK(m.steps()[0].length == doctest::Approx(1.0));

  Eigen::MatrixXcd nil = Eigen::MatrixXcd::Zero(2, 2);
  nil(0, 1) = 1.0;
  const DecreasingStepFunction mn = singular_value_function(TracedMatrix(nil, 2.0));
  REQUIRE(mn.size() == 1);
  CHECK(mn.steps()[0].value == doctest::Approx(1.0));
  CHECK(mn.steps()[0].length == doctest::Approx(2.0));
}

TEST_CASE("unitary invariance of mu") {
  RandomSource rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = 2 + trial % 6;
    const TracedMatrix x = rng.gaussian_matrix(n);
    const TracedMatrix u = rng.haar_unitary(n);
    const TracedMatrix v = rng.haar_unitary(n);
    CHECK(step_distance(singular_value_function(x), singular_value_function(u * x * v)) <=
          1e-10 * (1.0 + singular_value_function(x).max_value()));
  }
}

TEST_CASE("distribution function") {
  const TracedMatrix x = diag_matrix({3.0, 1.0, 2.0});
  CHECK(distribution_function(x, 1.5) == doctest::Approx(2.0));
  CHECK(distribution_function(x, 3.5) == 0.0);
  CHECK_THROWS_AS((void)distribution_function(x, -1.0), std::domain_error);

  // mu_t = inf{s : lambda_s <= t} on a grid
  const DecreasingStepFunction m = singular_value_function(x);
  for (double t : {0.5, 1.5, 2.5}) {
    const double v = m.value_at(t);
    CHECK(m.distribution(v) <= t);
    CHECK(m.distribution(v - 1e-9) > t);
  }
}

TEST_CASE("hardy transform") {
  const DecreasingStepFunction m({{3.0, 1.0}, {2.0, 1.0}, {1.0, 1.0}});
  CHECK(hardy_transform(m, 2.0) == doctest::Approx(5.0));
  CHECK(hardy_transform(m, 0.5) == doctest::Approx(1.5));
  CHECK(hardy_transform(m, 17.0) == doctest::Approx(6.0));
  // mu~_t >= t mu_t
  for (double t : {0.3, 1.7, 2.0, 3.0, 8.0})
    CHECK(hardy_transform(m, t) >= t * m.value_at(t) - 1e-12);

  const ParametricDecay d({{0.0, 1.0, std::sqrt(2.0), 0.5}});
  CHECK(hardy_transform(d, 1.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  const ParametricDecay bad({{0.0, 1.0, 1.0, 1.5}});
  CHECK_THROWS_AS((void)hardy_transform(bad, 0.5), divergence_error);
}

TEST_CASE("extremal element") {
  const ParametricDecay e2 = extremal_element(NFunction::power(2.0), 8.0);
  CHECK(e2.value_at(0.5) == doctest::Approx(2.0).epsilon(1e-14));
  for (double p : {1.5, 3.0}) {
    const ParametricDecay e = extremal_element(NFunction::power(p), 4.0);
    for (double t : {0.1, 1.0, 3.0})
      CHECK(e.value_at(t) == doctest::Approx(std::pow(p / t, 1.0 / p)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(extremal_element(NFunction::exp_type(), 1.0), std::invalid_argument);
}

TEST_CASE("sum and product inequalities") {
  RandomSource rng(77);
  // commuting diagonal case, hand grid
  const TracedMatrix a = diag_matrix({4.0, 2.0, 1.0});
  const TracedMatrix b = diag_matrix({3.0, 3.0, 0.5});
  for (double t : {0.25, 1.0, 1.5})
    for (double s : {0.25, 1.0, 1.5}) CHECK(sum_inequality_check(a, b, t, s));
  // y = 0 reduces to monotonicity of mu
  CHECK(sum_inequality_check(a, TracedMatrix::zero(3), 1.0, 0.5));
  // randomized battery
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const TracedMatrix x = rng.gaussian_matrix(n);
    const TracedMatrix y = rng.gaussian_matrix(n);
    const DecreasingStepFunction mx = singular_value_function(x);
    for (std::size_t k = 0; k < mx.size(); ++k) {
      CHECK(sum_inequality_check(x, y, mx.breakpoint(k) * 0.5, 0.25));
    }
  }
}

TEST_CASE("rearrangement identity eq 2.14") {
  RandomSource rng(31);
  const NFunction f = NFunction::power(2.5);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index n = 2 + trial % 6;
    const TracedMatrix x = rng.gaussian_matrix(n, trial % 2 ? 1.0 : 0.5);
    const DecreasingStepFunction m = singular_value_function(x);
    const Eigen::VectorXd sv = singular_values(x);
    for (double c : {0.5, 1.0, 2.0}) {
      const double lhs = sup_t_phi(m, f, c);
      const double rhs = sup_lambda_phi(sv, x.trace_scale, f, c);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("trace of Phi(|x|) equals the rearrangement integral") {
  RandomSource rng(13);
  const NFunction f = NFunction::power(2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const TracedMatrix x = rng.gaussian_matrix(4, 2.0);
    const Eigen::VectorXd sv = singular_values(x);
    double lhs = 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) lhs += x.trace_scale * f.value(sv(i));
    double rhs = 0.0;
    const DecreasingStepFunction m = singular_value_function(x);
    for (std::size_t k = 0; k < m.size(); ++k)
      rhs += m.steps()[k].length * f.value(m.steps()[k].value);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("traced matrix algebra") {
  RandomSource rng(3);
  const TracedMatrix x = rng.gaussian_matrix(4, 0.5);
  const TracedMatrix y = rng.gaussian_matrix(4, 0.5);
  CHECK(std::abs(tau(x * y) - tau(y * x)) <= 1e-12 * (1.0 + std::abs(tau(x * y))));
  CHECK(total_measure(x) == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)(x * rng.gaussian_matrix(3, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS((void)(x + rng.gaussian_matrix(4, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(TracedMatrix(Eigen::MatrixXcd::Zero(2, 2), -1.0), std::invalid_argument);
}

TEST_CASE("step function basics") {
  CHECK_THROWS_AS(DecreasingStepFunction({{1.0, 1.0}, {2.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(DecreasingStepFunction({{1.0, 0.0}}), std::invalid_argument);
  const DecreasingStepFunction z;
  CHECK(z.is_zero());
  CHECK(z.value_at(0.3) == 0.0);
  const DecreasingStepFunction m({{2.0, 1.5}, {0.5, 0.5}});
  CHECK(m.value_at(0.0) == 2.0);
  CHECK(m.value_at(1.5) == 0.5);  // right continuity
  CHECK(m.value_at(2.0) == 0.0);
  CHECK(m.total_integral() == doctest::Approx(3.25));
}

}  // TEST_SUITE
