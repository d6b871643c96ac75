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

#include "ncorlicz/norms.hpp"
#include "ncorlicz/random.hpp"
#include "ncorlicz/spectra.hpp"
#include "ncorlicz/weighted.hpp"

using namespace ncorlicz;

TEST_SUITE("weighted") {

TEST_CASE("weight functional") {
  Eigen::MatrixXcd dm = Eigen::MatrixXcd::Zero(2, 2);
  dm(0, 0) = 1.0;
  dm(1, 1) = 2.0;
  const Density d(TracedMatrix(dm, 1.0));
  CHECK(weight_of(d, TracedMatrix::identity(2)).real() == doctest::Approx(3.0));

  RandomSource rng(2);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index n = 2 + i % 5;
    const Density dd = rng.random_density(n);
    const TracedMatrix a = rng.gaussian_matrix(n);
    const TracedMatrix b = rng.gaussian_matrix(n);
    const TracedMatrix x = a * adjoint(a);
    const TracedMatrix y = b * adjoint(b);
    const double lam = rng.uniform(0.0, 2.0);
    CHECK(std::abs(weight_of(dd, x + std::complex<double>(lam) * y) -
                   (weight_of(dd, x) + lam * weight_of(dd, y))) <= 1e-9);
    CHECK(weight_of(dd, x).real() >= 0.0);
    CHECK(weight_of(dd, adjoint(a) * a).real() > 0.0);  // faithful
  }
  CHECK_THROWS_AS(weight_of(d, TracedMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("density validation") {
  Eigen::MatrixXcd notherm(2, 2);
  notherm << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(Density(TracedMatrix(notherm, 1.0)), std::invalid_argument);
  Eigen::MatrixXcd sing = Eigen::MatrixXcd::Zero(2, 2);
  sing(0, 0) = 1.0;
  CHECK_THROWS_AS(Density(TracedMatrix(sing, 1.0)), std::invalid_argument);
}

TEST_CASE("functional calculus") {
  RandomSource rng(4);
  for (int i = 0; i < 40; ++i) {
    const Eigen::Index n = 2 + i % 5;
    const Density d = rng.random_density(n);
    const TracedMatrix id_back = functional_calculus(d, [](double t) { return t; });
    CHECK((id_back.entries - d.matrix().entries).norm() <= 1e-10 * (1.0 + d.matrix().entries.norm()));
  }
  Eigen::MatrixXcd dm = Eigen::MatrixXcd::Zero(2, 2);
  dm(0, 0) = 0.5;
  dm(1, 1) = 3.0;
  const Density d(TracedMatrix(dm, 1.0));
  const NFunction p2 = NFunction::power(2.0);
  const TracedMatrix r = functional_calculus(d, [&](double t) { return p2.inverse(t); });
  CHECK(r.entries(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r.entries(1, 1).real() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-13));
}

TEST_CASE("t_map structure") {
  const NFunction p2 = NFunction::power(2.0);
  RandomSource rng(6);
  for (int i = 0; i < 40; ++i) {
    const Eigen::Index n = 2 + i % 4;
    const Density d = rng.random_density(n);
    const double alpha = rng.uniform(0.0, 1.0);
    // x = 1 maps to Phi^{-1}(D) for every alpha
    const TracedMatrix one = t_map(TracedMatrix::identity(n), d, p2, alpha);
    const TracedMatrix phinv = functional_calculus(d, [&](double t) { return p2.inverse(t); });
    CHECK((one.entries - phinv.entries).norm() <= 1e-9 * (1.0 + phinv.entries.norm()));
    // linearity
    const TracedMatrix x = rng.gaussian_matrix(n);
    const TracedMatrix y = rng.gaussian_matrix(n);
    const std::complex<double> eta = rng.complex_gaussian();
    const TracedMatrix lhs = t_map(x + eta * y, d, p2, alpha);
    const TracedMatrix rhs = t_map(x, d, p2, alpha) + eta * t_map(y, d, p2, alpha);
    CHECK((lhs.entries - rhs.entries).norm() <= 1e-9 * (1.0 + rhs.entries.norm()));
  }
  CHECK_THROWS_AS(
      t_map(TracedMatrix::identity(2), Density(TracedMatrix(Eigen::MatrixXcd::Identity(2, 2), 1.0)), p2, 1.5),
      std::domain_error);
}

TEST_CASE("weighted norm reduces to unweighted for D = Phi(1) I") {
  const NFunction p2 = NFunction::power(2.0);
  RandomSource rng(8);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Index n = 2 + i % 4;
    // Phi^{-1}(Phi(1)) = 1, so the transform is the identity
    const Density d(TracedMatrix(p2.value(1.0) * Eigen::MatrixXcd::Identity(n, n), 1.0));
    const TracedMatrix x = rng.gaussian_matrix(n);
    const double weighted = weighted_weak_norm(x, d, p2, rng.uniform(0.0, 1.0)).value;
    const double plain = weak_orlicz_quasinorm(singular_value_function(x), p2).value;
    CHECK(weighted == doctest::Approx(plain).epsilon(1e-10));
  }
}

TEST_CASE("prop 3.2 inequalities") {
  RandomSource rng(10);
  static const double alphas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (int i = 0; i < 150; ++i) {
    const Eigen::Index n = 2 + i % 5;
    const Density d = rng.random_density(n);
    const NFunction f = NFunction::power(1.0 + rng.log_uniform(0.3, 3.0));
    const double alpha = alphas[i % 5];
    const TracedMatrix x = rng.gaussian_matrix(n);
    const TracedMatrix y = rng.gaussian_matrix(n);
    const DecreasingStepFunction mtx = singular_value_function(t_map(x, d, f, alpha));
    const double nx = weak_orlicz_quasinorm(mtx, f).value;
    CHECK(sup_t_phi(mtx, f, nx) <= 1.0 + 1e-9);                                    // (i)
    CHECK(weighted_weak_norm(x + y, d, f, alpha).value <=
          2.0 * (nx + weighted_weak_norm(y, d, f, alpha).value) * (1.0 + 1e-9));   // (ii)
    const double shrink = rng.uniform(0.05, 1.0);
    CHECK(sup_t_phi(scale(mtx, shrink / nx), f, 1.0) <= shrink + 1e-9);            // (iii)
    CHECK(nx <= luxemburg_norm(mtx, f).value * (1.0 + 1e-9));                      // (iv)
  }
}

TEST_CASE("isometry of the weighted space") {
  RandomSource rng(12);
  for (double alpha : {0.0, 0.5, 1.0}) {
    for (int i = 0; i < 10; ++i) {
      const Eigen::Index n = 2 + i % 4;
      const Density d = rng.random_density(n);
      std::vector<TracedMatrix> samples;
      for (int s = 0; s < 8; ++s) samples.push_back(rng.gaussian_matrix(n));
      const IsometryReport rep = isometry_check(d, NFunction::power(2.0), alpha, samples);
      CHECK(rep.bijective);
      CHECK(rep.rank == n * n);
      CHECK(rep.max_norm_deviation <= 1e-10);
      CHECK(rep.max_modular_excess <= 1e-10);
      CHECK(rep.passed);
    }
  }
}

}  // TEST_SUITE
