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
#include "ncorlicz/hardy.hpp"
#include "ncorlicz/random.hpp"

using namespace ncorlicz;

namespace {
const NFunction kP2 = NFunction::power(2.0);
}

TEST_SUITE("hardy") {

TEST_CASE("block structure") {
  const BlockStructure b({1, 1, 2});
  CHECK(b.dim() == 4);
  CHECK(b.block_count() == 3);
  CHECK(b.in_algebra(0, 3));
  CHECK_FALSE(b.in_algebra(3, 0));
  CHECK(b.in_diagonal(2, 3));
  CHECK_THROWS_AS(BlockStructure({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(BlockStructure({}), std::invalid_argument);
}

TEST_CASE("conditional expectation") {
  RandomSource rng(21);
  // m = n: E is the main diagonal
  const BlockStructure full = BlockStructure::full_triangular(3);
  const TracedMatrix x = rng.gaussian_matrix(3);
  const TracedMatrix ex = conditional_expectation(full, x);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      CHECK(ex.entries(i, j) == (i == j ? x.entries(i, j) : std::complex<double>(0)));
  CHECK(std::abs(tau(ex) - tau(x)) <= 1e-12);

  // multiplicative on block upper triangulars
  for (int trial = 0; trial < 60; ++trial) {
    const BlockStructure b({1, 2, 1});
    const TracedMatrix a1 = rng.random_block_upper(b);
    const TracedMatrix a2 = rng.random_block_upper(b);
    const TracedMatrix lhs = conditional_expectation(b, a1 * a2);
    const TracedMatrix rhs = conditional_expectation(b, a1) * conditional_expectation(b, a2);
    CHECK((lhs.entries - rhs.entries).norm() <= 1e-11 * (1.0 + rhs.entries.norm()));
  }
}

TEST_CASE("membership two routes") {
  const BlockStructure b({1, 1});
  Eigen::MatrixXcd low = Eigen::MatrixXcd::Zero(2, 2);
  low(1, 0) = 1.0;
  const MembershipReport r = hardy_membership(b, kP2, TracedMatrix(low, 1.0));
  CHECK_FALSE(r.member());
  CHECK(r.agree());
  CHECK(r.max_pairing == doctest::Approx(1.0));

  RandomSource rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    std::vector<int> sizes;
    Eigen::Index left = n;
    while (left > 0) {
      const int s = rng.uniform_int(1, static_cast<int>(std::min<Eigen::Index>(left, 3)));
      sizes.push_back(s);
      left -= s;
    }
    const BlockStructure blocks(sizes);
    TracedMatrix x = rng.gaussian_matrix(n);
    if (trial % 3 == 1) x = triangular_projection(blocks, x);
    const MembershipReport rep = hardy_membership(blocks, kP2, x);
    CHECK(rep.agree());
    if (trial % 3 == 1) CHECK(rep.member());
  }
}

TEST_CASE("triangular projection") {
  const BlockStructure b({1, 1});
  Eigen::MatrixXcd m(2, 2);
  m << std::complex<double>(1, 2), std::complex<double>(3, 0),
      std::complex<double>(5, -1), std::complex<double>(0, 4);
  const TracedMatrix p = triangular_projection(b, TracedMatrix(m, 1.0));
  CHECK(p.entries(0, 0) == std::complex<double>(1, 2));
  CHECK(p.entries(0, 1) == std::complex<double>(3, 0));
  CHECK(p.entries(1, 0) == std::complex<double>(0, 0));
  CHECK(p.entries(1, 1) == std::complex<double>(0, 4));

  RandomSource rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const BlockStructure blocks({2, 1, 1});
    const TracedMatrix x = rng.gaussian_matrix(4);
    const TracedMatrix px = triangular_projection(blocks, x);
    CHECK((triangular_projection(blocks, px).entries - px.entries).norm() == 0.0);
    CHECK(hardy_membership(blocks, kP2, px).member());
  }
}

TEST_CASE("riesz decomposition") {
  const BlockStructure b({1, 1});
  // strictly lower input: h = 0, z = the adjoint image
  Eigen::MatrixXcd low = Eigen::MatrixXcd::Zero(2, 2);
  low(1, 0) = 1.0;
  const RieszDecomposition dec = riesz_decomposition(b, TracedMatrix(low, 1.0));
  CHECK(dec.hardy_part.entries.norm() == 0.0);
  CHECK(dec.conjugate_part.entries(0, 1) == std::complex<double>(1, 0));

  RandomSource rng(27);
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const BlockStructure blocks = BlockStructure::full_triangular(n);
    const TracedMatrix x = rng.gaussian_matrix(n);
    const RieszDecomposition d = riesz_decomposition(blocks, x);
    CHECK((x.entries - (d.hardy_part + adjoint(d.conjugate_part)).entries).norm() <=
          1e-12 * (1.0 + x.entries.norm()));
    CHECK(hardy_membership(blocks, kP2, d.hardy_part).member());
    CHECK(hardy_membership(blocks, kP2, d.conjugate_part).member());
    CHECK(conditional_expectation(blocks, d.conjugate_part).entries.norm() <= 1e-12);

    // uniqueness: perturbing h inside the algebra forces z out of it
    TracedMatrix h2 = d.hardy_part;
    h2.entries(0, std::min<Eigen::Index>(1, n - 1)) += 0.5;
    const TracedMatrix z2 = adjoint(x - h2);
    CHECK_FALSE(hardy_membership(blocks, kP2, z2).member());
  }
}

TEST_CASE("dual pairing against hardy samples") {
  RandomSource rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + trial % 5;
    const BlockStructure blocks({static_cast<int>(n) - 1, 1});
    const TracedMatrix y = rng.gaussian_matrix(n);
    std::vector<TracedMatrix> samples;
    for (int s = 0; s < 30; ++s) samples.push_back(rng.random_block_upper(blocks));
    CHECK(dual_pairing_check(blocks, kP2, y, samples));
    // strictly lower y annihilates every hardy sample
    const TracedMatrix low = y - triangular_projection(blocks, y);
    for (const auto& a : samples)
      CHECK(std::abs(tau(a * adjoint(low))) <= 1e-10);
  }
}

TEST_CASE("truncation growth probe") {
  RandomSource rng(33);
  const auto rows = truncation_growth_probe(kP2, {1, 4, 16}, rng);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) {
    if (row.n == 1) CHECK(row.ratio == doctest::Approx(1.0));
    CHECK(row.ratio > 0.0);
    CHECK(std::isfinite(row.ratio));
  }
  CHECK_THROWS_AS(truncation_growth_probe(kP2, {300}, rng), std::invalid_argument);
}

}  // TEST_SUITE
