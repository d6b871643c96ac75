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

#include "ncorlicz/hardy.hpp"

#include <cmath>
#include <stdexcept>

#include "ncorlicz/norms.hpp"
#include "ncorlicz/random.hpp"
#include "ncorlicz/spectra.hpp"

namespace ncorlicz {

BlockStructure::BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("block structure needs at least one block");
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    if (sizes_[b] < 1) throw std::invalid_argument("block sizes must be positive");
    for (int k = 0; k < sizes_[b]; ++k) block_of_.push_back(static_cast<int>(b));
  }
  dim_ = static_cast<Eigen::Index>(block_of_.size());
}

BlockStructure BlockStructure::full_triangular(Eigen::Index n) {
  return BlockStructure(std::vector<int>(static_cast<std::size_t>(n), 1));
}

TracedMatrix conditional_expectation(const BlockStructure& b, const TracedMatrix& x) {
  if (b.dim() != x.dim()) throw std::invalid_argument("block structure and matrix dimensions differ");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(x.dim(), x.dim());
  for (Eigen::Index i = 0; i < x.dim(); ++i)
    for (Eigen::Index j = 0; j < x.dim(); ++j)
      if (b.in_diagonal(i, j)) out(i, j) = x.entries(i, j);
  return TracedMatrix(std::move(out), x.trace_scale);
}

MembershipReport hardy_membership(const BlockStructure& b, const NFunction&,
                                  const TracedMatrix& x, double tol) {
  if (b.dim() != x.dim()) throw std::invalid_argument("block structure and matrix dimensions differ");
  MembershipReport r;

  // (1) annihilator test over the matrix-unit basis of A_0 = {a in A : E(a) = 0}:
  // the units e_{ij} with block(i) < block(j); tau(x e_{ij}) = c x_{ji}.
  r.annihilator = true;
  for (Eigen::Index i = 0; i < x.dim(); ++i) {
    for (Eigen::Index j = 0; j < x.dim(); ++j) {
      if (!b.strictly_upper(i, j)) continue;
      const TracedMatrix unit = TracedMatrix::unit(x.dim(), i, j, x.trace_scale);
      const double pairing = std::abs(tau(x * unit));
      r.max_pairing = std::max(r.max_pairing, pairing);
      if (pairing >= tol) r.annihilator = false;
    }
  }

  // (2) structural test: nothing strictly below the block diagonal.
  r.structural = true;
  for (Eigen::Index i = 0; i < x.dim(); ++i)
    for (Eigen::Index j = 0; j < x.dim(); ++j)
      if (b.strictly_upper(j, i) && x.trace_scale * std::abs(x.entries(i, j)) >= tol)
        r.structural = false;
  return r;
}

TracedMatrix triangular_projection(const BlockStructure& b, const TracedMatrix& x) {
  if (b.dim() != x.dim()) throw std::invalid_argument("block structure and matrix dimensions differ");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(x.dim(), x.dim());
  for (Eigen::Index i = 0; i < x.dim(); ++i)
    for (Eigen::Index j = 0; j < x.dim(); ++j)
      if (b.in_algebra(i, j)) out(i, j) = x.entries(i, j);
  return TracedMatrix(std::move(out), x.trace_scale);
}

RieszDecomposition riesz_decomposition(const BlockStructure& b, const TracedMatrix& x) {
  TracedMatrix h = triangular_projection(b, x);
  return {h, adjoint(x - h)};
}

std::vector<TruncationProbeRow> truncation_growth_probe(const NFunction& f,
                                                        const std::vector<int>& sizes,
                                                        RandomSource& rng) {
  std::vector<TruncationProbeRow> table;
  for (int n : sizes) {
    if (n < 1 || n > 256) throw std::invalid_argument("probe sizes must lie in [1, 256]");
    const BlockStructure b = BlockStructure::full_triangular(n);
    const auto ratio_of = [&](const TracedMatrix& x) {
      const double denom = weak_orlicz_quasinorm(x, f).value;
      return weak_orlicz_quasinorm(triangular_projection(b, x), f).value / denom;
    };
    table.push_back({f.describe(), n, "ones",
                     ratio_of(TracedMatrix(Eigen::MatrixXcd::Ones(n, n), 1.0))});
    table.push_back({f.describe(), n, "gaussian", ratio_of(rng.gaussian_matrix(n))});
    table.push_back({f.describe(), n, "unitary", ratio_of(rng.haar_unitary(n))});
  }
  return table;
}

bool dual_pairing_check(const BlockStructure& b, const NFunction&, const TracedMatrix& y,
                        const std::vector<TracedMatrix>& hardy_samples, double tol) {
  const RieszDecomposition dec = riesz_decomposition(b, y);
  const TracedMatrix y_star = adjoint(y);
  const TracedMatrix h_star = adjoint(dec.hardy_part);
  for (const TracedMatrix& a : hardy_samples) {
    const std::complex<double> lhs = tau(a * y_star);
    const std::complex<double> rhs = tau(a * h_star);
    if (std::abs(lhs - rhs) >= tol) return false;
  }
  return true;
}

}  // namespace ncorlicz
