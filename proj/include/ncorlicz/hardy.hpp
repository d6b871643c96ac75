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

#ifndef NCORLICZ_HARDY_HPP
#define NCORLICZ_HARDY_HPP

#include <string>
#include <vector>

#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

class RandomSource;

/// An ordered partition of {0..n-1} into contiguous blocks.  Block upper
/// triangular matrices form the subdiagonal algebra A; the block diagonal
/// is its diagonal D.  m = n is the fully triangular case, m = 1 the
/// degenerate A = M.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> sizes);
  static BlockStructure full_triangular(Eigen::Index n);

  Eigen::Index dim() const { return dim_; }
  int block_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  int block_of(Eigen::Index index) const { return block_of_[static_cast<std::size_t>(index)]; }

  bool in_algebra(Eigen::Index i, Eigen::Index j) const { return block_of(i) <= block_of(j); }
  bool in_diagonal(Eigen::Index i, Eigen::Index j) const { return block_of(i) == block_of(j); }
  bool strictly_upper(Eigen::Index i, Eigen::Index j) const { return block_of(i) < block_of(j); }

 private:
  std::vector<int> sizes_;
  std::vector<int> block_of_;
  Eigen::Index dim_ = 0;
};

/// E(x): zeroes every entry outside the diagonal blocks.  Idempotent,
/// trace-preserving, and multiplicative on the algebra.
TracedMatrix conditional_expectation(const BlockStructure& b, const TracedMatrix& x);

struct MembershipReport {
  bool annihilator = false;  // tau(x a) = 0 for the A_0 matrix-unit basis
  bool structural = false;   // entries strictly below the block diagonal vanish
  double max_pairing = 0.0;
  bool member() const { return annihilator && structural; }
  bool agree() const { return annihilator == structural; }
};

/// Hardy-space membership via two independent tests.  The N-function is
/// part of the space's definition but plays no role at finite dimension,
/// where every matrix already lies in the weak Orlicz space.
MembershipReport hardy_membership(const BlockStructure& b, const NFunction& f,
                                  const TracedMatrix& x, double tol = 1e-10);

/// P(x): keeps the block diagonal and everything above.
TracedMatrix triangular_projection(const BlockStructure& b, const TracedMatrix& x);

struct RieszDecomposition {
  TracedMatrix hardy_part;      // h = P(x)
  TracedMatrix conjugate_part;  // z = (x - P(x))^*, E(z) = 0
};

/// x = h + z* with h in the Hardy space and z in its expectation kernel.
RieszDecomposition riesz_decomposition(const BlockStructure& b, const TracedMatrix& x);

struct TruncationProbeRow {
  std::string nfunction;
  int n = 0;
  std::string input;  // "ones" | "gaussian" | "unitary"
  double ratio = 0.0;  // ||P(x)||_{Phi,inf} / ||x||_{Phi,inf}
};

/// Empirical growth of the triangular truncation in the weak quasi-norm on
/// adversarial inputs, for the fully triangular structure at each size.
std::vector<TruncationProbeRow> truncation_growth_probe(const NFunction& f,
                                                        const std::vector<int>& sizes,
                                                        RandomSource& rng);

/// Verifies tau(a y*) = tau(a h*) for every sample a, where (h, z) is the
/// Riesz decomposition of y; the finite-model content of the Hardy duality.
bool dual_pairing_check(const BlockStructure& b, const NFunction& f, const TracedMatrix& y,
                        const std::vector<TracedMatrix>& hardy_samples, double tol = 1e-10);

}  // namespace ncorlicz

#endif  // NCORLICZ_HARDY_HPP
