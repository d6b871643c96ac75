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

#ifndef NCORLICZ_RANDOM_HPP
#define NCORLICZ_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "ncorlicz/step_function.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

class Density;

/// Mixes a label into a seed so independent sub-streams can be derived
/// deterministically (FNV-1a over the label, xor-folded into the seed).
std::uint64_t mix_seed(std::uint64_t seed, std::string_view label);

/// Seeded random generators for the verification suites.  One instance per
/// suite or trial; identical seeds give identical streams.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  RandomSource fork(std::string_view label);

  double uniform(double a, double b);
  double log_uniform(double a, double b);
  int uniform_int(int a, int b);  // inclusive
  double gaussian();
  std::complex<double> complex_gaussian();

  /// Ginibre matrix: i.i.d. standard complex Gaussian entries.
  TracedMatrix gaussian_matrix(Eigen::Index n, double trace_scale = 1.0);
  /// Haar unitary via phase-fixed QR of a Ginibre matrix.
  TracedMatrix haar_unitary(Eigen::Index n, double trace_scale = 1.0);
  /// Hermitian positive definite density A A* + eps I, normalized to unit
  /// operator norm scale.
  Density random_density(Eigen::Index n, double trace_scale = 1.0);
  /// Decreasing steps with integer lengths (realizable as a diagonal matrix
  /// with the given trace scale).
  DecreasingStepFunction random_steps(int max_steps, double trace_scale = 1.0);
  /// Random block upper triangular matrix.
  TracedMatrix random_block_upper(const class BlockStructure& b, double trace_scale = 1.0);

 private:
  std::mt19937_64 engine_;
};

/// Diagonal realization of a step function: values repeated length/c times.
/// Lengths must be integer multiples of the trace scale.
TracedMatrix diagonal_realization(const DecreasingStepFunction& m, double trace_scale = 1.0);

}  // namespace ncorlicz

#endif  // NCORLICZ_RANDOM_HPP
