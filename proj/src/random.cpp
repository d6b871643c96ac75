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

#include "ncorlicz/random.hpp"

#include <cmath>
#include <stdexcept>

#include "ncorlicz/hardy.hpp"
#include "ncorlicz/weighted.hpp"

namespace ncorlicz {

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

RandomSource RandomSource::fork(std::string_view label) {
  return RandomSource(mix_seed(engine_(), label));
}

double RandomSource::uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(engine_);
}

double RandomSource::log_uniform(double a, double b) {
  return std::exp(uniform(std::log(a), std::log(b)));
}

int RandomSource::uniform_int(int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(engine_);
}

double RandomSource::gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

std::complex<double> RandomSource::complex_gaussian() {
  const double re = gaussian(), im = gaussian();
  return {re / std::sqrt(2.0), im / std::sqrt(2.0)};
}

TracedMatrix RandomSource::gaussian_matrix(Eigen::Index n, double trace_scale) {
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) m(i, j) = complex_gaussian();
  return TracedMatrix(std::move(m), trace_scale);
}

TracedMatrix RandomSource::haar_unitary(Eigen::Index n, double trace_scale) {
  const Eigen::MatrixXcd g = gaussian_matrix(n, trace_scale).entries;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fix the phases so the distribution is Haar
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    q.col(j) *= std::abs(d) == 0.0 ? 1.0 : d / std::abs(d);
  }
  return TracedMatrix(std::move(q), trace_scale);
}

Density RandomSource::random_density(Eigen::Index n, double trace_scale) {
  const Eigen::MatrixXcd a = gaussian_matrix(n, trace_scale).entries;
  Eigen::MatrixXcd d = a * a.adjoint() + 0.1 * Eigen::MatrixXcd::Identity(n, n);
  d /= d.norm() / std::sqrt(static_cast<double>(n));
  return Density(TracedMatrix(std::move(d), trace_scale));
}

DecreasingStepFunction RandomSource::random_steps(int max_steps, double trace_scale) {
  const int k = uniform_int(1, max_steps);
  std::vector<double> values(static_cast<std::size_t>(k));
  for (double& v : values) v = log_uniform(1e-3, 1e3);
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<DecreasingStepFunction::Step> steps;
  for (double v : values) {
    const double len = trace_scale * uniform_int(1, 3);
    if (!steps.empty() && steps.back().value - v <= 1e-9 * steps.back().value)
      steps.back().length += len;
    else
      steps.push_back({v, len});
  }
  return DecreasingStepFunction(std::move(steps));
}

TracedMatrix RandomSource::random_block_upper(const BlockStructure& b, double trace_scale) {
  const Eigen::Index n = b.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (b.in_algebra(i, j)) m(i, j) = complex_gaussian();
  return TracedMatrix(std::move(m), trace_scale);
}

TracedMatrix diagonal_realization(const DecreasingStepFunction& m, double trace_scale) {
  std::vector<double> diag;
  for (const auto& st : m.steps()) {
    const double count = st.length / trace_scale;
    const auto reps = static_cast<Eigen::Index>(std::llround(count));
    if (std::abs(count - static_cast<double>(reps)) > 1e-9 || reps < 1)
      throw std::invalid_argument("step lengths must be integer multiples of the trace scale");
    for (Eigen::Index r = 0; r < reps; ++r) diag.push_back(st.value);
  }
  const Eigen::Index n = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = diag[static_cast<std::size_t>(i)];
  return TracedMatrix(std::move(d), trace_scale);
}

}  // namespace ncorlicz
