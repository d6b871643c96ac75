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

#include "ncorlicz/traced_matrix.hpp"

#include <stdexcept>

namespace ncorlicz {

TracedMatrix::TracedMatrix(Eigen::MatrixXcd m, double c) : entries(std::move(m)), trace_scale(c) {
  if (entries.rows() != entries.cols()) throw std::invalid_argument("matrix must be square");
  if (entries.rows() < 1) throw std::invalid_argument("matrix must be at least 1x1");
  if (!(c > 0.0)) throw std::invalid_argument("trace scale must be positive");
}

TracedMatrix TracedMatrix::identity(Eigen::Index n, double c) {
  return TracedMatrix(Eigen::MatrixXcd::Identity(n, n), c);
}

TracedMatrix TracedMatrix::zero(Eigen::Index n, double c) {
  return TracedMatrix(Eigen::MatrixXcd::Zero(n, n), c);
}

TracedMatrix TracedMatrix::unit(Eigen::Index n, Eigen::Index i, Eigen::Index j, double c) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  m(i, j) = 1.0;
  return TracedMatrix(std::move(m), c);
}

std::complex<double> tau(const TracedMatrix& x) { return x.trace_scale * x.entries.trace(); }

double total_measure(const TracedMatrix& x) { return x.trace_scale * static_cast<double>(x.dim()); }

TracedMatrix adjoint(const TracedMatrix& x) {
  return TracedMatrix(x.entries.adjoint(), x.trace_scale);
}

void require_compatible(const TracedMatrix& x, const TracedMatrix& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("matrix dimensions differ");
  if (x.trace_scale != y.trace_scale) throw std::invalid_argument("trace scales differ");
}

TracedMatrix operator+(const TracedMatrix& x, const TracedMatrix& y) {
  require_compatible(x, y);
  return TracedMatrix(x.entries + y.entries, x.trace_scale);
}

TracedMatrix operator-(const TracedMatrix& x, const TracedMatrix& y) {
  require_compatible(x, y);
  return TracedMatrix(x.entries - y.entries, x.trace_scale);
}

TracedMatrix operator*(const TracedMatrix& x, const TracedMatrix& y) {
  require_compatible(x, y);
  return TracedMatrix(x.entries * y.entries, x.trace_scale);
}

TracedMatrix operator*(std::complex<double> a, const TracedMatrix& x) {
  return TracedMatrix(a * x.entries, x.trace_scale);
}

}  // namespace ncorlicz
