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

#ifndef NCORLICZ_TRACED_MATRIX_HPP
#define NCORLICZ_TRACED_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace ncorlicz {

/// A complex n x n matrix together with a trace scale c > 0; the trace
/// functional is tau(x) = c * Tr(x), so tau(1) = c * n plays the role of
/// the total measure.
struct TracedMatrix {
  Eigen::MatrixXcd entries;
  double trace_scale = 1.0;

  TracedMatrix() = default;
  TracedMatrix(Eigen::MatrixXcd m, double c);

  Eigen::Index dim() const { return entries.rows(); }

  static TracedMatrix identity(Eigen::Index n, double c = 1.0);
  static TracedMatrix zero(Eigen::Index n, double c = 1.0);
  /// Matrix unit e_{ij}.
  static TracedMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j, double c = 1.0);
};

/// tau(x) = trace_scale * Tr(x).
std::complex<double> tau(const TracedMatrix& x);
/// tau(1) for the algebra x lives in.
double total_measure(const TracedMatrix& x);

TracedMatrix adjoint(const TracedMatrix& x);
TracedMatrix operator+(const TracedMatrix& x, const TracedMatrix& y);
TracedMatrix operator-(const TracedMatrix& x, const TracedMatrix& y);
TracedMatrix operator*(const TracedMatrix& x, const TracedMatrix& y);
TracedMatrix operator*(std::complex<double> a, const TracedMatrix& x);

/// Throws std::invalid_argument unless shapes and trace scales agree.
void require_compatible(const TracedMatrix& x, const TracedMatrix& y);

}  // namespace ncorlicz

#endif  // NCORLICZ_TRACED_MATRIX_HPP
