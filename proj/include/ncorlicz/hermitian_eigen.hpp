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

#ifndef NCORLICZ_HERMITIAN_EIGEN_HPP
#define NCORLICZ_HERMITIAN_EIGEN_HPP

#include <Eigen/Dense>

namespace ncorlicz {

struct HermitianEigenOptions {
  /// Stop when the off-diagonal Frobenius norm falls below this times ||A||_F.
  double off_diagonal_tol = 1e-13;
  int max_sweeps = 100;
};

struct HermitianEigenResult {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXcd eigenvectors;  // columns; empty unless requested
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix: each rotation
/// annihilates one off-diagonal pair through a phased Givens rotation.
/// Throws numerical_error when the sweep cap is reached before the
/// off-diagonal norm drops under tolerance.
HermitianEigenResult hermitian_eigen(const Eigen::MatrixXcd& a, bool with_vectors = false,
                                     const HermitianEigenOptions& opt = {});

}  // namespace ncorlicz

#endif  // NCORLICZ_HERMITIAN_EIGEN_HPP
