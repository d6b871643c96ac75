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

#include "ncorlicz/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ncorlicz/errors.hpp"

namespace ncorlicz {

namespace {

double offdiagonal_norm(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace

HermitianEigenResult hermitian_eigen(const Eigen::MatrixXcd& input, bool with_vectors,
                                     const HermitianEigenOptions& opt) {
  if (input.rows() != input.cols()) throw std::invalid_argument("matrix must be square");
  const Eigen::Index n = input.rows();

  // Symmetrize; the iteration assumes exact Hermitian structure.
  Eigen::MatrixXcd a = 0.5 * (input + input.adjoint().eval());
  Eigen::MatrixXcd v;
  if (with_vectors) v = Eigen::MatrixXcd::Identity(n, n);

  const double scale = a.norm();
  HermitianEigenResult out;
  if (n == 1 || scale == 0.0 || offdiagonal_norm(a) <= opt.off_diagonal_tol * scale) {
    // already diagonal
  } else {
    bool converged = false;
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const std::complex<double> z = a(p, q);
          const double az = std::abs(z);
          if (az <= 1e-300 || az <= 1e-18 * scale) {
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            continue;
          }
          // Phase away arg(z), then a real Givens rotation annihilates the pair:
          // J = P G with P = diag(ph, 1), G = [[c, s], [-s, c]] on rows/cols (p, q).
          const std::complex<double> ph = z / az;
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double tau = (aqq - app) / (2.0 * az);
          const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;

          const std::complex<double> jpp = ph * c, jpq = ph * s;
          // columns: B = A * J
          Eigen::VectorXcd colp = a.col(p) * jpp - a.col(q) * s;
          Eigen::VectorXcd colq = a.col(p) * jpq + a.col(q) * c;
          a.col(p) = colp;
          a.col(q) = colq;
          // rows: A' = J^* B
          Eigen::RowVectorXcd rowp = std::conj(jpp) * a.row(p) - s * a.row(q);
          Eigen::RowVectorXcd rowq = std::conj(jpq) * a.row(p) + c * a.row(q);
          a.row(p) = rowp;
          a.row(q) = rowq;
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = a(p, p).real();
          a(q, q) = a(q, q).real();

          if (with_vectors) {
            Eigen::VectorXcd vp = v.col(p) * jpp - v.col(q) * s;
            Eigen::VectorXcd vq = v.col(p) * jpq + v.col(q) * c;
            v.col(p) = vp;
            v.col(q) = vq;
          }
        }
      }
      if (offdiagonal_norm(a) <= opt.off_diagonal_tol * scale) {
        converged = true;
        break;
      }
    }
    if (!converged && offdiagonal_norm(a) > opt.off_diagonal_tol * scale)
      throw numerical_error("jacobi eigensolver did not converge within the sweep cap");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

  out.eigenvalues.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
  if (with_vectors) {
    out.eigenvectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) out.eigenvectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace ncorlicz
