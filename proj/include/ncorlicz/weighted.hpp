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

#ifndef NCORLICZ_WEIGHTED_HPP
#define NCORLICZ_WEIGHTED_HPP

#include <functional>
#include <vector>

#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/norms.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

/// A faithful normal weight presented through its density: a Hermitian
/// positive definite matrix D with omega(x) = tau(D x).  The spectral
/// decomposition is computed once at construction.
class Density {
 public:
  explicit Density(TracedMatrix d, double pd_rel_tol = 1e-12);

  const TracedMatrix& matrix() const { return matrix_; }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
  Eigen::Index dim() const { return matrix_.dim(); }

 private:
  TracedMatrix matrix_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
};

/// omega(x) = tau(D x).
std::complex<double> weight_of(const Density& d, const TracedMatrix& x);

/// Spectral calculus g(D) = U g(Lambda) U*.
TracedMatrix functional_calculus(const Density& d, const std::function<double(double)>& g);

/// T(x) = Phi^{-1}(D)^alpha x Phi^{-1}(D)^{1-alpha}.
TracedMatrix t_map(const TracedMatrix& x, const Density& d, const NFunction& f, double alpha);

/// The weighted weak quasi-norm: the weak Orlicz quasi-norm of mu(T(x)).
NormReport weighted_weak_norm(const TracedMatrix& x, const Density& d, const NFunction& f,
                              double alpha);

struct IsometryReport {
  Eigen::Index rank = 0;         // rank of the induced map on matrix units
  bool bijective = false;        // rank == n^2
  double max_norm_deviation = 0.0;   // worst |weighted - weak(mu(Tx))| over samples
  double max_modular_excess = 0.0;   // worst violation of the |eta|-scaling bound
  bool passed = false;
};

/// Verifies that T realizes the weighted space isometrically: bijectivity
/// on matrix units, norm equality on every sample, and the convexity
/// scaling bound sup_t t Phi(mu_t(eta Tx)) <= |eta| sup_t t Phi(mu_t(Tx))
/// for |eta| <= 1.
IsometryReport isometry_check(const Density& d, const NFunction& f, double alpha,
                              const std::vector<TracedMatrix>& samples, double tol = 1e-10);

}  // namespace ncorlicz

#endif  // NCORLICZ_WEIGHTED_HPP
