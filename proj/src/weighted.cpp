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

#include "ncorlicz/weighted.hpp"

#include <cmath>
#include <stdexcept>

#include "ncorlicz/hermitian_eigen.hpp"
#include "ncorlicz/spectra.hpp"

namespace ncorlicz {

Density::Density(TracedMatrix d, double pd_rel_tol) : matrix_(std::move(d)) {
  const Eigen::MatrixXcd& m = matrix_.entries;
  if ((m - m.adjoint()).norm() > 1e-12 * std::max(1.0, m.norm()))
    throw std::invalid_argument("density must be Hermitian");
  HermitianEigenResult eig = hermitian_eigen(m, /*with_vectors=*/true);
  if (!(eig.eigenvalues.minCoeff() > pd_rel_tol * eig.eigenvalues.maxCoeff()) ||
      !(eig.eigenvalues.minCoeff() > 0.0))
    throw std::invalid_argument("density is singular (not strictly positive definite)");
  eigenvalues_ = std::move(eig.eigenvalues);
  eigenvectors_ = std::move(eig.eigenvectors);
}

std::complex<double> weight_of(const Density& d, const TracedMatrix& x) {
  require_compatible(d.matrix(), x);
  return tau(d.matrix() * x);
}

TracedMatrix functional_calculus(const Density& d, const std::function<double(double)>& g) {
  Eigen::VectorXd mapped(d.eigenvalues().size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = g(d.eigenvalues()(i));
  const Eigen::MatrixXcd& u = d.eigenvectors();
  Eigen::MatrixXcd out = u * mapped.asDiagonal() * u.adjoint();
  // real spectrum keeps the result Hermitian; enforce the structure exactly
  out = 0.5 * (out + out.adjoint().eval());
  return TracedMatrix(std::move(out), d.matrix().trace_scale);
}

TracedMatrix t_map(const TracedMatrix& x, const Density& d, const NFunction& f, double alpha) {
  require_compatible(d.matrix(), x);
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) throw std::domain_error("alpha must lie in [0, 1]");
  const TracedMatrix left =
      functional_calculus(d, [&](double lam) { return std::pow(f.inverse(lam), alpha); });
  const TracedMatrix right =
      functional_calculus(d, [&](double lam) { return std::pow(f.inverse(lam), 1.0 - alpha); });
  return left * x * right;
}

NormReport weighted_weak_norm(const TracedMatrix& x, const Density& d, const NFunction& f,
                              double alpha) {
  return weak_orlicz_quasinorm(singular_value_function(t_map(x, d, f, alpha)), f);
}

IsometryReport isometry_check(const Density& d, const NFunction& f, double alpha,
                              const std::vector<TracedMatrix>& samples, double tol) {
  const Eigen::Index n = d.dim();
  IsometryReport report;

  // (a) rank of the induced map vec(x) -> vec(W1 x W2) = (W2^T (x) W1) vec(x)
  const Eigen::MatrixXcd w1 =
      functional_calculus(d, [&](double lam) { return std::pow(f.inverse(lam), alpha); }).entries;
  const Eigen::MatrixXcd w2 =
      functional_calculus(d, [&](double lam) { return std::pow(f.inverse(lam), 1.0 - alpha); })
          .entries;
  Eigen::MatrixXcd induced(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index k = 0; k < n; ++k)
          induced(l * n + k, j * n + i) = w1(k, i) * w2(j, l);
  report.rank = induced.colPivHouseholderQr().rank();
  report.bijective = report.rank == n * n;

  // (b) factorization equality and (c) modular scaling, per sample
  for (const TracedMatrix& x : samples) {
    const TracedMatrix tx = t_map(x, d, f, alpha);
    const DecreasingStepFunction mu = singular_value_function(tx);
    const double direct = weak_orlicz_quasinorm(mu, f).value;
    const double weighted = weighted_weak_norm(x, d, f, alpha).value;
    report.max_norm_deviation =
        std::max(report.max_norm_deviation, std::abs(direct - weighted));

    const double base = sup_t_phi(mu, f, 1.0);
    for (double eta : {0.25, 0.5, 0.75, 1.0}) {
      if (mu.is_zero()) break;
      const double scaled = sup_t_phi(scale(mu, eta), f, 1.0);
      report.max_modular_excess =
          std::max(report.max_modular_excess, scaled - eta * base);
    }
  }
  report.passed = report.bijective && report.max_norm_deviation <= tol &&
                  report.max_modular_excess <= tol;
  return report;
}

}  // namespace ncorlicz
