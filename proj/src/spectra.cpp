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

#include "ncorlicz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ncorlicz/errors.hpp"

namespace ncorlicz {

Eigen::VectorXd singular_values(const TracedMatrix& x, const SpectraOptions& opt) {
  const Eigen::MatrixXcd gram = x.entries.adjoint() * x.entries;
  HermitianEigenResult eig = hermitian_eigen(gram, /*with_vectors=*/false, opt.eig);
  Eigen::VectorXd sv(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    sv(i) = std::sqrt(std::max(0.0, eig.eigenvalues(i)));
  return sv;  // descending since the spectrum came out descending
}

DecreasingStepFunction singular_value_function(const TracedMatrix& x, const SpectraOptions& opt) {
  const Eigen::VectorXd sv = singular_values(x, opt);
  std::vector<double> vals(sv.data(), sv.data() + sv.size());
  return DecreasingStepFunction::from_values(std::move(vals), x.trace_scale, opt.merge_tol,
                                             opt.zero_rel_tol);
}

double distribution_function(const TracedMatrix& x, double s, const SpectraOptions& opt) {
  if (!(s > 0.0)) throw std::domain_error("s must be positive");
  const Eigen::VectorXd sv = singular_values(x, opt);
  double m = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > s) m += x.trace_scale;
  return m;
}

double hardy_transform(const DecreasingStepFunction& m, double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  return m.integral_to(t);
}

double hardy_transform(const ParametricDecay& m, double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  return m.integral_to(t);
}

ParametricDecay extremal_element(const NFunction& f, double cutoff) {
  if (f.family() != NFunction::Family::Power)
    throw std::invalid_argument("extremal element requires the power family");
  if (!(cutoff > 0.0)) throw std::domain_error("cutoff must be positive");
  const double p = f.parameter();
  // Phi^{-1}(1/t) = (p/t)^{1/p}
  return ParametricDecay({{0.0, cutoff, std::pow(p, 1.0 / p), 1.0 / p}});
}

bool sum_inequality_check(const TracedMatrix& x, const TracedMatrix& y, double t, double s,
                          double tol) {
  require_compatible(x, y);
  if (!(t > 0.0) || !(s > 0.0)) throw std::domain_error("t and s must be positive");
  const DecreasingStepFunction mx = singular_value_function(x);
  const DecreasingStepFunction my = singular_value_function(y);
  const DecreasingStepFunction msum = singular_value_function(x + y);
  const DecreasingStepFunction mprod = singular_value_function(x * y);

  const double sum_lhs = msum.value_at(t + s);
  const double sum_rhs = mx.value_at(t) + my.value_at(s);
  const double prod_lhs = mprod.value_at(t + s);
  const double prod_rhs = mx.value_at(t) * my.value_at(s);
  return sum_lhs <= sum_rhs + tol * (1.0 + sum_rhs) &&
         prod_lhs <= prod_rhs + tol * (1.0 + prod_rhs);
}

double sup_t_phi(const DecreasingStepFunction& m, const NFunction& f, double c) {
  if (!(c > 0.0)) throw std::domain_error("c must be positive");
  // On [t_{k-1}, t_k) the integrand t Phi(v_k/c) increases in t, so the sup
  // over each step is approached at its right endpoint.
  double sup = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k)
    sup = std::max(sup, m.breakpoint(k) * f.value(m.steps()[k].value / c));
  return sup;
}

double sup_lambda_phi(const Eigen::VectorXd& sv, double trace_scale, const NFunction& f,
                      double c) {
  if (!(c > 0.0)) throw std::domain_error("c must be positive");
  // lambda_s is constant between consecutive distinct singular values and
  // s Phi(s/c) increases in s, so the sup is approached as s tends to each
  // distinct value from below, where lambda = trace_scale * #(>= that value).
  double sup = 0.0;
  Eigen::Index i = 0;
  while (i < sv.size()) {
    const double v = sv(i);
    if (!(v > 0.0)) break;
    Eigen::Index j = i;
    while (j < sv.size() && sv(j) == v) ++j;
    sup = std::max(sup, trace_scale * static_cast<double>(j) * f.value(v / c));
    i = j;
  }
  return sup;
}

}  // namespace ncorlicz
