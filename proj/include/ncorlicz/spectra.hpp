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

#ifndef NCORLICZ_SPECTRA_HPP
#define NCORLICZ_SPECTRA_HPP

#include <Eigen/Dense>

#include "ncorlicz/hermitian_eigen.hpp"
#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/step_function.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

struct SpectraOptions {
  HermitianEigenOptions eig;
  /// Singular values closer than this (absolute) merge into one step.
  double merge_tol = 1e-10;
  /// Values below this times the largest singular value are dropped as zero.
  double zero_rel_tol = 1e-12;
};

/// Raw singular values of x, descending, zeros included: square roots of the
/// spectrum of x* x.
Eigen::VectorXd singular_values(const TracedMatrix& x, const SpectraOptions& opt = {});

/// The generalized singular value function mu(x): eigenvalues of |x| merged
/// into steps of length trace_scale each.
DecreasingStepFunction singular_value_function(const TracedMatrix& x,
                                               const SpectraOptions& opt = {});

/// lambda_s(x) = tau(spectral projection of |x| over (s, inf)).
double distribution_function(const TracedMatrix& x, double s, const SpectraOptions& opt = {});

/// Hardy transform int_0^t mu_s ds.
double hardy_transform(const DecreasingStepFunction& m, double t);
double hardy_transform(const ParametricDecay& m, double t);

/// The canonical unit-ball extremal mu_t = Phi^{-1}(1/t) on (0, cutoff],
/// defined for the power family (closed-form inverse).
ParametricDecay extremal_element(const NFunction& f, double cutoff);

/// Checks mu_{t+s}(x+y) <= mu_t(x) + mu_s(y) and mu_{t+s}(xy) <= mu_t(x) mu_s(y).
bool sum_inequality_check(const TracedMatrix& x, const TracedMatrix& y, double t, double s,
                          double tol = 1e-9);

/// sup_{t>0} t Phi(mu_t / c), computed exactly over the step critical points.
double sup_t_phi(const DecreasingStepFunction& m, const NFunction& f, double c);

/// sup_{s>0} lambda_s Phi(s / c) evaluated from a raw singular value list
/// with trace scale; the distribution-side of the rearrangement identity.
double sup_lambda_phi(const Eigen::VectorXd& singular_values_desc, double trace_scale,
                      const NFunction& f, double c);

}  // namespace ncorlicz

#endif  // NCORLICZ_SPECTRA_HPP
