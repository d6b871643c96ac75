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

#ifndef NCORLICZ_NORMS_HPP
#define NCORLICZ_NORMS_HPP

#include <optional>
#include <string>

#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/spectra.hpp"
#include "ncorlicz/step_function.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

enum class NormMethod { ClosedForm, Bisection, SegmentSearch };

std::string to_string(NormMethod m);

struct NormReport {
  double value = 0.0;
  std::optional<double> attained_at;  // critical point t*, when one exists
  NormMethod method = NormMethod::ClosedForm;
};

/// Luxemburg norm inf{ lam > 0 : sum_k length_k Phi(value_k / lam) <= 1 },
/// by bisection on the strictly decreasing modular.
NormReport luxemburg_norm(const DecreasingStepFunction& m, const NFunction& f);
NormReport luxemburg_norm(const TracedMatrix& x, const NFunction& f);

/// Weak Orlicz quasi-norm sup_t mu_t / Phi^{-1}(1/t).  Exact finite
/// maximization over step right-endpoints; per-piece search for decays
/// (throws divergence_error when the sup is unbounded).
NormReport weak_orlicz_quasinorm(const DecreasingStepFunction& m, const NFunction& f);
NormReport weak_orlicz_quasinorm(const ParametricDecay& m, const NFunction& f);
NormReport weak_orlicz_quasinorm(const TracedMatrix& x, const NFunction& f);

/// The equivalent Banach norm sup_t Psi^{-1}(1/t) int_0^t mu_s ds
/// (sampling plus golden-section refinement per linearity segment).
NormReport equivalent_banach_norm(const DecreasingStepFunction& m, const NFunction& f);
NormReport equivalent_banach_norm(const ParametricDecay& m, const NFunction& f);

/// Marcinkiewicz norm sup_t (1/fund(t)) int_0^t mu_s ds with fund the
/// fundamental function; cross-asserts agreement with the equivalent
/// Banach norm to 1e-9.
NormReport marcinkiewicz_norm(const DecreasingStepFunction& m, const NFunction& f);
NormReport marcinkiewicz_norm(const ParametricDecay& m, const NFunction& f);

/// Weak L_p quasi-norm computed through both the mu-form sup t^{1/p} mu_t
/// and the lambda-form sup s lambda_s^{1/p}; asserts their agreement.
NormReport weak_lp_norm(const DecreasingStepFunction& m, double p);

/// Lorentz norm as the Stieltjes sum sum_k value_k (fund(t_k) - fund(t_{k-1})).
NormReport lorentz_norm(const DecreasingStepFunction& m, const NFunction& f);

/// Seminorms N_0 = limsup_{t->0} mu~_t/fund(t), N_inf the t->inf analogue.
/// Identically zero on step functions; closed-form limits for decays under
/// the power family, numeric limit detection otherwise (+inf possible).
double seminorm_N0(const DecreasingStepFunction& m, const NFunction& f);
double seminorm_Ninf(const DecreasingStepFunction& m, const NFunction& f);
double seminorm_N0(const ParametricDecay& m, const NFunction& f);
double seminorm_Ninf(const ParametricDecay& m, const NFunction& f);

/// int_0^inf a(t) b(t) dt for step functions (the scalar duality pairing).
double pairing_integral(const DecreasingStepFunction& a, const DecreasingStepFunction& b);

/// sup_t (mu~_t/t) / Phi^{-1}(1/t): the weak gauge of the Cesaro average,
/// whose boundedness relative to the weak quasi-norm is the Hardy-transform
/// inequality for 1 < a_Phi <= b_Phi < inf.
double cesaro_gauge(const DecreasingStepFunction& m, const NFunction& f);

}  // namespace ncorlicz

#endif  // NCORLICZ_NORMS_HPP
