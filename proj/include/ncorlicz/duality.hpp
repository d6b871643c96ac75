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

#ifndef NCORLICZ_DUALITY_HPP
#define NCORLICZ_DUALITY_HPP

#include <string>

#include "ncorlicz/nfunction.hpp"
#include "ncorlicz/norms.hpp"
#include "ncorlicz/random.hpp"
#include "ncorlicz/step_function.hpp"
#include "ncorlicz/traced_matrix.hpp"

namespace ncorlicz {

/// Trace pairing tau(x y*).
std::complex<double> pairing(const TracedMatrix& x, const TracedMatrix& y);

/// Brute-force dual norm of the Lorentz unit ball: the candidate family
/// y_t = chi_{[0,t)}/fund(t) is extreme (each has Lorentz norm exactly 1),
/// so sup_t mu~_t/fund(t) over the step grid plus refinement recovers the
/// Marcinkiewicz norm.
NormReport dual_norm_bruteforce(const DecreasingStepFunction& m, const NFunction& f);

struct BracketReport {
  std::string family;
  int dim = 0;
  int trials = 0;
  /// sup over trials of |tau(x y*)| / (||x||_{Phi,inf} ||mu(y)||_{Lorentz}).
  double c_emp = 0.0;
  /// best aligned-diagonal ratio divided by c_emp.
  double attained_ratio = 0.0;
};

/// Empirical two-sided bracket for the weak-space duality: boundedness of
/// the Hoelder-type constant over random pairs, with near-attainment on
/// aligned diagonal pairs.
BracketReport weak_dual_bracket(const NFunction& f, int trials, int n, RandomSource& rng);

}  // namespace ncorlicz

#endif  // NCORLICZ_DUALITY_HPP
