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

#include "ncorlicz/duality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ncorlicz/spectra.hpp"

namespace ncorlicz {

std::complex<double> pairing(const TracedMatrix& x, const TracedMatrix& y) {
  require_compatible(x, y);
  return tau(x * adjoint(y));
}

NormReport dual_norm_bruteforce(const DecreasingStepFunction& m, const NFunction& f) {
  if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
  const NFunction psi = f.complement();
  const auto fund = [&](double t) { return 1.0 / psi.inverse(1.0 / t); };
  // <m, y_t> for the extreme candidate y_t = chi_{[0,t)}/fund(t)
  const auto candidate = [&](double t) { return m.integral_to(t) / fund(t); };

  NormReport best{0.0, std::nullopt, NormMethod::SegmentSearch};
  const auto consider = [&](double t) {
    const double v = candidate(t);
    if (v > best.value) {
      best.value = v;
      best.attained_at = t;
    }
  };
  for (std::size_t k = 0; k < m.size(); ++k) consider(m.breakpoint(k));

  // dense log sweep; the sup below the first breakpoint sits at that
  // breakpoint (t/fund(t) increases) and past the support at the last one
  const double lo = m.breakpoint(0) * 1e-2, hi = m.total_length();
  const int dense = 512;
  for (int i = 0; i <= dense; ++i) consider(lo * std::pow(hi / lo, double(i) / dense));

  // golden refinement around the best candidate
  double a = best.value > 0.0 ? *best.attained_at / 1.05 : lo;
  double b = std::min(hi, (best.attained_at ? *best.attained_at : hi) * 1.05);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double g1 = candidate(x1), g2 = candidate(x2);
  for (int it = 0; it < 80 && b - a > 1e-14 * b; ++it) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + gr * (b - a);
      g2 = candidate(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - gr * (b - a);
      g1 = candidate(x1);
    }
  }
  consider(x1);
  consider(x2);
  return best;
}

BracketReport weak_dual_bracket(const NFunction& f, int trials, int n, RandomSource& rng) {
  BracketReport report;
  report.family = f.describe();
  report.dim = n;
  report.trials = trials;

  double aligned_best = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const TracedMatrix x = rng.gaussian_matrix(n);
    const TracedMatrix y = rng.gaussian_matrix(n);
    const DecreasingStepFunction mx = singular_value_function(x);
    const DecreasingStepFunction my = singular_value_function(y);
    if (mx.is_zero() || my.is_zero()) continue;  // zero matrices are skipped
    const double denom = weak_orlicz_quasinorm(mx, f).value * lorentz_norm(my, f).value;
    const double r = std::abs(pairing(x, y)) / denom;
    report.c_emp = std::max(report.c_emp, r);
    // aligned diagonal realization of the same rearrangement profiles:
    // the rearrangement inequality makes this the extreme pair
    const double aligned = pairing_integral(mx, my) / denom;
    aligned_best = std::max(aligned_best, aligned);
  }
  report.c_emp = std::max(report.c_emp, aligned_best);
  report.attained_ratio = report.c_emp > 0.0 ? aligned_best / report.c_emp : 0.0;
  return report;
}

}  // namespace ncorlicz
