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

#ifndef NCORLICZ_NFUNCTION_HPP
#define NCORLICZ_NFUNCTION_HPP

#include <memory>
#include <string>
#include <vector>

namespace ncorlicz {

/// Scan grids and caps used by the index / growth-condition estimators.
/// The defaults are the library-wide pinned constants; every estimator
/// reports against these unless the caller overrides them.
struct ScanConfig {
  double t_min = 1e-6;
  double t_max = 1e6;
  int points_per_decade = 40;
  double unbounded_cap = 1e3;   // grid sup beyond this is reported as unbounded
  double nabla2_c_max = 64.0;   // dilation candidates c searched in (1, c_max]
};

struct GrowthIndices {
  double lower = 1.0;  // inf_{t>0} t*phi(t)/Phi(t)
  double upper = 1.0;  // sup_{t>0} t*phi(t)/Phi(t); +inf when unbounded
  bool upper_unbounded = false;
};

struct Delta2Result {
  double constant = 0.0;  // sup Phi(2t)/Phi(t) seen on the scan grid
  bool unbounded = false;
};

struct DilationIndices {
  double lower = 0.0;  // p_phi, fitted at t -> 0
  double upper = 0.0;  // q_phi, fitted at t -> inf
  double fit_residual = 0.0;
  bool reliable = true;  // residual below 1e-3 on both fits
};

/// A Young / N-function represented through its nondecreasing left
/// derivative phi, with Phi(t) = int_0^t phi.  Values are immutable after
/// construction; all operations are pure and safe for concurrent use.
///
/// Families:
///   power      Phi(t) = t^p / p, p > 1
///   power-log  Phi(t) = t^p * log(1+t), p >= 1
///   exp        Phi(t) = e^t - t - 1 (complement: (1+t)log(1+t) - t)
///   tabulated  phi sampled on a strictly increasing positive grid with
///              power-law extrapolation exponents at both ends
/// Complements of families without a closed form are represented as a
/// conjugate wrapper evaluating the Legendre transform on demand.
class NFunction {
 public:
  enum class Family { Power, PowerLog, Exp, ExpConjugate, Tabulated, Conjugate };

  static NFunction power(double p);
  static NFunction power_log(double p);
  static NFunction exp_type();
  static NFunction tabulated(std::vector<double> grid, std::vector<double> phi,
                             double tail_exponent_low, double tail_exponent_high);

  Family family() const { return family_; }
  /// Exponent p for the power and power-log families.
  double parameter() const { return p_; }
  std::string describe() const;

  /// Phi(t).  Throws std::domain_error for t < 0.
  double value(double t) const;
  /// Left derivative phi(t).
  double derivative(double t) const;
  /// Phi^{-1}(y); bisection/Newton for families without a closed form.
  /// Throws std::domain_error for y < 0.
  double inverse(double y) const;
  /// Generalized left inverse psi(s) of phi (left endpoint on flats).
  double derivative_left_inverse(double s) const;

  /// The complementary N-function. Conjugating twice returns the original
  /// family (biconjugation is exact for N-functions).
  NFunction complement() const;

  // Tabulated accessors (empty for parametric families).
  const std::vector<double>& grid() const;
  const std::vector<double>& phi_samples() const;
  double tail_exponent_low() const;
  double tail_exponent_high() const;

 private:
  struct TabulatedData;
  NFunction(Family f, double p) : family_(f), p_(p) {}

  Family family_;
  double p_ = 0.0;
  std::shared_ptr<const TabulatedData> tab_;
  std::shared_ptr<const NFunction> base_;  // Conjugate wraps its pre-image
};

/// Phi^{-1}(t) * Psi^{-1}(t) / t for the complementary pair; lies in [1, 2].
double inverse_product_ratio(const NFunction& f, double t);

/// a_Phi = inf t phi/Phi and b_Phi = sup t phi/Phi.  Exact for the
/// parametric families; grid inf/sup over [t_min, t_max] for tables.
GrowthIndices growth_indices(const NFunction& f, const ScanConfig& cfg = {});

/// sup over the scan grid of Phi(2t)/Phi(t), flagged unbounded past cap.
Delta2Result delta2_constant(const NFunction& f, const ScanConfig& cfg = {});

/// True iff some c in (1, c_max] satisfies Phi(t) <= Phi(ct)/(2c) on the grid.
bool nabla2_check(const NFunction& f, const ScanConfig& cfg = {});

/// The fundamental function 1/Psi^{-1}(1/t) of the pair (increasing,
/// concave, 0 at 0, unbounded).
double fundamental_function(const NFunction& f, double t);

/// Matuszewska-Orlicz type dilation exponents of the fundamental function,
/// estimated by log-log fits of M(t) = sup_s fund(ts)/fund(s) at t = 2^{-k}
/// and t = 2^{k}, k = 8..20.
DilationIndices dilation_indices(const NFunction& f, const ScanConfig& cfg = {});

namespace detail {
/// Inverts a strictly increasing function with known derivative:
/// returns t with fn(t) = y, bracketing + Newton with bisection safeguard.
double invert_increasing(const NFunction& f, bool invert_value, double y);
}  // namespace detail

}  // namespace ncorlicz

#endif  // NCORLICZ_NFUNCTION_HPP
