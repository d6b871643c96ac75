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

#ifndef NCORLICZ_STEP_FUNCTION_HPP
#define NCORLICZ_STEP_FUNCTION_HPP

#include <vector>

namespace ncorlicz {

/// A finitely supported decreasing rearrangement: right-continuous,
/// piecewise constant on [0, total_length), zero beyond.  Values are
/// strictly decreasing and positive, lengths positive.
class DecreasingStepFunction {
 public:
  struct Step {
    double value;
    double length;
  };

  DecreasingStepFunction() = default;  // the zero function
  explicit DecreasingStepFunction(std::vector<Step> steps);

  /// Canonicalizes an unsorted value list: sorts descending, drops values
  /// <= drop_tol * max, merges values within merge_tol into one step.
  static DecreasingStepFunction from_values(std::vector<double> values, double length_each,
                                            double merge_tol = 1e-10, double drop_rel_tol = 1e-12);

  bool is_zero() const { return steps_.empty(); }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  /// Right endpoint of step k (cumulative length through k).
  double breakpoint(std::size_t k) const { return cum_[k]; }
  double total_length() const { return steps_.empty() ? 0.0 : cum_.back(); }
  double max_value() const { return steps_.empty() ? 0.0 : steps_.front().value; }

  /// mu_t: the value at time t (right-continuous; 0 past the support).
  double value_at(double t) const;
  /// lambda_s: measure of {mu > s}.
  double distribution(double s) const;
  /// measure of {mu >= s}.
  double distribution_closed(double s) const;
  /// int_0^t mu_s ds (the Hardy transform of this function).
  double integral_to(double t) const;
  double total_integral() const { return steps_.empty() ? 0.0 : cumint_.back(); }

 private:
  std::vector<Step> steps_;
  std::vector<double> cum_;     // cumulative lengths
  std::vector<double> cumint_;  // cumulative integrals
};

DecreasingStepFunction scale(const DecreasingStepFunction& m, double factor);

/// sup_t |a(t) - b(t)| probed at midpoints of the union of breakpoints.
double step_distance(const DecreasingStepFunction& a, const DecreasingStepFunction& b);

/// Piecewise power-law decay f(t) = coeff * t^{-exponent} on (t_begin, t_end];
/// the model for infinite-measure commutative elements.  Pieces are
/// contiguous from 0; the last piece may extend to +infinity.
class ParametricDecay {
 public:
  struct Piece {
    double t_begin;
    double t_end;  // +inf allowed on the last piece
    double coeff;
    double exponent;  // beta >= 0
  };

  explicit ParametricDecay(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  /// Right end of the support (inf for an unbounded tail).
  double cutoff() const;
  bool has_infinite_tail() const;
  double value_at(double t) const;
  /// True iff the first piece has exponent < 1.
  bool integrable_at_zero() const;
  /// int_0^t f; throws divergence_error when not integrable at 0.
  double integral_to(double t) const;

 private:
  std::vector<Piece> pieces_;
};

}  // namespace ncorlicz

#endif  // NCORLICZ_STEP_FUNCTION_HPP
