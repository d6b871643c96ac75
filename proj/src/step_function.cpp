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

#include "ncorlicz/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "ncorlicz/errors.hpp"

namespace ncorlicz {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DecreasingStepFunction::DecreasingStepFunction(std::vector<Step> steps) : steps_(std::move(steps)) {
  double prev = kInf;
  for (const Step& s : steps_) {
    if (!(s.value > 0.0) || !(s.value < prev))
      throw std::invalid_argument("step values must be positive and strictly decreasing");
    if (!(s.length > 0.0)) throw std::invalid_argument("step lengths must be positive");
    prev = s.value;
  }
  cum_.resize(steps_.size());
  cumint_.resize(steps_.size());
  double t = 0.0, acc = 0.0;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    t += steps_[k].length;
    acc += steps_[k].value * steps_[k].length;
    cum_[k] = t;
    cumint_[k] = acc;
  }
}

DecreasingStepFunction DecreasingStepFunction::from_values(std::vector<double> values,
                                                           double length_each, double merge_tol,
                                                           double drop_rel_tol) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<Step> steps;
  const double drop = values.empty() ? 0.0 : values.front() * drop_rel_tol;
  for (double v : values) {
    if (!(v > drop)) break;
    if (!steps.empty() && steps.back().value - v <= merge_tol)
      steps.back().length += length_each;
    else
      steps.push_back({v, length_each});
  }
  return DecreasingStepFunction(std::move(steps));
}

double DecreasingStepFunction::value_at(double t) const {
  if (t < 0.0) throw std::domain_error("t must be nonnegative");
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
  if (it == cum_.end()) return 0.0;
  return steps_[static_cast<std::size_t>(it - cum_.begin())].value;
}

double DecreasingStepFunction::distribution(double s) const {
  // values are sorted descending; measure of {value > s}
  double m = 0.0;
  for (const Step& st : steps_) {
    if (st.value > s)
      m += st.length;
    else
      break;
  }
  return m;
}

double DecreasingStepFunction::distribution_closed(double s) const {
  double m = 0.0;
  for (const Step& st : steps_) {
    if (st.value >= s)
      m += st.length;
    else
      break;
  }
  return m;
}

double DecreasingStepFunction::integral_to(double t) const {
  if (t < 0.0) throw std::domain_error("t must be nonnegative");
  if (steps_.empty() || t == 0.0) return 0.0;
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), t);
  if (it == cum_.end()) return cumint_.back();
  const std::size_t k = static_cast<std::size_t>(it - cum_.begin());
  const double left = k == 0 ? 0.0 : cum_[k - 1];
  const double base = k == 0 ? 0.0 : cumint_[k - 1];
  return base + steps_[k].value * (t - left);
}

DecreasingStepFunction scale(const DecreasingStepFunction& m, double factor) {
  if (!(factor > 0.0)) {
    if (factor == 0.0) return DecreasingStepFunction();
    throw std::domain_error("scale factor must be nonnegative");
  }
  std::vector<DecreasingStepFunction::Step> steps = m.steps();
  for (auto& s : steps) s.value *= factor;
  return DecreasingStepFunction(std::move(steps));
}

double step_distance(const DecreasingStepFunction& a, const DecreasingStepFunction& b) {
  std::set<double> cuts{0.0};
  for (std::size_t k = 0; k < a.size(); ++k) cuts.insert(a.breakpoint(k));
  for (std::size_t k = 0; k < b.size(); ++k) cuts.insert(b.breakpoint(k));
  double dist = 0.0;
  double prev = 0.0;
  bool first = true;
  for (double c : cuts) {
    if (first) {
      first = false;
      prev = c;
      continue;
    }
    const double mid = 0.5 * (prev + c);
    dist = std::max(dist, std::abs(a.value_at(mid) - b.value_at(mid)));
    prev = c;
  }
  // past both supports the difference is zero; also probe just past the last cut
  const double last = *cuts.rbegin();
  dist = std::max(dist, std::abs(a.value_at(last * 1.0000001 + 1.0) - b.value_at(last * 1.0000001 + 1.0)));
  return dist;
}

ParametricDecay::ParametricDecay(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("decay needs at least one piece");
  if (pieces_.front().t_begin != 0.0) throw std::invalid_argument("first piece must start at 0");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!(p.coeff > 0.0)) throw std::invalid_argument("piece coefficients must be positive");
    if (!(p.exponent >= 0.0)) throw std::invalid_argument("piece exponents must be nonnegative");
    if (!(p.t_end > p.t_begin)) throw std::invalid_argument("pieces must have positive width");
    if (i + 1 < pieces_.size()) {
      if (pieces_[i + 1].t_begin != p.t_end) throw std::invalid_argument("pieces must be contiguous");
      if (std::isinf(p.t_end)) throw std::invalid_argument("only the last piece may be unbounded");
      // nonincreasing across the boundary
      const Piece& q = pieces_[i + 1];
      const double left = p.coeff * std::pow(p.t_end, -p.exponent);
      const double right = q.coeff * std::pow(p.t_end, -q.exponent);
      if (right > left * (1.0 + 1e-12))
        throw std::invalid_argument("decay must be nonincreasing across piece boundaries");
    }
  }
}

double ParametricDecay::cutoff() const { return pieces_.back().t_end; }

bool ParametricDecay::has_infinite_tail() const { return std::isinf(pieces_.back().t_end); }

double ParametricDecay::value_at(double t) const {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  for (const Piece& p : pieces_)
    if (t <= p.t_end) return p.coeff * std::pow(t, -p.exponent);
  return 0.0;
}

bool ParametricDecay::integrable_at_zero() const { return pieces_.front().exponent < 1.0; }

namespace {
// int_a^b c * s^{-beta} ds, 0 <= a < b, beta != 1 handled in closed form.
double piece_integral(double c, double beta, double a, double b) {
  if (beta == 1.0) return c * (std::log(b) - std::log(a));
  const double e = 1.0 - beta;
  return c / e * (std::pow(b, e) - std::pow(a, e));
}
}  // namespace

double ParametricDecay::integral_to(double t) const {
  if (!(t >= 0.0)) throw std::domain_error("t must be nonnegative");
  if (!integrable_at_zero())
    throw divergence_error("decay is not integrable at zero (exponent >= 1)");
  if (t == 0.0) return 0.0;
  double acc = 0.0;
  for (const Piece& p : pieces_) {
    const double hi = std::min(t, p.t_end);
    acc += piece_integral(p.coeff, p.exponent, p.t_begin, hi);
    if (t <= p.t_end) break;
  }
  return acc;
}

}  // namespace ncorlicz
