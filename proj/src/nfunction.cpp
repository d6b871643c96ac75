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

#include "ncorlicz/nfunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ncorlicz/errors.hpp"

namespace ncorlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonneg(double t, const char* what) {
  if (!(t >= 0.0)) throw std::domain_error(std::string(what) + " must be nonnegative");
}

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  const int n = std::max(2, static_cast<int>(std::ceil(std::log10(hi / lo) * points_per_decade)) + 1);
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return g;
}

}  // namespace

struct NFunction::TabulatedData {
  std::vector<double> grid;  // strictly increasing, positive
  std::vector<double> phi;   // strictly positive, nondecreasing
  double tail_lo = 1.0;      // phi(t) = phi.front()*(t/grid.front())^tail_lo below the grid
  double tail_hi = 1.0;      // phi(t) = phi.back()*(t/grid.back())^tail_hi above the grid
  std::vector<double> cum;   // cum[i] = Phi(grid[i])

  double head_integral() const {
    return phi.front() * grid.front() / (tail_lo + 1.0);
  }

  double phi_at(double t) const {
    if (t <= 0.0) return 0.0;
    if (t <= grid.front()) return phi.front() * std::pow(t / grid.front(), tail_lo);
    if (t >= grid.back()) return phi.back() * std::pow(t / grid.back(), tail_hi);
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
    const double w = (t - grid[i]) / (grid[i + 1] - grid[i]);
    return phi[i] + w * (phi[i + 1] - phi[i]);
  }

  double value_at(double t) const {
    if (t <= 0.0) return 0.0;
    if (t <= grid.front())
      return head_integral() * std::pow(t / grid.front(), tail_lo + 1.0);
    if (t >= grid.back())
      return cum.back() +
             phi.back() * grid.back() / (tail_hi + 1.0) *
                 (std::pow(t / grid.back(), tail_hi + 1.0) - 1.0);
    const auto it = std::upper_bound(grid.begin(), grid.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - grid.begin()) - 1;
    const double dt = t - grid[i];
    return cum[i] + dt * (phi[i] + 0.5 * dt * (phi[i + 1] - phi[i]) / (grid[i + 1] - grid[i]));
  }

  // Left inverse of phi, left endpoint on flat segments.
  double psi_at(double s) const {
    if (s <= 0.0) return 0.0;
    if (s <= phi.front()) return grid.front() * std::pow(s / phi.front(), 1.0 / tail_lo);
    if (s >= phi.back()) return grid.back() * std::pow(s / phi.back(), 1.0 / tail_hi);
    const auto it = std::lower_bound(phi.begin(), phi.end(), s);
    std::size_t j = static_cast<std::size_t>(it - phi.begin());
    if (phi[j] == s) return grid[j];  // left endpoint of the preimage
    const std::size_t i = j - 1;      // phi[i] < s < phi[j]
    const double w = (s - phi[i]) / (phi[j] - phi[i]);
    return grid[i] + w * (grid[j] - grid[i]);
  }
};

NFunction NFunction::power(double p) {
  if (!(p > 1.0)) throw std::invalid_argument("power family requires p > 1");
  return NFunction(Family::Power, p);
}

NFunction NFunction::power_log(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("power-log family requires p >= 1");
  return NFunction(Family::PowerLog, p);
}

NFunction NFunction::exp_type() { return NFunction(Family::Exp, 0.0); }

NFunction NFunction::tabulated(std::vector<double> grid, std::vector<double> phi,
                               double tail_exponent_low, double tail_exponent_high) {
  if (grid.size() < 2 || grid.size() != phi.size())
    throw std::invalid_argument("tabulated family needs matching grid/phi of size >= 2");
  if (!(grid.front() > 0.0)) throw std::invalid_argument("tabulated grid must be positive");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("tabulated grid must be strictly increasing");
  if (!(phi.front() > 0.0)) throw std::invalid_argument("tabulated phi must be strictly positive");
  for (std::size_t i = 1; i < phi.size(); ++i)
    if (!(phi[i] >= phi[i - 1])) throw std::invalid_argument("tabulated phi must be nondecreasing");
  if (!(tail_exponent_low > 0.0) || !(tail_exponent_high > 0.0))
    throw std::invalid_argument("tabulated tail exponents must be positive");

  auto data = std::make_shared<TabulatedData>();
  data->grid = std::move(grid);
  data->phi = std::move(phi);
  data->tail_lo = tail_exponent_low;
  data->tail_hi = tail_exponent_high;
  data->cum.resize(data->grid.size());
  data->cum[0] = data->head_integral();
  for (std::size_t i = 1; i < data->grid.size(); ++i)
    data->cum[i] = data->cum[i - 1] +
                   0.5 * (data->phi[i] + data->phi[i - 1]) * (data->grid[i] - data->grid[i - 1]);

  NFunction f(Family::Tabulated, 0.0);
  f.tab_ = std::move(data);
  return f;
}

std::string NFunction::describe() const {
  switch (family_) {
    case Family::Power: return "power(p=" + std::to_string(p_) + ")";
    case Family::PowerLog: return "power-log(p=" + std::to_string(p_) + ")";
    case Family::Exp: return "exp";
    case Family::ExpConjugate: return "exp-conjugate";
    case Family::Tabulated: return "tabulated[" + std::to_string(tab_->grid.size()) + "]";
    case Family::Conjugate: return "conjugate(" + base_->describe() + ")";
  }
  return "?";
}

double NFunction::value(double t) const {
  require_nonneg(t, "t");
  if (t == 0.0) return 0.0;
  switch (family_) {
    case Family::Power: return std::pow(t, p_) / p_;
    case Family::PowerLog: return std::pow(t, p_) * std::log1p(t);
    case Family::Exp: return std::expm1(t) - t;
    case Family::ExpConjugate: return (1.0 + t) * std::log1p(t) - t;
    case Family::Tabulated: return tab_->value_at(t);
    case Family::Conjugate: {
      const double tstar = base_->derivative_left_inverse(t);
      return t * tstar - base_->value(tstar);
    }
  }
  return 0.0;
}

double NFunction::derivative(double t) const {
  require_nonneg(t, "t");
  if (t == 0.0) return 0.0;
  switch (family_) {
    case Family::Power: return std::pow(t, p_ - 1.0);
    case Family::PowerLog:
      return p_ * std::pow(t, p_ - 1.0) * std::log1p(t) + std::pow(t, p_) / (1.0 + t);
    case Family::Exp: return std::expm1(t);
    case Family::ExpConjugate: return std::log1p(t);
    case Family::Tabulated: return tab_->phi_at(t);
    case Family::Conjugate: return base_->derivative_left_inverse(t);
  }
  return 0.0;
}

namespace detail {

double invert_increasing(const NFunction& f, bool invert_value, double y) {
  require_nonneg(y, "y");
  if (y == 0.0) return 0.0;
  const auto eval = [&](double t) { return invert_value ? f.value(t) : f.derivative(t); };

  double lo = 1.0, hi = 1.0;
  while (eval(hi) < y) {
    hi *= 2.0;
    if (hi > 1e300) throw numerical_error("inverse bracket overflow");
  }
  while (eval(lo) > y) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;
  }
  if (lo == hi) return lo;

  double t = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double v = eval(t);
    if (std::isfinite(v) && std::abs(v - y) <= 1e-14 * y) return t;
    if (v > y)
      hi = t;
    else
      lo = t;
    if (hi - lo <= 4e-16 * hi) return 0.5 * (lo + hi);
    double next = 0.0;
    bool newton_ok = false;
    if (invert_value) {
      const double d = f.derivative(t);
      if (d > 0.0 && std::isfinite(d) && std::isfinite(v)) {
        next = t - (v - y) / d;
        newton_ok = next > lo && next < hi;
      }
    }
    t = newton_ok ? next : 0.5 * (lo + hi);
  }
  return t;
}

}  // namespace detail

double NFunction::inverse(double y) const {
  require_nonneg(y, "y");
  if (y == 0.0) return 0.0;
  if (family_ == Family::Power) return std::pow(p_ * y, 1.0 / p_);
  return detail::invert_increasing(*this, /*invert_value=*/true, y);
}

double NFunction::derivative_left_inverse(double s) const {
  require_nonneg(s, "s");
  if (s == 0.0) return 0.0;
  switch (family_) {
    case Family::Power: return std::pow(s, 1.0 / (p_ - 1.0));
    case Family::Exp: return std::log1p(s);
    case Family::ExpConjugate: return std::expm1(s);
    case Family::Tabulated: return tab_->psi_at(s);
    case Family::Conjugate: return base_->derivative(s);
    case Family::PowerLog: return detail::invert_increasing(*this, /*invert_value=*/false, s);
  }
  return 0.0;
}

NFunction NFunction::complement() const {
  switch (family_) {
    case Family::Power: return power(p_ / (p_ - 1.0));
    case Family::Exp: return NFunction(Family::ExpConjugate, 0.0);
    case Family::ExpConjugate: return NFunction(Family::Exp, 0.0);
    case Family::Conjugate: return *base_;  // biconjugation
    case Family::PowerLog: {
      NFunction conj(Family::Conjugate, 0.0);
      conj.base_ = std::make_shared<NFunction>(*this);
      return conj;
    }
    case Family::Tabulated: {
      // The inverse of a piecewise-linear increasing derivative is the
      // coordinate swap; flat segments collapse to their left endpoint.
      std::vector<double> g, ph;
      g.reserve(tab_->grid.size());
      ph.reserve(tab_->grid.size());
      for (std::size_t i = 0; i < tab_->grid.size(); ++i) {
        if (!g.empty() && !(tab_->phi[i] > g.back())) continue;
        g.push_back(tab_->phi[i]);
        ph.push_back(tab_->grid[i]);
      }
      if (g.size() < 2) throw std::invalid_argument("tabulated derivative is constant; complement degenerate");
      return tabulated(std::move(g), std::move(ph), 1.0 / tab_->tail_lo, 1.0 / tab_->tail_hi);
    }
  }
  throw std::logic_error("unreachable");
}

const std::vector<double>& NFunction::grid() const {
  static const std::vector<double> empty;
  return tab_ ? tab_->grid : empty;
}

const std::vector<double>& NFunction::phi_samples() const {
  static const std::vector<double> empty;
  return tab_ ? tab_->phi : empty;
}

double NFunction::tail_exponent_low() const { return tab_ ? tab_->tail_lo : 0.0; }
double NFunction::tail_exponent_high() const { return tab_ ? tab_->tail_hi : 0.0; }

double inverse_product_ratio(const NFunction& f, double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  return f.inverse(t) * f.complement().inverse(t) / t;
}

GrowthIndices growth_indices(const NFunction& f, const ScanConfig& cfg) {
  switch (f.family()) {
    case NFunction::Family::Power: return {f.parameter(), f.parameter(), false};
    case NFunction::Family::PowerLog: return {f.parameter(), f.parameter() + 1.0, false};
    case NFunction::Family::Exp: return {2.0, kInf, true};
    case NFunction::Family::ExpConjugate: return {1.0, 2.0, false};
    case NFunction::Family::Conjugate: {
      // Complementary pair identity: 1/a_Phi + 1/b_Psi = 1, 1/b_Phi + 1/a_Psi = 1.
      const GrowthIndices base = growth_indices(f.complement(), cfg);
      GrowthIndices out;
      out.lower = base.upper_unbounded ? 1.0 : base.upper / (base.upper - 1.0);
      if (base.lower <= 1.0) {
        out.upper = kInf;
        out.upper_unbounded = true;
      } else {
        out.upper = base.lower / (base.lower - 1.0);
      }
      return out;
    }
    case NFunction::Family::Tabulated: {
      GrowthIndices out{kInf, 0.0, false};
      for (double t : log_grid(cfg.t_min, cfg.t_max, cfg.points_per_decade)) {
        const double v = f.value(t);
        if (!(v > 0.0) || !std::isfinite(v)) continue;
        const double r = t * f.derivative(t) / v;
        if (!std::isfinite(r)) continue;
        out.lower = std::min(out.lower, r);
        out.upper = std::max(out.upper, r);
      }
      if (out.upper > cfg.unbounded_cap) {
        out.upper = kInf;
        out.upper_unbounded = true;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Delta2Result delta2_constant(const NFunction& f, const ScanConfig& cfg) {
  Delta2Result out;
  for (double t : log_grid(cfg.t_min, cfg.t_max, cfg.points_per_decade)) {
    const double denom = f.value(t);
    if (!(denom > 0.0) || !std::isfinite(denom)) continue;
    const double r = f.value(2.0 * t) / denom;
    if (!std::isfinite(r) || r > cfg.unbounded_cap) {
      out.constant = r;
      out.unbounded = true;
      return out;
    }
    out.constant = std::max(out.constant, r);
  }
  return out;
}

bool nabla2_check(const NFunction& f, const ScanConfig& cfg) {
  const auto ts = log_grid(cfg.t_min, cfg.t_max, cfg.points_per_decade);
  for (double c = std::pow(2.0, 0.125); c <= cfg.nabla2_c_max * 1.0000001; c *= std::pow(2.0, 0.125)) {
    bool ok = true;
    for (double t : ts) {
      const double lhs = 2.0 * c * f.value(t);
      const double rhs = f.value(c * t);
      if (!std::isfinite(lhs)) continue;  // both huge; undecidable at this t
      if (std::isinf(rhs)) continue;
      if (lhs > rhs * (1.0 + 1e-9)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

double fundamental_function(const NFunction& f, double t) {
  if (!(t > 0.0)) throw std::domain_error("t must be positive");
  return 1.0 / f.complement().inverse(1.0 / t);
}

namespace {

// Least-squares line through (x_i, y_i); returns slope and max |residual|.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double icept = my - slope * mx;
  double res = 0;
  for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(y[i] - (slope * x[i] + icept)));
  return {slope, res};
}

}  // namespace

DilationIndices dilation_indices(const NFunction& f, const ScanConfig&) {
  const NFunction psi = f.complement();
  const auto fund = [&](double t) { return 1.0 / psi.inverse(1.0 / t); };

  // Dilation function M(t) = sup_s fund(ts)/fund(s) over a fixed log grid.
  static const double kSLo = 1e-8, kSHi = 1e8;
  static const int kPerDecade = 20;
  const auto sgrid = log_grid(kSLo, kSHi, kPerDecade);
  const auto big_m = [&](double t) {
    double m = 0.0;
    for (double s : sgrid) m = std::max(m, fund(t * s) / fund(s));
    return m;
  };

  std::vector<double> lx, ly, ux, uy;
  for (int k = 8; k <= 20; ++k) {
    const double tl = std::ldexp(1.0, -k), tu = std::ldexp(1.0, k);
    lx.push_back(std::log(tl));
    ly.push_back(std::log(big_m(tl)));
    ux.push_back(std::log(tu));
    uy.push_back(std::log(big_m(tu)));
  }
  const auto [pl, rl] = fit_line(lx, ly);
  const auto [pu, ru] = fit_line(ux, uy);

  DilationIndices out;
  out.lower = pl;
  out.upper = pu;
  out.fit_residual = std::max(rl, ru);
  out.reliable = out.fit_residual <= 1e-3;
  return out;
}

}  // namespace ncorlicz
