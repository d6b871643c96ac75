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

#include "ncorlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ncorlicz/errors.hpp"

namespace ncorlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSamplesPerSegment = 256;

struct SupPoint {
  double value = 0.0;
  double at = 0.0;
};

// Samples g on [a, b] and refines around the best sample by golden section.
// g need not be unimodal globally; it is smooth on each segment passed here.
SupPoint segment_sup(const std::function<double(double)>& g, double a, double b, int samples) {
  SupPoint best;
  std::vector<double> xs(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) xs[static_cast<std::size_t>(i)] = a + (b - a) * i / samples;
  if (xs.front() == 0.0) xs.front() = xs[1] * 1e-6;
  int best_i = 0;
  for (int i = 0; i <= samples; ++i) {
    const double v = g(xs[static_cast<std::size_t>(i)]);
    if (v > best.value) {
      best = {v, xs[static_cast<std::size_t>(i)]};
      best_i = i;
    }
  }
  double lo = xs[static_cast<std::size_t>(std::max(0, best_i - 1))];
  double hi = xs[static_cast<std::size_t>(std::min(samples, best_i + 1))];
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + gr * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - gr * (hi - lo);
      g1 = g(x1);
    }
    if (g1 > best.value) best = {g1, x1};
    if (g2 > best.value) best = {g2, x2};
  }
  return best;
}

// Log-spaced variant for decay pieces whose natural scale is multiplicative.
SupPoint segment_sup_log(const std::function<double(double)>& g, double a, double b, int samples) {
  const auto h = [&](double u) { return g(std::exp(u)); };
  const SupPoint s = segment_sup(h, std::log(a), std::log(b), samples);
  return {s.value, std::exp(s.at)};
}

SupPoint sup_over_steps(const DecreasingStepFunction& m, const std::function<double(double)>& g) {
  SupPoint best;
  double left = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double right = m.breakpoint(k);
    const SupPoint s = segment_sup(g, left, right, kSamplesPerSegment);
    if (s.value > best.value) best = s;
    left = right;
  }
  return best;
}

// Per-piece sup for a decay, with growth detection at the open ends.  The
// probe extends the sampling window toward the boundary; a sup that keeps
// growing there is reported as unbounded.
SupPoint sup_over_decay(const ParametricDecay& m, const std::function<double(double)>& g) {
  SupPoint best;
  for (const auto& piece : m.pieces()) {
    const bool tail_inf = std::isinf(piece.t_end);
    const double a0 = piece.t_begin == 0.0 ? piece.t_end * 1e-9 : piece.t_begin;
    const double b0 = tail_inf ? std::max(piece.t_begin, 1.0) * 1e9 : piece.t_end;
    SupPoint s = segment_sup_log(g, a0, b0, kSamplesPerSegment);
    if (piece.t_begin == 0.0) {
      // probe toward zero
      double probe = a0;
      for (int round = 0; round < 3 && g(probe * 1e-6) > s.value * (1.0 + 1e-9); ++round) {
        probe *= 1e-6;
        const SupPoint deeper = segment_sup_log(g, probe, a0, kSamplesPerSegment);
        if (deeper.value > s.value) s = deeper;
        if (round == 2) throw divergence_error("sup is unbounded as t -> 0");
      }
    }
    if (tail_inf) {
      double probe = b0;
      for (int round = 0; round < 3 && g(probe * 1e6) > s.value * (1.0 + 1e-9); ++round) {
        probe *= 1e6;
        const SupPoint deeper = segment_sup_log(g, b0, probe, kSamplesPerSegment);
        if (deeper.value > s.value) s = deeper;
        if (round == 2) throw divergence_error("sup is unbounded as t -> inf");
      }
    }
    if (s.value > best.value) best = s;
  }
  return best;
}

}  // namespace

std::string to_string(NormMethod m) {
  switch (m) {
    case NormMethod::ClosedForm: return "closed-form";
    case NormMethod::Bisection: return "bisection";
    case NormMethod::SegmentSearch: return "segment-search";
  }
  return "?";
}

NormReport luxemburg_norm(const DecreasingStepFunction& m, const NFunction& f) {
  if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
  const auto modular = [&](double lam) {
    double s = 0.0;
    for (const auto& st : m.steps()) s += st.length * f.value(st.value / lam);
    return s;
  };
  double lo = m.max_value(), hi = lo;
  while (modular(hi) > 1.0) hi *= 2.0;
  while (modular(lo) < 1.0) {
    lo *= 0.5;
    if (lo < 1e-300) break;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (modular(mid) > 1.0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), std::nullopt, NormMethod::Bisection};
}

NormReport luxemburg_norm(const TracedMatrix& x, const NFunction& f) {
  return luxemburg_norm(singular_value_function(x), f);
}

NormReport weak_orlicz_quasinorm(const DecreasingStepFunction& m, const NFunction& f) {
  if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
  // 1/Phi^{-1}(1/t) increases in t, so each step's sup sits at its right
  // endpoint; the norm is an exact finite maximization.
  NormReport r;
  r.method = NormMethod::ClosedForm;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double t = m.breakpoint(k);
    const double cand = m.steps()[k].value / f.inverse(1.0 / t);
    if (cand > r.value) {
      r.value = cand;
      r.attained_at = t;
    }
  }
  return r;
}

NormReport weak_orlicz_quasinorm(const ParametricDecay& m, const NFunction& f) {
  // Closed-form exponent screen for the power family: mu_t <= C t^{-1/p}
  // fails when a piece decays slower than Phi^{-1}(1/t) toward an open end.
  if (f.family() == NFunction::Family::Power) {
    const double p = f.parameter();
    if (m.pieces().front().exponent > 1.0 / p)
      throw divergence_error("weak quasi-norm unbounded as t -> 0");
    if (m.has_infinite_tail() && m.pieces().back().exponent < 1.0 / p)
      throw divergence_error("weak quasi-norm unbounded as t -> inf");
  }
  const auto g = [&](double t) { return m.value_at(t) / f.inverse(1.0 / t); };
  const SupPoint s = sup_over_decay(m, g);
  return {s.value, s.at, NormMethod::SegmentSearch};
}

NormReport weak_orlicz_quasinorm(const TracedMatrix& x, const NFunction& f) {
  return weak_orlicz_quasinorm(singular_value_function(x), f);
}

NormReport equivalent_banach_norm(const DecreasingStepFunction& m, const NFunction& f) {
  if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
  const NFunction psi = f.complement();
  const auto g = [&](double t) { return psi.inverse(1.0 / t) * m.integral_to(t); };
  // Past the support, mu~ is constant and Psi^{-1}(1/t) decreases, so the
  // final breakpoint bounds the sup there; it is a sample of the last segment.
  const SupPoint s = sup_over_steps(m, g);
  return {s.value, s.at, NormMethod::SegmentSearch};
}

NormReport equivalent_banach_norm(const ParametricDecay& m, const NFunction& f) {
  if (!m.integrable_at_zero())
    throw divergence_error("hardy transform diverges at zero (exponent >= 1)");
  const NFunction psi = f.complement();
  const auto g = [&](double t) { return psi.inverse(1.0 / t) * m.integral_to(t); };
  SupPoint s = sup_over_decay(m, g);
  if (!m.has_infinite_tail()) {
    // constant mu~ past the cutoff; the sup there is at the cutoff itself
    const double t = m.cutoff();
    const double v = g(t);
    if (v > s.value) s = {v, t};
  }
  return {s.value, s.at, NormMethod::SegmentSearch};
}

namespace {

template <typename M>
NormReport marcinkiewicz_impl(const M& m, const NFunction& f) {
  const NFunction psi = f.complement();
  const auto fund = [&](double t) { return 1.0 / psi.inverse(1.0 / t); };
  NormReport r;
  if constexpr (std::is_same_v<M, DecreasingStepFunction>) {
    if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
    const auto g = [&](double t) { return m.integral_to(t) / fund(t); };
    const SupPoint s = sup_over_steps(m, g);
    r = {s.value, s.at, NormMethod::SegmentSearch};
  } else {
    if (!m.integrable_at_zero())
      throw divergence_error("hardy transform diverges at zero (exponent >= 1)");
    const auto g = [&](double t) { return m.integral_to(t) / fund(t); };
    SupPoint s = sup_over_decay(m, g);
    if (!m.has_infinite_tail()) {
      const double t = m.cutoff();
      const double v = g(t);
      if (v > s.value) s = {v, t};
    }
    r = {s.value, s.at, NormMethod::SegmentSearch};
  }
  const NormReport eq = equivalent_banach_norm(m, f);
  if (std::abs(eq.value - r.value) > 1e-9 * std::max(1.0, r.value))
    throw numerical_error("marcinkiewicz norm disagrees with the equivalent Banach norm");
  return r;
}

}  // namespace

NormReport marcinkiewicz_norm(const DecreasingStepFunction& m, const NFunction& f) {
  return marcinkiewicz_impl(m, f);
}

NormReport marcinkiewicz_norm(const ParametricDecay& m, const NFunction& f) {
  return marcinkiewicz_impl(m, f);
}

NormReport weak_lp_norm(const DecreasingStepFunction& m, double p) {
  if (!(p > 1.0)) throw std::domain_error("weak L_p requires p > 1");
  if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
  NormReport r;
  r.method = NormMethod::ClosedForm;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double cand = std::pow(m.breakpoint(k), 1.0 / p) * m.steps()[k].value;
    if (cand > r.value) {
      r.value = cand;
      r.attained_at = m.breakpoint(k);
    }
  }
  // distribution form: sup_s s lambda_s^{1/p}, approached from below each value
  double lam_form = 0.0;
  for (const auto& st : m.steps())
    lam_form = std::max(lam_form, st.value * std::pow(m.distribution_closed(st.value), 1.0 / p));
  if (std::abs(lam_form - r.value) > 1e-9 * std::max(1.0, r.value))
    throw numerical_error("weak L_p mu-form and lambda-form disagree");
  return r;
}

NormReport lorentz_norm(const DecreasingStepFunction& m, const NFunction& f) {
  if (m.is_zero()) return {0.0, std::nullopt, NormMethod::ClosedForm};
  const NFunction psi = f.complement();
  const auto fund = [&](double t) { return 1.0 / psi.inverse(1.0 / t); };
  double acc = 0.0, prev = 0.0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double cur = fund(m.breakpoint(k));
    acc += m.steps()[k].value * (cur - prev);
    prev = cur;
  }
  return {acc, std::nullopt, NormMethod::ClosedForm};
}

double seminorm_N0(const DecreasingStepFunction&, const NFunction&) {
  // mu~_t <= v_1 t near zero while t/fund(t) -> 0, so the limsup vanishes.
  return 0.0;
}

double seminorm_Ninf(const DecreasingStepFunction&, const NFunction&) {
  // mu~ is bounded and fund(t) -> inf.
  return 0.0;
}

namespace {

// limit of a ratio with power-law asymptotics: sign of the exponent decides.
double exponent_limit(double coefficient, double exponent) {
  if (exponent > 1e-12) return 0.0;
  if (exponent < -1e-12) return kInf;
  return coefficient;
}

double numeric_limsup(const std::function<double(double)>& r, double anchor, bool toward_zero) {
  double prev = 0.0, cur = 0.0;
  double t = anchor;
  for (int k = 0; k < 40; ++k) {
    t = toward_zero ? t * 0.25 : t * 4.0;
    prev = cur;
    cur = r(t);
  }
  if (cur > 1e12) return kInf;
  if (cur <= 1e-12 * std::max(1.0, prev)) return 0.0;
  return cur;
}

}  // namespace

double seminorm_N0(const ParametricDecay& m, const NFunction& f) {
  if (!m.integrable_at_zero())
    throw divergence_error("hardy transform diverges at zero (exponent >= 1)");
  const auto& head = m.pieces().front();
  if (f.family() == NFunction::Family::Power) {
    const double p = f.parameter(), q = p / (p - 1.0);
    // mu~_t ~ c t^{1-beta}/(1-beta), fund(t) = (t/q)^{1/q}
    const double coeff = head.coeff * std::pow(q, 1.0 / q) / (1.0 - head.exponent);
    return exponent_limit(coeff, 1.0 - head.exponent - 1.0 / q);
  }
  const NFunction psi = f.complement();
  const auto r = [&](double t) { return m.integral_to(t) * psi.inverse(1.0 / t); };
  return numeric_limsup(r, head.t_end, /*toward_zero=*/true);
}

double seminorm_Ninf(const ParametricDecay& m, const NFunction& f) {
  if (!m.integrable_at_zero())
    throw divergence_error("hardy transform diverges at zero (exponent >= 1)");
  if (!m.has_infinite_tail()) return 0.0;  // mu~ bounded, fund unbounded
  const auto& tail = m.pieces().back();
  if (f.family() == NFunction::Family::Power) {
    const double p = f.parameter(), q = p / (p - 1.0);
    if (tail.exponent > 1.0) return 0.0;  // mu~ converges
    if (tail.exponent == 1.0) return 0.0;  // logarithmic growth loses to t^{1/q}
    const double coeff = tail.coeff * std::pow(q, 1.0 / q) / (1.0 - tail.exponent);
    return exponent_limit(coeff, 1.0 - tail.exponent - 1.0 / q);
  }
  const NFunction psi = f.complement();
  const auto r = [&](double t) { return m.integral_to(t) * psi.inverse(1.0 / t); };
  return numeric_limsup(r, std::max(1.0, tail.t_begin), /*toward_zero=*/false);
}

double pairing_integral(const DecreasingStepFunction& a, const DecreasingStepFunction& b) {
  double acc = 0.0;
  std::size_t i = 0, j = 0;
  double t = 0.0;
  while (i < a.size() && j < b.size()) {
    const double next = std::min(a.breakpoint(i), b.breakpoint(j));
    acc += a.steps()[i].value * b.steps()[j].value * (next - t);
    t = next;
    if (a.breakpoint(i) == next) ++i;
    if (b.breakpoint(j) == next) ++j;
  }
  return acc;
}

double cesaro_gauge(const DecreasingStepFunction& m, const NFunction& f) {
  if (m.is_zero()) return 0.0;
  // (mu~_t / t) is decreasing and t Phi^{-1}(1/t) is increasing, so past the
  // support the ratio decreases; segments inside the support are searched.
  const auto g = [&](double t) { return m.integral_to(t) / (t * f.inverse(1.0 / t)); };
  return sup_over_steps(m, g).value;
}

}  // namespace ncorlicz
