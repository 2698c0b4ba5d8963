// Copyright 2026 The QRS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrs/numerics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qrs/errors.h"

namespace qrs {
namespace {

double LambertW0Seed(double x) {
  if (x < -0.25) {
    // Series about the branch point: W ~ -1 + p - p^2/3, p = sqrt(2(1+ex)).
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 + std::numbers::e * x)));
    return -1.0 + p - p * p / 3.0;
  }
  if (x < 0.25) return x;
  if (x <= std::numbers::e) return std::log1p(x);
  const double lx = std::log(x);
  return lx - std::log(lx);
}

}  // namespace

void ToleranceSpec::Validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iters < 1) {
    throw DomainError("ToleranceSpec requires abs_tol > 0, rel_tol > 0, max_iters >= 1");
  }
}

double LambertW0(double x, const ToleranceSpec& tol) {
  tol.Validate();
  if (std::isnan(x) || x < kLambertBranchPoint) {
    throw DomainError("LambertW0: argument below -1/e: " + std::to_string(x));
  }
  if (x == kLambertBranchPoint) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  const double target = tol.abs_tol * std::max(1.0, std::abs(x));
  double w = LambertW0Seed(x);
  for (int iter = 0; iter < tol.max_iters; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    // Residual at round-off level: near the branch point further Halley steps
    // only chase noise amplified by the vanishing derivative.
    if (std::abs(f) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) return w;
    const double wp1 = w + 1.0;
    if (wp1 <= 0.0) {
      // Overshot the branch point; pull back towards -1 from above.
      w = -1.0 + 1e-8;
      continue;
    }
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      const double residual = w * std::exp(w) - x;
      if (std::abs(residual) <= target) return w;
    }
  }
  const double residual = w * std::exp(w) - x;
  if (std::abs(residual) <= target) return w;
  throw NonConvergenceError("LambertW0: no convergence for x = " + std::to_string(x));
}

double LambertW0Asymptotic(double x, AsymptoticRegime regime) {
  switch (regime) {
    case AsymptoticRegime::kSmall:
      if (std::isnan(x) || x < 0.0) {
        throw DomainError("LambertW0Asymptotic(small): x must be non-negative");
      }
      return x;
    case AsymptoticRegime::kLarge: {
      if (!(x > std::numbers::e)) {
        throw DomainError("LambertW0Asymptotic(large): requires x > e, got " +
                          std::to_string(x));
      }
      const double lx = std::log(x);
      return std::log(x / lx);
    }
  }
  throw DomainError("LambertW0Asymptotic: unknown regime");
}

double SolveBracketedRoot(const std::function<double(double)>& f, double lo,
                          double hi, const ToleranceSpec& tol) {
  tol.Validate();
  if (lo > hi) std::swap(lo, hi);
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::isnan(f_lo) || std::isnan(f_hi) || std::signbit(f_lo) == std::signbit(f_hi)) {
    throw BracketError("SolveBracketedRoot: root not bracketed", lo, hi, f_lo, f_hi);
  }

  bool try_secant = true;
  for (int iter = 0; iter < tol.max_iters; ++iter) {
    const double width = hi - lo;
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) {
      return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    }
    double x = mid;
    if (try_secant) {
      const double s = hi - f_hi * (hi - lo) / (f_hi - f_lo);
      if (s > lo && s < hi) x = s;
    }
    const double fx = f(x);
    if (std::abs(fx) <= tol.abs_tol) return x;
    if (std::signbit(fx) == std::signbit(f_lo)) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    // A secant step that fails to halve the bracket is followed by bisection.
    try_secant = (hi - lo) <= 0.5 * width;
    const double best = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    if (hi - lo <= tol.rel_tol * std::abs(best)) return best;
  }
  throw NonConvergenceError("SolveBracketedRoot: iteration budget exhausted");
}

double NumericDerivative(const std::function<double(double)>& f, double x,
                         double h) {
  if (!(h > 0.0)) throw DomainError("NumericDerivative: step must be positive");
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double NumericDerivative(const std::function<double(double)>& f, double x) {
  return NumericDerivative(f, x, std::max(1e-6, 1e-6 * std::abs(x)));
}

}  // namespace qrs
