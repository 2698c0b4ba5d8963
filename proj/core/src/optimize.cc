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

#include "qrs/optimize.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qrs/errors.h"

namespace qrs {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kMaxCrossingSearch = 1e15;
constexpr double kCrossingResolution = 1.01;

void CheckSlowCount(double m) {
  if (!(m >= 1.0)) throw DomainError("repetition count must be >= 1, got " + std::to_string(m));
}

void CheckFastTime(double tau, double n) {
  if (!(n > 0.0)) throw DomainError("N = T/T2 must be positive");
  if (!(tau > 0.0 && tau < n)) {
    throw DomainError("fast readout requires 0 < t/T2 < N (t/T2 = " + std::to_string(tau) +
                      ", N = " + std::to_string(n) + ")");
  }
}

// Lambert W argument behind the slow-readout optimum.
double SlowLambertArgument(double m, double p, NoiseKind kind) {
  return kind == NoiseKind::kWhite ? 8.0 * (m - 1.0) * p * std::exp(-2.0)
                                   : 4.0 * (m - 1.0) * p / kE;
}

void RequireLargeArgument(double x, const char* what) {
  if (!(x > kE)) {
    throw DomainError(std::string(what) + ": large-argument form needs W argument > e, got " +
                      std::to_string(x));
  }
}

// ln(x / ln x), the large-argument expansion of W(x).
double LogOverLog(double x) { return std::log(x / std::log(x)); }

double FastRatioLambertArgument(double n, double p, NoiseKind kind) {
  return kind == NoiseKind::kWhite ? std::sqrt(2.0 * n * p)
                                   : 4.0 / 3.0 * std::cbrt(n * p * n * p);
}

// Slow-readout tau_opt from its large-argument expansion.
double SlowLargeTime(double m, double p, NoiseKind kind) {
  const double x = SlowLambertArgument(m, p, kind);
  RequireLargeArgument(x, "OptimalTimeSlowAsymptotic");
  if (kind == NoiseKind::kWhite) {
    const double a = 8.0 * (m - 1.0) * p;
    return 0.5 * std::log(a / std::log(a * std::exp(-2.0)));
  }
  const double a = 4.0 * (m - 1.0) * p;
  return std::sqrt(0.5 * std::log(a / std::log(a / kE)));
}

double FastRatioLargeTime(double n, double p, NoiseKind kind) {
  const double x = FastRatioLambertArgument(n, p, kind);
  RequireLargeArgument(x, "OptimalTimeFastRatioAsymptotic");
  if (kind == NoiseKind::kWhite) return LogOverLog(x);
  return 0.5 * std::sqrt(3.0 * LogOverLog(x));
}

double FastOptimumUpperEdge(double n, double eps, NoiseKind kind) {
  const double log_term = std::log1p(8.0 * n * eps);
  return kind == NoiseKind::kWhite ? 1.0 + log_term : 1.0 + std::sqrt(log_term);
}

}  // namespace

const char* TargetName(OptimizationTarget target) {
  return target == OptimizationTarget::kMinimizeClientUncertainty ? "uncertainty" : "ratio";
}

// ---- Slow readout --------------------------------------------------------

double SlowUncertainty(double tau, double m, const PreparationErrorBudget& budget,
                       NoiseKind kind) {
  return ClientUncertaintyUpper(tau, m, budget, DecoherenceExponentScaled(kind, tau));
}

double SlowRatio(double tau, double m, const PreparationErrorBudget& budget,
                 NoiseKind kind) {
  if (!(tau > 0.0)) throw DomainError("interaction time must be positive");
  return UncertaintyRatio(m, budget, DecoherenceExponentScaled(kind, tau));
}

double OptimalTimeSlow(double m, const PreparationErrorBudget& budget, NoiseKind kind) {
  CheckSlowCount(m);
  const double w = LambertW0(SlowLambertArgument(m, budget.ErrorProduct(), kind));
  if (kind == NoiseKind::kWhite) return 1.0 + 0.5 * w;
  return std::sqrt(0.5 * (1.0 + w));
}

double OptimalTimeSlowAsymptotic(double m, const PreparationErrorBudget& budget,
                                 NoiseKind kind, AsymptoticRegime regime) {
  CheckSlowCount(m);
  if (regime == AsymptoticRegime::kSmall) {
    return kind == NoiseKind::kWhite ? 1.0 : 1.0 / std::numbers::sqrt2;
  }
  return SlowLargeTime(m, budget.ErrorProduct(), kind);
}

double OptimizedUncertaintySlow(double m, const PreparationErrorBudget& budget,
                                NoiseKind kind) {
  return SlowUncertainty(OptimalTimeSlow(m, budget, kind), m, budget, kind);
}

double OptimizedUncertaintySlowAsymptotic(double m, const PreparationErrorBudget& budget,
                                          NoiseKind kind, AsymptoticRegime regime) {
  CheckSlowCount(m);
  if (regime == AsymptoticRegime::kSmall) {
    return kind == NoiseKind::kWhite ? kE / std::sqrt(m) : std::sqrt(2.0 * kE / m);
  }
  const double p = budget.ErrorProduct();
  const double tau = SlowLargeTime(m, p, kind);
  // 4 sqrt(p) / ln(...) for white and 2 sqrt(2 p / ln(...)) for low frequency
  // noise; both equal 2 sqrt(p) / tau_large.
  return 2.0 * std::sqrt(p) / tau;
}

double OptimizedRatioSlow(double m, const PreparationErrorBudget& budget, NoiseKind kind) {
  return SlowRatio(OptimalTimeSlow(m, budget, kind), m, budget, kind);
}

double OptimizedRatioSlowAsymptotic(double m, const PreparationErrorBudget& budget,
                                    NoiseKind kind, AsymptoticRegime regime) {
  CheckSlowCount(m);
  const double p = budget.ErrorProduct();
  if (regime == AsymptoticRegime::kSmall) {
    return kind == NoiseKind::kWhite ? 2.0 * kE * std::sqrt(p) : 2.0 * std::sqrt(kE * p);
  }
  RequireLargeArgument(SlowLambertArgument(m, p, kind), "OptimizedRatioSlowAsymptotic");
  return 4.0 * p * std::sqrt(m);
}

OptimizationResult OptimizeSlow(double m, const PreparationErrorBudget& budget,
                                NoiseKind kind) {
  OptimizationResult result;
  result.t_opt_over_t2 = OptimalTimeSlow(m, budget, kind);
  result.objective_at_opt = SlowUncertainty(result.t_opt_over_t2, m, budget, kind);
  result.target = OptimizationTarget::kMinimizeClientUncertainty;
  result.regime = SlowReadout{static_cast<std::int64_t>(std::llround(m))};
  result.kind = kind;
  return result;
}

// ---- Fast readout --------------------------------------------------------

double FastUncertainty(double tau, double n, const PreparationErrorBudget& budget,
                       NoiseKind kind) {
  CheckFastTime(tau, n);
  return ClientUncertaintyUpper(tau, n / tau, budget, DecoherenceExponentScaled(kind, tau));
}

double FastRatio(double tau, double n, const PreparationErrorBudget& budget,
                 NoiseKind kind) {
  CheckFastTime(tau, n);
  return UncertaintyRatio(n / tau, budget, DecoherenceExponentScaled(kind, tau));
}

double FastUncertaintyStationarity(double tau, double n,
                                   const PreparationErrorBudget& budget, NoiseKind kind) {
  const double p = budget.ErrorProduct();
  const double systematic = 4.0 * p * (2.0 * n / tau - 1.0);
  if (kind == NoiseKind::kWhite) {
    return (2.0 * tau - 1.0) * std::exp(2.0 * tau) - systematic;
  }
  const double tau2 = tau * tau;
  return (4.0 * tau2 - 1.0) * std::exp(2.0 * tau2) - systematic;
}

double OptimalTimeFastUncertainty(double n, const PreparationErrorBudget& budget,
                                  NoiseKind kind, const ToleranceSpec& tol) {
  if (!(n > 0.0)) throw DomainError("N = T/T2 must be positive");
  if (budget.ErrorProduct() == 0.0) {
    if (!(n > 0.5)) throw DomainError("optimal time 1/2 is not below N");
    return 0.5;
  }
  constexpr double kLowerEdge = 0.4;
  const double upper = std::min(FastOptimumUpperEdge(n, budget.epsilon(), kind), n);
  if (!(upper > kLowerEdge)) {
    throw DomainError("N too small for a fast-readout optimum: N = " + std::to_string(n));
  }
  auto stationarity = [&](double tau) { return FastUncertaintyStationarity(tau, n, budget, kind); };
  if (stationarity(upper) < 0.0) {
    // Still decreasing at t = T: no interior optimum.
    throw DomainError("no interior fast-readout optimum below N = " + std::to_string(n));
  }
  return SolveBracketedRoot(stationarity, kLowerEdge, upper, tol);
}

double OptimalTimeFastRatio(double n, const PreparationErrorBudget& budget,
                            NoiseKind kind) {
  if (!(n > 0.0)) throw DomainError("N = T/T2 must be positive");
  const double p = budget.ErrorProduct();
  if (p == 0.0) throw DomainError("ratio optimum requires eps > 0");
  const double w = LambertW0(FastRatioLambertArgument(n, p, kind));
  const double tau = kind == NoiseKind::kWhite ? w : 0.5 * std::sqrt(3.0 * w);
  if (!(tau < n)) throw DomainError("ratio-optimal time is not below N");
  return tau;
}

double OptimalTimeFastRatioAsymptotic(double n, const PreparationErrorBudget& budget,
                                      NoiseKind kind, AsymptoticRegime regime) {
  if (!(n > 0.0)) throw DomainError("N = T/T2 must be positive");
  const double p = budget.ErrorProduct();
  if (p == 0.0) throw DomainError("ratio optimum requires eps > 0");
  if (regime == AsymptoticRegime::kSmall) {
    return kind == NoiseKind::kWhite ? std::sqrt(2.0 * n * p) : std::cbrt(n * p);
  }
  return FastRatioLargeTime(n, p, kind);
}

double UncertaintyAtRatioOptimumAsymptotic(double n, const PreparationErrorBudget& budget,
                                           NoiseKind kind, AsymptoticRegime regime) {
  if (!(n > 0.0)) throw DomainError("N = T/T2 must be positive");
  const double p = budget.ErrorProduct();
  if (p == 0.0) throw DomainError("ratio optimum requires eps > 0");
  if (regime == AsymptoticRegime::kSmall) {
    const double shrink = kind == NoiseKind::kWhite ? std::pow(2.0 * n * p, -0.25)
                                                    : std::pow(n * p, -1.0 / 6.0);
    return shrink / std::sqrt(n);
  }
  // 2 sqrt(p) / ln(s / ln s) for white, 4 sqrt(p / (3 ln(X / ln X))) for low
  // frequency noise; both are 2 sqrt(p) / tau_R.
  return 2.0 * std::sqrt(p) / FastRatioLargeTime(n, p, kind);
}

double RatioAtRatioOptimumAsymptotic(double n, const PreparationErrorBudget& budget,
                                     NoiseKind kind, AsymptoticRegime regime) {
  if (!(n > 0.0)) throw DomainError("N = T/T2 must be positive");
  const double p = budget.ErrorProduct();
  if (p == 0.0) throw DomainError("ratio optimum requires eps > 0");
  if (regime == AsymptoticRegime::kSmall) return 2.0 * std::sqrt(p);
  // 4 p sqrt(N / tau_R): the systematic term dominates once N eps >> 1.
  return 4.0 * p * std::sqrt(n / FastRatioLargeTime(n, p, kind));
}

OptimizationResult OptimizeFast(double n, const PreparationErrorBudget& budget,
                                NoiseKind kind, OptimizationTarget target) {
  OptimizationResult result;
  result.target = target;
  result.regime = FastReadout{n};
  result.kind = kind;
  if (target == OptimizationTarget::kMinimizeClientUncertainty) {
    result.t_opt_over_t2 = OptimalTimeFastUncertainty(n, budget, kind);
    result.objective_at_opt = FastUncertainty(result.t_opt_over_t2, n, budget, kind);
  } else {
    result.t_opt_over_t2 = OptimalTimeFastRatio(n, budget, kind);
    result.objective_at_opt = FastRatio(result.t_opt_over_t2, n, budget, kind);
  }
  return result;
}

// ---- Privacy threshold ---------------------------------------------------

double CrossingRepetition(const PreparationErrorBudget& budget, NoiseKind kind,
                          RegimeFamily family, OptimizationTarget target) {
  if (family == RegimeFamily::kSlow && target == OptimizationTarget::kMinimizeRatio) {
    throw DomainError("slow readout has no ratio-optimal interaction time");
  }
  auto optimized_ratio = [&](double count) {
    if (family == RegimeFamily::kSlow) return OptimizedRatioSlow(count, budget, kind);
    const double tau = target == OptimizationTarget::kMinimizeClientUncertainty
                           ? OptimalTimeFastUncertainty(count, budget, kind)
                           : OptimalTimeFastRatio(count, budget, kind);
    return FastRatio(tau, count, budget, kind);
  };

  double lo = 1.0;
  if (optimized_ratio(lo) >= 1.0) return lo;
  double hi = kMaxCrossingSearch;
  if (optimized_ratio(hi) < 1.0) return std::numeric_limits<double>::infinity();
  while (hi / lo > kCrossingResolution) {
    const double mid = std::sqrt(lo * hi);
    if (optimized_ratio(mid) >= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace qrs
