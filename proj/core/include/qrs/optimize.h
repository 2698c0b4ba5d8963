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

// Optimal interaction times for the client's worst-case uncertainty and for
// the client/eavesdropper uncertainty ratio.
//
// Everything here is normalised by T2: times are tau = t / T2, uncertainties
// are T2 * delta omega, and the fast-readout budget is N = T / T2.
//
// Slow readout (M fixed) has closed-form optima through Lambert W:
//   white: tau = 1 + W(8 (M-1) p e^-2) / 2
//   low:   tau = sqrt((1 + W(4 (M-1) p e^-1)) / 2)
// with p = eps (1 - eps). The ratio has no interior optimum there: it grows
// monotonically with t.
//
// Fast readout (M = N / tau) minimises the uncertainty by root finding on
//   white: (2 tau - 1) e^(2 tau)     - 4 p (2 N / tau - 1) = 0
//   low:   (4 tau^2 - 1) e^(2 tau^2) - 4 p (2 N / tau - 1) = 0
// while the ratio optimum is closed form:
//   white: tau_R = W(sqrt(2 N p))
//   low:   tau_R = sqrt(3 W((4/3) (N p)^(2/3))) / 2.
//
// The *Asymptotic functions evaluate the leading small-argument
// (AsymptoticRegime::kSmall) and large-argument (kLarge) forms. Large forms
// throw DomainError when the Lambert W argument they expand is <= e.

#ifndef QRS_OPTIMIZE_H_
#define QRS_OPTIMIZE_H_

#include "qrs/metrology.h"
#include "qrs/noise.h"
#include "qrs/numerics.h"
#include "qrs/states.h"

namespace qrs {

enum class OptimizationTarget { kMinimizeClientUncertainty, kMinimizeRatio };
enum class RegimeFamily { kSlow, kFast };

const char* TargetName(OptimizationTarget target);

struct OptimizationResult {
  double t_opt_over_t2 = 0.0;
  // T2 * delta omega_C^(U) or the dimensionless ratio, depending on target.
  double objective_at_opt = 0.0;
  OptimizationTarget target = OptimizationTarget::kMinimizeClientUncertainty;
  ReadoutRegime regime = SlowReadout{1};  // total_time in units of T2
  NoiseKind kind = NoiseKind::kWhite;
};

// ---- Slow readout --------------------------------------------------------

// T2 * delta omega_C^(U) and the ratio at tau for fixed M.
double SlowUncertainty(double tau, double m, const PreparationErrorBudget& budget,
                       NoiseKind kind);
double SlowRatio(double tau, double m, const PreparationErrorBudget& budget,
                 NoiseKind kind);

double OptimalTimeSlow(double m, const PreparationErrorBudget& budget, NoiseKind kind);
double OptimalTimeSlowAsymptotic(double m, const PreparationErrorBudget& budget,
                                 NoiseKind kind, AsymptoticRegime regime);

double OptimizedUncertaintySlow(double m, const PreparationErrorBudget& budget,
                                NoiseKind kind);
double OptimizedUncertaintySlowAsymptotic(double m, const PreparationErrorBudget& budget,
                                          NoiseKind kind, AsymptoticRegime regime);

double OptimizedRatioSlow(double m, const PreparationErrorBudget& budget, NoiseKind kind);
double OptimizedRatioSlowAsymptotic(double m, const PreparationErrorBudget& budget,
                                    NoiseKind kind, AsymptoticRegime regime);

OptimizationResult OptimizeSlow(double m, const PreparationErrorBudget& budget,
                                NoiseKind kind);

// ---- Fast readout --------------------------------------------------------

// T2 * delta omega_C^(U) with M = N / tau. Requires 0 < tau < N.
double FastUncertainty(double tau, double n, const PreparationErrorBudget& budget,
                       NoiseKind kind);
// Ratio with M = N / tau. Requires 0 < tau < N.
double FastRatio(double tau, double n, const PreparationErrorBudget& budget,
                 NoiseKind kind);

// Left-hand side of the fast-readout stationarity equation for the
// uncertainty (see file comment).
double FastUncertaintyStationarity(double tau, double n,
                                   const PreparationErrorBudget& budget, NoiseKind kind);

// Root of the stationarity equation in [0.4, 1 + ln(1 + 8 N eps)] (white) or
// [0.4, 1 + sqrt(ln(1 + 8 N eps))] (low), capped at N. Exactly 1/2 at eps = 0.
// Throws DomainError when N is too small for an interior optimum.
double OptimalTimeFastUncertainty(double n, const PreparationErrorBudget& budget,
                                  NoiseKind kind, const ToleranceSpec& tol = {});

// Requires eps > 0.
double OptimalTimeFastRatio(double n, const PreparationErrorBudget& budget,
                            NoiseKind kind);
double OptimalTimeFastRatioAsymptotic(double n, const PreparationErrorBudget& budget,
                                      NoiseKind kind, AsymptoticRegime regime);

// Asymptotic T2 * delta omega_C^(U) and ratio, both evaluated at tau_R.
double UncertaintyAtRatioOptimumAsymptotic(double n, const PreparationErrorBudget& budget,
                                           NoiseKind kind, AsymptoticRegime regime);
double RatioAtRatioOptimumAsymptotic(double n, const PreparationErrorBudget& budget,
                                     NoiseKind kind, AsymptoticRegime regime);

OptimizationResult OptimizeFast(double n, const PreparationErrorBudget& budget,
                                NoiseKind kind, OptimizationTarget target);

// ---- Privacy threshold ---------------------------------------------------

// Smallest M (slow) or N (fast) at which the optimised ratio reaches 1,
// located by bisection in log M to 1% resolution. Returns 1 if the ratio is
// already >= 1 at M = 1 and +infinity if it stays below 1 up to 1e15.
// The slow family only supports the uncertainty target.
double CrossingRepetition(const PreparationErrorBudget& budget, NoiseKind kind,
                          RegimeFamily family, OptimizationTarget target);

}  // namespace qrs

#endif  // QRS_OPTIMIZE_H_
