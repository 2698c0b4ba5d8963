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

// Ramsey readout statistics and the closed-form uncertainties for the
// client, the eavesdropper and the standard-metrology baseline.
//
// All uncertainties are root-mean-squared errors of frequency estimates and
// are valid to leading order in omega * t. They do not depend on omega.
// Repetition counts are real-valued: in the fast-readout regime M = T / t
// need not be an integer.

#ifndef QRS_METROLOGY_H_
#define QRS_METROLOGY_H_

#include <cstdint>
#include <variant>

#include "qrs/noise.h"
#include "qrs/states.h"

namespace qrs {

// Preparation and readout dominate the cycle time: M is fixed.
struct SlowReadout {
  std::int64_t m = 1;
};

// Interaction dominates the cycle time: M = T / t.
struct FastReadout {
  double total_time = 1.0;
};

using ReadoutRegime = std::variant<SlowReadout, FastReadout>;

// Throws DomainError on m < 1 or total_time <= 0.
void ValidateRegime(const ReadoutRegime& regime);

// Number of protocol repetitions for interaction time t.
double RepetitionCount(const ReadoutRegime& regime, double t);

struct SensingConfig {
  double omega = 0.0;  // rad per unit time
  double t = 1.0;      // interaction time
  DephasingModel model{NoiseKind::kWhite, 1.0};
  PreparationErrorBudget budget{0.0};
  ReadoutRegime regime = SlowReadout{1};

  // Throws DomainError unless t > 0 and the regime is valid.
  void Validate() const;

  // |omega t| > 0.1: the linearised formulas are outside their regime.
  bool LinearizationFlagged() const;

  double DecoherenceExponent() const;
};

// P ~= x + y omega t.
struct ProbabilityCoefficients {
  double x = 0.5;
  double y = 0.5;
};

// Probability of the +1 outcome of a sigma_y readout after free precession
// for time t and dephasing exponent g, without linearisation:
// 1/2 + e^-g (ry cos(wt) + rx sin(wt)) / 2.
double ExactOutcomeProbability(const BlochVector& state, double omega, double t,
                               double g);

// x = 1/2 + ry e^-g / 2, y = rx e^-g / 2.
ProbabilityCoefficients LinearizedCoefficients(const BlochVector& state, double g);

// The client's estimator, which assumes the ideal |+> preparation:
// (S_M - 1/2) / (t e^-g / 2).
double ClientEstimate(double mean_outcome, double t, double g);

// delta omega_C = e^g / (t sqrt(M)) sqrt(1 + (M - 1) ry^2 e^-2g).
double ClientUncertainty(double t, double m, double ry, double g);

// Worst case over admissible states:
// e^g / (t sqrt(M)) sqrt(1 + 4 (M - 1) eps (1 - eps) e^-2g).
double ClientUncertaintyUpper(double t, double m, const PreparationErrorBudget& budget,
                              double g);

// delta omega_E = sqrt((1 - Ry^2) / (M Rx^2)) / t for a noise-free
// eavesdropper who knows the exact initial state. Throws
// DegenerateStateError when Rx == 0.
double EveUncertainty(double t, double m, const BlochVector& eve_state);

// 1 / (2 t sqrt(M eps (1 - eps))); +infinity at eps == 0.
double EveUncertaintyLower(double t, double m, const PreparationErrorBudget& budget);

// ClientUncertaintyUpper / EveUncertaintyLower
//   = 2 e^g sqrt(eps (1 - eps) (1 + 4 (M - 1) eps (1 - eps) e^-2g)).
// Depends on t only through g.
double UncertaintyRatio(double m, const PreparationErrorBudget& budget, double g);

// Ideal-preparation baseline e^g / (t sqrt(M)).
double StandardMetrologyUncertainty(double t, double m, double g);

}  // namespace qrs

#endif  // QRS_METROLOGY_H_
