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

#include "qrs/metrology.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qrs/errors.h"

namespace qrs {
namespace {

void CheckTimeAndCount(double t, double m) {
  if (!(t > 0.0)) throw DomainError("interaction time must be positive");
  if (!(m >= 1.0)) throw DomainError("repetition count must be >= 1, got " + std::to_string(m));
}

}  // namespace

void ValidateRegime(const ReadoutRegime& regime) {
  if (const auto* slow = std::get_if<SlowReadout>(&regime)) {
    if (slow->m < 1) throw DomainError("slow readout requires m >= 1");
  } else if (!(std::get<FastReadout>(regime).total_time > 0.0)) {
    throw DomainError("fast readout requires total_time > 0");
  }
}

double RepetitionCount(const ReadoutRegime& regime, double t) {
  ValidateRegime(regime);
  if (!(t > 0.0)) throw DomainError("interaction time must be positive");
  if (const auto* slow = std::get_if<SlowReadout>(&regime)) {
    return static_cast<double>(slow->m);
  }
  return std::get<FastReadout>(regime).total_time / t;
}

void SensingConfig::Validate() const {
  if (!(t > 0.0)) throw DomainError("interaction time must be positive");
  ValidateRegime(regime);
}

bool SensingConfig::LinearizationFlagged() const {
  return std::abs(omega * t) > 0.1;
}

double SensingConfig::DecoherenceExponent() const {
  return qrs::DecoherenceExponent(model, t);
}

double ExactOutcomeProbability(const BlochVector& state, double omega, double t,
                               double g) {
  const double phase = omega * t;
  const double p = 0.5 + 0.5 * std::exp(-g) *
                             (state.ry * std::cos(phase) + state.rx * std::sin(phase));
  return std::clamp(p, 0.0, 1.0);
}

ProbabilityCoefficients LinearizedCoefficients(const BlochVector& state, double g) {
  const double damp = std::exp(-g);
  return {0.5 + 0.5 * state.ry * damp, 0.5 * state.rx * damp};
}

double ClientEstimate(double mean_outcome, double t, double g) {
  if (!(t > 0.0)) throw DomainError("interaction time must be positive");
  return (mean_outcome - 0.5) * 2.0 * std::exp(g) / t;
}

double ClientUncertainty(double t, double m, double ry, double g) {
  CheckTimeAndCount(t, m);
  if (!(std::abs(ry) <= 1.0)) throw DomainError("|ry| must not exceed 1");
  return std::exp(g) / (t * std::sqrt(m)) *
         std::sqrt(1.0 + (m - 1.0) * ry * ry * std::exp(-2.0 * g));
}

double ClientUncertaintyUpper(double t, double m, const PreparationErrorBudget& budget,
                              double g) {
  CheckTimeAndCount(t, m);
  return std::exp(g) / (t * std::sqrt(m)) *
         std::sqrt(1.0 + 4.0 * (m - 1.0) * budget.ErrorProduct() * std::exp(-2.0 * g));
}

double EveUncertainty(double t, double m, const BlochVector& eve_state) {
  CheckTimeAndCount(t, m);
  eve_state.Validate();
  if (eve_state.rx == 0.0) {
    throw DegenerateStateError("eavesdropper estimator undefined for Rx = 0");
  }
  const double ry2 = eve_state.ry * eve_state.ry;
  return std::sqrt((1.0 - ry2) / (m * eve_state.rx * eve_state.rx)) / t;
}

double EveUncertaintyLower(double t, double m, const PreparationErrorBudget& budget) {
  CheckTimeAndCount(t, m);
  const double p = budget.ErrorProduct();
  if (p == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (2.0 * t * std::sqrt(m * p));
}

double UncertaintyRatio(double m, const PreparationErrorBudget& budget, double g) {
  if (!(m >= 1.0)) throw DomainError("repetition count must be >= 1");
  const double p = budget.ErrorProduct();
  return 2.0 * std::exp(g) * std::sqrt(p * (1.0 + 4.0 * (m - 1.0) * p * std::exp(-2.0 * g)));
}

double StandardMetrologyUncertainty(double t, double m, double g) {
  CheckTimeAndCount(t, m);
  return std::exp(g) / (t * std::sqrt(m));
}

}  // namespace qrs
