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

#include "qrs/states.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrs/errors.h"

namespace qrs {

bool BlochVector::IsPhysical() const {
  const double n2 = NormSquared();
  return std::isfinite(n2) && n2 <= 1.0 + 1e-12;
}

void BlochVector::Validate() const {
  if (!IsPhysical()) {
    throw DomainError("BlochVector outside the unit ball: |r|^2 = " +
                      std::to_string(NormSquared()));
  }
}

PreparationErrorBudget::PreparationErrorBudget(double epsilon)
    : epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
    throw DomainError("preparation error must lie in [0, 0.5], got " +
                      std::to_string(epsilon));
  }
}

double FidelityWithPlus(const BlochVector& state) {
  return 0.5 * (1.0 + state.rx);
}

double FidelityWithMaximallyMixed(const BlochVector& state) {
  return 0.5 + 0.5 * std::sqrt(std::max(0.0, 1.0 - state.NormSquared()));
}

BlochVector WorstCaseClientState(const PreparationErrorBudget& budget) {
  const double eps = budget.epsilon();
  return {1.0 - 2.0 * eps, 2.0 * std::sqrt(budget.ErrorProduct()), 0.0};
}

BlochVector BestCaseEveState(const PreparationErrorBudget& budget) {
  return {2.0 * std::sqrt(budget.ErrorProduct()), 0.0, 0.0};
}

}  // namespace qrs
