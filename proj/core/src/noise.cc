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

#include "qrs/noise.h"

#include <cmath>
#include <string>

#include "qrs/errors.h"

namespace qrs {

const char* NoiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kWhite:
      return "white";
    case NoiseKind::kLowFrequency:
      return "lowfreq";
  }
  return "unknown";
}

DephasingModel::DephasingModel(NoiseKind kind, double t2) : kind_(kind), t2_(t2) {
  if (!(t2 > 0.0) || !std::isfinite(t2)) {
    throw DomainError("T2 must be positive and finite, got " + std::to_string(t2));
  }
}

double DecoherenceExponentScaled(NoiseKind kind, double tau) {
  if (!(tau >= 0.0)) {
    throw DomainError("decoherence exponent needs t >= 0, got t/T2 = " +
                      std::to_string(tau));
  }
  return kind == NoiseKind::kWhite ? tau : tau * tau;
}

double DecoherenceExponent(const DephasingModel& model, double t) {
  return DecoherenceExponentScaled(model.kind(), t / model.t2());
}

BlochVector ApplyDephasingChannel(const BlochVector& state, double g) {
  if (!(g >= 0.0)) {
    throw DomainError("dephasing exponent must be non-negative");
  }
  const double damp = std::exp(-g);
  return {state.rx * damp, state.ry * damp, state.rz};
}

BlochVector RotateAboutZ(const BlochVector& state, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * state.rx - s * state.ry, s * state.rx + c * state.ry, state.rz};
}

double SampleDephasingPhase(const DephasingModel& model, double t,
                            RngStream& rng) {
  const double g = DecoherenceExponent(model, t);
  return rng.Normal(std::sqrt(2.0 * g));
}

}  // namespace qrs
