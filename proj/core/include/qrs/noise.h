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

// Dephasing during the sensing interaction.
//
// Two noise kinds are modelled through the decoherence exponent g(t):
// white noise gives g = t / T2 and low-frequency noise g = (t / T2)^2.
// The averaged evolution is the phase-flip channel
//   rho -> (1 + e^-g)/2 rho + (1 - e^-g)/2 sz rho sz,
// which damps the transverse Bloch components by e^-g. At trajectory level
// the same channel is a random z rotation by a Gaussian phase of variance
// 2 g(t), since E[exp(i phi)] = exp(-g).

#ifndef QRS_NOISE_H_
#define QRS_NOISE_H_

#include "qrs/rng.h"
#include "qrs/states.h"

namespace qrs {

enum class NoiseKind { kWhite, kLowFrequency };

const char* NoiseKindName(NoiseKind kind);

class DephasingModel {
 public:
  // Throws DomainError unless t2 > 0.
  DephasingModel(NoiseKind kind, double t2);

  NoiseKind kind() const { return kind_; }
  double t2() const { return t2_; }

 private:
  NoiseKind kind_;
  double t2_;
};

// g(t); throws DomainError for t < 0.
double DecoherenceExponent(const DephasingModel& model, double t);

// Same, directly in units of T2 (tau = t / T2).
double DecoherenceExponentScaled(NoiseKind kind, double tau);

// (rx, ry, rz) -> (rx e^-g, ry e^-g, rz). Throws DomainError for g < 0.
BlochVector ApplyDephasingChannel(const BlochVector& state, double g);

// Conjugation by exp(-i angle sz / 2): a rotation of (rx, ry) by +angle.
BlochVector RotateAboutZ(const BlochVector& state, double angle);

// One draw of the accumulated random phase, Normal(0, 2 g(t)).
double SampleDephasingPhase(const DephasingModel& model, double t,
                            RngStream& rng);

}  // namespace qrs

#endif  // QRS_NOISE_H_
