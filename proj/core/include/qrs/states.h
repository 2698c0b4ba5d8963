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

// Single-qubit states as Bloch vectors and the preparation-error budget
// certified by the Bell-pair sampling test.

#ifndef QRS_STATES_H_
#define QRS_STATES_H_

namespace qrs {

// rho = I/2 + (rx sx + ry sy + rz sz) / 2. Used both for the server-side
// sensor state and for the eavesdropper's model of it.
struct BlochVector {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;

  double NormSquared() const { return rx * rx + ry * ry + rz * rz; }

  // |r|^2 <= 1 + 1e-12.
  bool IsPhysical() const;

  // Throws DomainError if the vector is not physical.
  void Validate() const;

  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

// Preparation error eps with 0 <= eps <= 0.5. Values outside are rejected,
// not clamped.
class PreparationErrorBudget {
 public:
  explicit PreparationErrorBudget(double epsilon);

  double epsilon() const { return epsilon_; }

  // eps (1 - eps); appears in every bound.
  double ErrorProduct() const { return epsilon_ * (1.0 - epsilon_); }

 private:
  double epsilon_;
};

// <+|rho|+> = (1 + rx) / 2.
double FidelityWithPlus(const BlochVector& state);

// F(I/2, rho) = 1/2 + sqrt(1 - |r|^2) / 2.
double FidelityWithMaximallyMixed(const BlochVector& state);

// State with <+|rho|+> = 1 - eps that maximises the client's error:
// (1 - 2 eps, 2 sqrt(eps (1 - eps)), 0).
BlochVector WorstCaseClientState(const PreparationErrorBudget& budget);

// State with F(I/2, rho) = 1 - eps that minimises the eavesdropper's error:
// (2 sqrt(eps (1 - eps)), 0, 0).
BlochVector BestCaseEveState(const PreparationErrorBudget& budget);

}  // namespace qrs

#endif  // QRS_STATES_H_
