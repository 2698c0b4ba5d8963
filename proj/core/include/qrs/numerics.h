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

// Scalar special functions and one-dimensional solvers.

#ifndef QRS_NUMERICS_H_
#define QRS_NUMERICS_H_

#include <functional>

namespace qrs {

// Stopping rule shared by the iterative routines in this header.
struct ToleranceSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iters = 100;

  // Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_iters >= 1.
  void Validate() const;
};

// -1/e, the branch point of the principal Lambert W branch.
inline constexpr double kLambertBranchPoint = -0.36787944117144233;

// Principal branch W0 of the Lambert W function, i.e. the w >= -1 solving
// w * exp(w) = x. Halley iteration; on return
// |w e^w - x| <= tol.abs_tol * max(1, |x|).
//
// Throws DomainError for x < -1/e and NonConvergenceError if the residual
// target is not reached within tol.max_iters iterations.
double LambertW0(double x, const ToleranceSpec& tol = {});

enum class AsymptoticRegime { kSmall, kLarge };

// Leading asymptotic forms of W0: x for x << 1 and ln(x / ln x) for x >> 1.
// The large form requires x > e (throws DomainError otherwise); the small
// form is returned as-is for any x >= 0.
double LambertW0Asymptotic(double x, AsymptoticRegime regime);

// Finds a root of f in [lo, hi] by bisection with safeguarded secant steps.
// Returns r with |f(r)| <= tol.abs_tol or a final bracket no wider than
// tol.rel_tol * |r|.
//
// Throws BracketError if f(lo) and f(hi) have the same strict sign and
// NonConvergenceError when the iteration budget runs out.
double SolveBracketedRoot(const std::function<double(double)>& f, double lo,
                          double hi, const ToleranceSpec& tol = {});

// Central difference (f(x + h) - f(x - h)) / (2h). h must be positive.
double NumericDerivative(const std::function<double(double)>& f, double x,
                         double h);

// Same with h = max(1e-6, 1e-6 * |x|).
double NumericDerivative(const std::function<double(double)>& f, double x);

}  // namespace qrs

#endif  // QRS_NUMERICS_H_
