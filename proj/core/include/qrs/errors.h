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

#ifndef QRS_ERRORS_H_
#define QRS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace qrs {

// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative method exhausted its iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// f(lo) and f(hi) have the same sign.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what, double lo, double hi, double f_lo,
               double f_hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double f_lo() const { return f_lo_; }
  double f_hi() const { return f_hi_; }

 private:
  double lo_;
  double hi_;
  double f_lo_;
  double f_hi_;
};

// The estimator requested does not exist for the given state (e.g. R_x = 0
// for the eavesdropper, who then learns nothing about the frequency).
class DegenerateStateError : public std::runtime_error {
 public:
  explicit DegenerateStateError(const std::string& what)
      : std::runtime_error(what) {}
};

// Input collection has the wrong size.
class SizeMismatchError : public std::invalid_argument {
 public:
  explicit SizeMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qrs

#endif  // QRS_ERRORS_H_
