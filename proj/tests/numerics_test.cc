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

#include "qrs/numerics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.h"
#include "qrs/errors.h"

namespace qrs {
namespace {

TEST(LambertW0Test, KnownValues) {
  EXPECT_EQ(LambertW0(0.0), 0.0);
  EXPECT_NEAR(LambertW0(std::numbers::e), 1.0, 1e-15);
  EXPECT_EQ(LambertW0(kLambertBranchPoint), -1.0);
  // Omega constant.
  EXPECT_NEAR(LambertW0(1.0), 0.56714329040978387, 1e-15);
}

TEST(LambertW0Test, MatchesBisectionOracle) {
  for (double x : {-0.367, -0.3, -0.1, 1e-9, 0.2, 0.9, 3.0, 10.0, 1e3, 1e6, 1e12, 1e100}) {
    const double w = LambertW0(x);
    EXPECT_NEAR(w, oracle::LambertW(x), 1e-12 * std::max(1.0, std::abs(w))) << "x=" << x;
  }
}

TEST(LambertW0Test, ResidualPropertyOnRandomArguments) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> log_offset(-14.0, 200.0);
  for (int i = 0; i < 5000; ++i) {
    const double x = kLambertBranchPoint + std::exp(log_offset(gen));
    const double w = LambertW0(x);
    EXPECT_GE(w, -1.0);
    EXPECT_LE(std::abs(w * std::exp(w) - x), 1e-12 * std::max(1.0, std::abs(x))) << "x=" << x;
  }
}

TEST(LambertW0Test, MonotoneIncreasing) {
  double prev = -1.0;
  for (double x = kLambertBranchPoint + 1e-9; x < 50.0; x += 0.0137) {
    const double w = LambertW0(x);
    EXPECT_GT(w, prev);
    prev = w;
  }
}

TEST(LambertW0Test, DomainErrors) {
  EXPECT_THROW(LambertW0(-0.5), DomainError);
  EXPECT_THROW(LambertW0(std::nan("")), DomainError);
  EXPECT_THROW(LambertW0(1.0, ToleranceSpec{0.0, 1e-12, 10}), DomainError);
}

TEST(LambertW0Test, TinyBudgetReportsNonConvergence) {
  EXPECT_THROW(LambertW0(1e6, ToleranceSpec{1e-300, 1e-12, 1}), NonConvergenceError);
}

TEST(LambertW0AsymptoticTest, SmallIsIdentity) {
  EXPECT_EQ(LambertW0Asymptotic(0.01, AsymptoticRegime::kSmall), 0.01);
  EXPECT_NEAR(LambertW0Asymptotic(1e-6, AsymptoticRegime::kSmall), LambertW0(1e-6), 1e-11);
  EXPECT_THROW(LambertW0Asymptotic(-1.0, AsymptoticRegime::kSmall), DomainError);
}

TEST(LambertW0AsymptoticTest, LargeForm) {
  const double x = 1e10;
  EXPECT_DOUBLE_EQ(LambertW0Asymptotic(x, AsymptoticRegime::kLarge), std::log(x / std::log(x)));
  // Relative error shrinks like ln ln x / ln x.
  EXPECT_NEAR(LambertW0Asymptotic(1e30, AsymptoticRegime::kLarge) / LambertW0(1e30), 1.0, 0.02);
  EXPECT_THROW(LambertW0Asymptotic(2.0, AsymptoticRegime::kLarge), DomainError);
  EXPECT_THROW(LambertW0Asymptotic(std::numbers::e, AsymptoticRegime::kLarge), DomainError);
}

TEST(SolveBracketedRootTest, FindsSimpleRoots) {
  EXPECT_NEAR(SolveBracketedRoot([](double x) { return x * x - 2.0; }, 0.0, 2.0),
              std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(SolveBracketedRoot([](double x) { return std::cos(x) - x; }, 0.0, 1.0),
              0.73908513321516064, 1e-12);
  // Reversed bracket is accepted.
  EXPECT_NEAR(SolveBracketedRoot([](double x) { return x - 0.25; }, 1.0, 0.0), 0.25, 1e-12);
}

TEST(SolveBracketedRootTest, HandlesFlatAndSteepFunctions) {
  // Very flat near the root; the secant alone would crawl.
  const double r = SolveBracketedRoot([](double x) { return std::pow(x - 0.3, 5); }, 0.0, 1.0,
                                     ToleranceSpec{1e-300, 1e-12, 200});
  EXPECT_NEAR(r, 0.3, 1e-11);
  const double s = SolveBracketedRoot([](double x) { return std::exp(50 * x) - 2.0; }, -1.0, 1.0);
  EXPECT_NEAR(s, std::log(2.0) / 50, 1e-12);
}

TEST(SolveBracketedRootTest, AgreesWithBisectionOracle) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double a = coef(gen), b = coef(gen);
    auto f = [=](double x) { return a * x * x * x + b * x - 1.0; };
    EXPECT_NEAR(SolveBracketedRoot(f, 0.0, 2.0), oracle::BisectRoot(f, 0.0, 2.0), 1e-11);
  }
}

TEST(SolveBracketedRootTest, ReportsBadBracket) {
  try {
    SolveBracketedRoot([](double x) { return x * x + 1.0; }, -1.0, 1.0);
    FAIL() << "expected BracketError";
  } catch (const BracketError& e) {
    EXPECT_EQ(e.lo(), -1.0);
    EXPECT_EQ(e.hi(), 1.0);
    EXPECT_EQ(e.f_lo(), 2.0);
    EXPECT_EQ(e.f_hi(), 2.0);
  }
}

TEST(SolveBracketedRootTest, EndpointRootsReturnedDirectly) {
  EXPECT_EQ(SolveBracketedRoot([](double x) { return x; }, 0.0, 1.0), 0.0);
  EXPECT_EQ(SolveBracketedRoot([](double x) { return x - 1.0; }, 0.0, 1.0), 1.0);
}

TEST(SolveBracketedRootTest, IterationBudget) {
  EXPECT_THROW(SolveBracketedRoot([](double x) { return x * x * x - 0.123456789; }, 0.0, 1.0,
                                  ToleranceSpec{1e-300, 1e-300, 2}),
               NonConvergenceError);
}

TEST(NumericDerivativeTest, CentralDifference) {
  EXPECT_NEAR(NumericDerivative([](double x) { return std::sin(x); }, 0.7), std::cos(0.7), 1e-9);
  EXPECT_NEAR(NumericDerivative([](double x) { return x * x * x; }, 2.0, 1e-3), 12.0, 1e-5);
  EXPECT_THROW(NumericDerivative([](double x) { return x; }, 1.0, 0.0), DomainError);
}

}  // namespace
}  // namespace qrs
