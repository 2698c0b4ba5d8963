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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracles.h"
#include "qrs/errors.h"
#include "qrs/states.h"

namespace qrs {
namespace {

class MetrologyPropertyTest : public ::testing::Test {
 protected:
  std::mt19937_64 gen_{2024};
  double Uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  double LogUniform(double lo, double hi) { return std::exp(Uniform(std::log(lo), std::log(hi))); }
};

TEST_F(MetrologyPropertyTest, OutcomeProbabilityMatchesDensityMatrixOracle) {
  for (int i = 0; i < 300; ++i) {
    const double rx = Uniform(-0.57, 0.57), ry = Uniform(-0.57, 0.57), rz = Uniform(-0.57, 0.57);
    const double omega = Uniform(-3, 3), t = Uniform(0.01, 2), g = Uniform(0, 3);
    EXPECT_NEAR(ExactOutcomeProbability({rx, ry, rz}, omega, t, g),
                oracle::OutcomeProbability(rx, ry, rz, omega, t, g), 1e-13);
  }
}

TEST(MetrologyTest, OutcomeProbabilityAgreesWithPhaseAveraging) {
  // Dephasing through a Gaussian random phase rather than a Kraus map.
  const BlochVector s = WorstCaseClientState(PreparationErrorBudget(0.01));
  for (double g : {0.1, 1.0, 2.0}) {
    const oracle::Mat2 u = oracle::RotationZ(0.3);
    const oracle::Mat2 rho =
        u * oracle::PhaseAveragedState(oracle::DensityFromBloch(s.rx, s.ry, s.rz), g) * u.adjoint();
    EXPECT_NEAR(ExactOutcomeProbability(s, 0.3, 1.0, g), 0.5 * (1 + oracle::ExpectY(rho)), 1e-9);
  }
}

TEST(MetrologyTest, NullSignalFromPlusIsOneHalf) {
  EXPECT_DOUBLE_EQ(ExactOutcomeProbability({1, 0, 0}, 0.0, 1.0, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(ExactOutcomeProbability({1, 0, 0}, 0.0, 1.0, 2.0), 0.5);
}

TEST_F(MetrologyPropertyTest, LinearizationErrorIsSecondOrder) {
  for (int i = 0; i < 100; ++i) {
    const BlochVector s{Uniform(-0.7, 0.7), Uniform(-0.7, 0.7), 0};
    const double g = Uniform(0, 2), t = Uniform(0.1, 2);
    const ProbabilityCoefficients c = LinearizedCoefficients(s, g);
    for (double wt : {1e-3, 1e-2, 5e-2}) {
      const double exact = ExactOutcomeProbability(s, wt / t, t, g);
      EXPECT_LE(std::abs(exact - (c.x + c.y * wt)), 0.5 * wt * wt * std::exp(-g) + 1e-15);
    }
  }
}

TEST(MetrologyTest, ClientEstimateInvertsIdealLinearModel) {
  const double t = 0.7, g = 0.49, omega = 0.01;
  const ProbabilityCoefficients c = LinearizedCoefficients({1, 0, 0}, g);
  EXPECT_NEAR(ClientEstimate(c.x + c.y * omega * t, t, g), omega, 1e-15);
  EXPECT_EQ(ClientEstimate(0.5, t, g), 0.0);
  EXPECT_THROW(ClientEstimate(0.5, 0.0, g), DomainError);
}

TEST_F(MetrologyPropertyTest, ClientUncertaintyEqualsExactBinomialRmse) {
  for (int i = 0; i < 300; ++i) {
    const double t = LogUniform(0.01, 5), m = std::floor(LogUniform(1, 1e9));
    const double ry = Uniform(-0.3, 0.3), g = Uniform(0, 4);
    EXPECT_NEAR(ClientUncertainty(t, m, ry, g) / std::sqrt(oracle::ClientMse(t, m, ry, g)), 1.0, 1e-10);
  }
}

TEST_F(MetrologyPropertyTest, UpperBoundDominatesAdmissibleStates) {
  for (int i = 0; i < 300; ++i) {
    const double eps = LogUniform(1e-6, 0.2), t = LogUniform(0.05, 3), g = Uniform(0, 3);
    const double m = LogUniform(1, 1e8);
    const PreparationErrorBudget budget(eps);
    const double cap = WorstCaseClientState(budget).ry;
    const double upper = ClientUncertaintyUpper(t, m, budget, g);
    EXPECT_NEAR(upper, ClientUncertainty(t, m, cap, g), 1e-12 * upper);
    EXPECT_LE(ClientUncertainty(t, m, Uniform(-cap, cap), g), upper * (1 + 1e-14));
    EXPECT_GE(upper, StandardMetrologyUncertainty(t, m, g) * (1 - 1e-14));
  }
}

TEST(MetrologyTest, UpperReducesToStandardAtZeroError) {
  EXPECT_DOUBLE_EQ(ClientUncertaintyUpper(1.0, 100, PreparationErrorBudget(0), 1.0),
                   std::numbers::e / 10.0);
  EXPECT_DOUBLE_EQ(StandardMetrologyUncertainty(1.0, 100, 1.0), std::numbers::e / 10.0);
}

TEST(MetrologyTest, UpperPlateausAtLargeM) {
  const PreparationErrorBudget budget(0.01);
  const double plateau = 2 * std::sqrt(budget.ErrorProduct()) / 0.5;
  EXPECT_NEAR(ClientUncertaintyUpper(0.5, 1e14, budget, 0.5) / plateau, 1.0, 1e-6);
}

TEST_F(MetrologyPropertyTest, EveUncertaintyMatchesErrorPropagation) {
  for (int i = 0; i < 200; ++i) {
    const double rx = Uniform(0.05, 0.6) * (i % 2 ? 1 : -1), ry = Uniform(-0.6, 0.6);
    const double t = LogUniform(0.05, 3), m = LogUniform(1, 1e6);
    EXPECT_NEAR(EveUncertainty(t, m, {rx, ry, 0.1}) /
                    oracle::EveErrorPropagation(t, m, rx, ry, 0.1), 1.0, 1e-7);
  }
}

TEST_F(MetrologyPropertyTest, EveLowerBoundIsMinimumOverAdmissibleStates) {
  for (int i = 0; i < 200; ++i) {
    const double eps = LogUniform(1e-6, 0.2), t = LogUniform(0.05, 3), m = LogUniform(1, 1e6);
    const PreparationErrorBudget budget(eps);
    const double lower = EveUncertaintyLower(t, m, budget);
    EXPECT_NEAR(lower, EveUncertainty(t, m, BestCaseEveState(budget)), 1e-12 * lower);
    // Any state inside the admissible ball does no better.
    const double r = Uniform(0.01, 1.0) * 2 * std::sqrt(budget.ErrorProduct());
    const double phi = Uniform(0, 2 * std::numbers::pi);
    const BlochVector s{r * std::cos(phi), r * std::sin(phi), 0};
    if (std::abs(s.rx) > 1e-9) {
      EXPECT_GE(EveUncertainty(t, m, s), lower * (1 - 1e-12));
    }
  }
}

TEST(MetrologyTest, EveDegenerateAndZeroBudget) {
  EXPECT_THROW(EveUncertainty(1.0, 10, {0, 0.5, 0}), DegenerateStateError);
  EXPECT_EQ(EveUncertaintyLower(1.0, 10, PreparationErrorBudget(0)),
            std::numeric_limits<double>::infinity());
}

TEST_F(MetrologyPropertyTest, RatioIsIndependentOfTimeNormalisation) {
  for (int i = 0; i < 200; ++i) {
    const double eps = LogUniform(1e-6, 0.2), m = LogUniform(1, 1e9), g = Uniform(0, 3);
    const PreparationErrorBudget budget(eps);
    const double ratio = UncertaintyRatio(m, budget, g);
    for (double t : {0.1, 1.0, 7.0}) {
      EXPECT_NEAR(ratio,
                  ClientUncertaintyUpper(t, m, budget, g) / EveUncertaintyLower(t, m, budget),
                  1e-12 * ratio);
    }
  }
  EXPECT_EQ(UncertaintyRatio(100, PreparationErrorBudget(0), 1.0), 0.0);
}

TEST(MetrologyTest, DomainChecks) {
  const PreparationErrorBudget budget(0.01);
  EXPECT_THROW(ClientUncertainty(0.0, 10, 0.1, 0.0), DomainError);
  EXPECT_THROW(ClientUncertainty(1.0, 0.5, 0.1, 0.0), DomainError);
  EXPECT_THROW(ClientUncertaintyUpper(-1.0, 10, budget, 0.0), DomainError);
  EXPECT_THROW(EveUncertaintyLower(1.0, 0.0, budget), DomainError);
  EXPECT_THROW(UncertaintyRatio(0.9, budget, 0.0), DomainError);
}

TEST(SensingConfigTest, ValidationAndFlags) {
  SensingConfig c;
  c.omega = 0.01;
  c.t = 1.0;
  EXPECT_NO_THROW(c.Validate());
  EXPECT_FALSE(c.LinearizationFlagged());
  c.omega = 0.2;
  EXPECT_TRUE(c.LinearizationFlagged());
  c.t = 0.0;
  EXPECT_THROW(c.Validate(), DomainError);
  c.t = 2.0;
  c.model = DephasingModel(NoiseKind::kLowFrequency, 4.0);
  EXPECT_DOUBLE_EQ(c.DecoherenceExponent(), 0.25);
  c.regime = SlowReadout{0};
  EXPECT_THROW(c.Validate(), DomainError);
}

TEST(ReadoutRegimeTest, RepetitionCount) {
  EXPECT_EQ(RepetitionCount(SlowReadout{42}, 3.0), 42.0);
  EXPECT_DOUBLE_EQ(RepetitionCount(FastReadout{10.0}, 0.25), 40.0);
  EXPECT_THROW(RepetitionCount(FastReadout{0.0}, 1.0), DomainError);
  EXPECT_THROW(RepetitionCount(FastReadout{1.0}, 0.0), DomainError);
}

}  // namespace
}  // namespace qrs
