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

#include <benchmark/benchmark.h>

#include <cmath>

#include "qrs/numerics.h"
#include "qrs/optimize.h"
#include "qrs/simulate.h"

namespace {

void BM_LambertW0(benchmark::State& state) {
  const double x = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qrs::LambertW0(x));
}
BENCHMARK(BM_LambertW0)->DenseRange(-6, 12, 6);

void BM_LambertW0NearBranchPoint(benchmark::State& state) {
  const double x = qrs::kLambertBranchPoint + 1e-9;
  for (auto _ : state) benchmark::DoNotOptimize(qrs::LambertW0(x));
}
BENCHMARK(BM_LambertW0NearBranchPoint);

void BM_OptimalTimeFastUncertainty(benchmark::State& state) {
  const qrs::PreparationErrorBudget budget(1e-4);
  const double n = std::pow(10.0, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qrs::OptimalTimeFastUncertainty(n, budget, qrs::NoiseKind::kLowFrequency));
  }
}
BENCHMARK(BM_OptimalTimeFastUncertainty)->DenseRange(0, 9, 3);

void BM_CrossingRepetitionFast(benchmark::State& state) {
  const qrs::PreparationErrorBudget budget(1e-4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qrs::CrossingRepetition(budget, qrs::NoiseKind::kWhite,
                                                     qrs::RegimeFamily::kFast,
                                                     qrs::OptimizationTarget::kMinimizeClientUncertainty));
  }
}
BENCHMARK(BM_CrossingRepetitionFast);

void BM_ProtocolTrial(benchmark::State& state) {
  qrs::TrialConfig tc;
  tc.config.t = 1.0;
  tc.config.omega = 0.01;
  tc.config.budget = qrs::PreparationErrorBudget(0.001);
  tc.state = qrs::WorstCaseClientState(tc.config.budget);
  tc.num_protocol_runs = state.range(0);
  tc.config.regime = qrs::SlowReadout{tc.num_protocol_runs};
  tc.mode = state.range(1) ? qrs::SamplingMode::kTrajectory : qrs::SamplingMode::kChannel;
  qrs::RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(qrs::RunProtocolTrial(tc, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProtocolTrial)->ArgsProduct({{100, 10000}, {0, 1}});

void BM_RandomSamplingTest(benchmark::State& state) {
  const qrs::SamplingTestParams params{0.1, 0.05, 0.02};
  const std::int64_t k = qrs::RequiredRegisters(params);
  const std::vector<qrs::TwoQubitRegister> regs(4 * k, qrs::TwoQubitRegister::Werner(0.9));
  qrs::RngStream rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(qrs::RunRandomSamplingTest(params, regs, rng));
}
BENCHMARK(BM_RandomSamplingTest)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
