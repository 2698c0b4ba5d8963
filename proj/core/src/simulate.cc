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

#include "qrs/simulate.h"

#include <cmath>
#include <numeric>
#include <string>

#include "qrs/errors.h"
#include "qrs/noise.h"
#include "qrs/parallel.h"

namespace qrs {

const char* SamplingModeName(SamplingMode mode) {
  return mode == SamplingMode::kChannel ? "channel" : "trajectory";
}

void TrialConfig::Validate() const {
  config.Validate();
  state.Validate();
  if (num_protocol_runs < 1) throw DomainError("num_protocol_runs must be >= 1");
  if (num_trials < 1) throw DomainError("num_trials must be >= 1");
}

bool RunSingleShot(const BlochVector& state, const SensingConfig& config,
                   SamplingMode mode, RngStream& rng) {
  if (mode == SamplingMode::kChannel) {
    const double p = ExactOutcomeProbability(state, config.omega, config.t,
                                             config.DecoherenceExponent());
    return rng.Bernoulli(p);
  }
  const double phi = SampleDephasingPhase(config.model, config.t, rng);
  const double p = ExactOutcomeProbability(RotateAboutZ(state, phi), config.omega, config.t, 0.0);
  return rng.Bernoulli(p);
}

double RunProtocolTrial(const TrialConfig& tc, RngStream& rng) {
  const SensingConfig& cfg = tc.config;
  const double g = cfg.DecoherenceExponent();
  const std::int64_t m = tc.num_protocol_runs;
  std::int64_t ones = 0;
  if (tc.mode == SamplingMode::kChannel) {
    ones = rng.Binomial(m, ExactOutcomeProbability(tc.state, cfg.omega, cfg.t, g));
  } else {
    for (std::int64_t shot = 0; shot < m; ++shot) {
      ones += RunSingleShot(tc.state, cfg, SamplingMode::kTrajectory, rng) ? 1 : 0;
    }
  }
  const double mean_outcome = static_cast<double>(ones) / static_cast<double>(m);
  return ClientEstimate(mean_outcome, cfg.t, g);
}

std::vector<double> RunTrials(const TrialConfig& tc, std::uint64_t seed) {
  tc.Validate();
  std::vector<double> estimates(static_cast<std::size_t>(tc.num_trials));
  ParallelFor(estimates.size(), [&](std::size_t i) {
    RngStream rng(seed, i);
    estimates[i] = RunProtocolTrial(tc, rng);
  });
  return estimates;
}

EstimateSummary SummarizeEstimates(std::span<const double> estimates, double true_omega) {
  EstimateSummary s;
  const auto n = static_cast<double>(estimates.size());
  s.trials = static_cast<std::int64_t>(estimates.size());
  if (estimates.empty()) return s;
  s.mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) / n;

  double var_sum = 0.0;
  double mse = 0.0;
  for (double e : estimates) {
    var_sum += (e - s.mean) * (e - s.mean);
    mse += (e - true_omega) * (e - true_omega);
  }
  mse /= n;
  double sq_var = 0.0;
  for (double e : estimates) {
    const double d = (e - true_omega) * (e - true_omega) - mse;
    sq_var += d * d;
  }
  s.rmse = std::sqrt(mse);
  if (estimates.size() > 1) {
    s.mean_standard_error = std::sqrt(var_sum / (n - 1.0) / n);
    const double mse_se = std::sqrt(sq_var / (n - 1.0) / n);
    s.rmse_standard_error = s.rmse > 0.0 ? mse_se / (2.0 * s.rmse) : 0.0;
  }
  return s;
}

double EmpiricalRmse(const TrialConfig& tc, std::uint64_t seed) {
  if (tc.num_trials < 100) throw DomainError("EmpiricalRmse needs at least 100 trials");
  const std::vector<double> estimates = RunTrials(tc, seed);
  return SummarizeEstimates(estimates, tc.config.omega).rmse;
}

// ---- Random-sampling test -------------------------------------------------

TwoQubitRegister TwoQubitRegister::Ideal() { return {1.0, RegisterNoise::kIdealBell}; }

TwoQubitRegister TwoQubitRegister::Werner(double fidelity) {
  if (!(fidelity >= 0.25 && fidelity <= 1.0)) {
    throw DomainError("Werner fidelity must lie in [1/4, 1], got " + std::to_string(fidelity));
  }
  return {fidelity, RegisterNoise::kWernerMix};
}

double TwoQubitRegister::WernerWeight() const {
  if (noise_form == RegisterNoise::kIdealBell) return 1.0;
  return (4.0 * bell_fidelity - 1.0) / 3.0;
}

double TwoQubitRegister::MismatchProbability() const {
  return 0.5 * (1.0 - WernerWeight());
}

void SamplingTestParams::Validate() const {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (!(capital_delta >= 0.0)) throw DomainError("Delta must be non-negative");
  if (!(epsilon > 3.0 * capital_delta)) {
    throw DomainError("sampling test requires epsilon > 3 Delta");
  }
}

std::int64_t RequiredRegisters(const SamplingTestParams& params) {
  params.Validate();
  const double gap = params.epsilon - 3.0 * params.capital_delta;
  return static_cast<std::int64_t>(
      std::ceil(75.0 * std::log(2.0 / params.delta) / (8.0 * gap * gap)));
}

SamplingTestReport RunRandomSamplingTest(const SamplingTestParams& params,
                                         std::span<const TwoQubitRegister> registers,
                                         RngStream& rng) {
  SamplingTestReport report;
  report.k = RequiredRegisters(params);
  const auto k = static_cast<std::size_t>(report.k);
  if (registers.size() != 4 * k) {
    throw SizeMismatchError("sampling test needs 4k = " + std::to_string(4 * k) +
                            " registers, got " + std::to_string(registers.size()));
  }

  // Partial Fisher-Yates: the first 2k slots become a uniform random subset.
  std::vector<std::size_t> order(registers.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < 2 * k; ++i) {
    const std::size_t j = i + rng.UniformIndex(order.size() - i);
    std::swap(order[i], order[j]);
  }
  // Slots [0, k) are measured in XX and [k, 2k) in ZZ. The mismatch
  // probability is basis-independent for the register family modelled here.
  for (std::size_t i = 0; i < 2 * k; ++i) {
    if (rng.Bernoulli(registers[order[i]].MismatchProbability())) ++report.n_fail;
  }

  const double two_k = 2.0 * static_cast<double>(k);
  report.passed = static_cast<double>(report.n_fail) <= two_k * params.capital_delta;
  report.fidelity_lower_bound = 1.0 - params.epsilon + 3.0 * params.capital_delta -
                                3.0 * static_cast<double>(report.n_fail) / two_k;
  report.selected_register = order[2 * k + rng.UniformIndex(2 * k)];
  report.selected_fidelity = registers[report.selected_register].bell_fidelity;
  report.bound_violated = report.fidelity_lower_bound > report.selected_fidelity;
  return report;
}

std::vector<SamplingTestReport> SimulateSamplingCampaign(const SamplingTestParams& params,
                                                         double fidelity, std::int64_t runs,
                                                         std::uint64_t seed) {
  if (runs < 1) throw DomainError("runs must be >= 1");
  const std::int64_t k = RequiredRegisters(params);
  const TwoQubitRegister reg =
      fidelity == 1.0 ? TwoQubitRegister::Ideal() : TwoQubitRegister::Werner(fidelity);
  const std::vector<TwoQubitRegister> registers(static_cast<std::size_t>(4 * k), reg);

  std::vector<SamplingTestReport> reports(static_cast<std::size_t>(runs));
  ParallelFor(reports.size(), [&](std::size_t i) {
    RngStream rng(seed, i);
    reports[i] = RunRandomSamplingTest(params, registers, rng);
  });
  return reports;
}

}  // namespace qrs
