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

// Monte Carlo simulation of the delegated sensing protocol and of the
// Bell-pair random-sampling test.

#ifndef QRS_SIMULATE_H_
#define QRS_SIMULATE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qrs/metrology.h"
#include "qrs/rng.h"
#include "qrs/states.h"

namespace qrs {

// ChannelLevel draws outcomes from the dephased outcome probability.
// TrajectoryLevel draws one random phase per shot and measures the
// resulting noiseless state.
enum class SamplingMode { kChannel, kTrajectory };

const char* SamplingModeName(SamplingMode mode);

struct TrialConfig {
  SensingConfig config;
  BlochVector state;
  std::int64_t num_protocol_runs = 1;  // M
  std::int64_t num_trials = 1;
  SamplingMode mode = SamplingMode::kChannel;

  void Validate() const;
};

// One sigma_y readout after the sensing interaction; true means +1.
bool RunSingleShot(const BlochVector& state, const SensingConfig& config,
                   SamplingMode mode, RngStream& rng);

// M shots averaged into S_M, converted with ClientEstimate. In channel mode
// the M i.i.d. shots are drawn at once as a binomial count.
double RunProtocolTrial(const TrialConfig& tc, RngStream& rng);

// num_trials estimates; trial i uses RngStream(seed, i). Runs in parallel and
// the result is independent of the thread count.
std::vector<double> RunTrials(const TrialConfig& tc, std::uint64_t seed);

struct EstimateSummary {
  std::int64_t trials = 0;
  double mean = 0.0;
  double rmse = 0.0;
  double mean_standard_error = 0.0;
  // Delta-method standard error of the RMSE.
  double rmse_standard_error = 0.0;
};

EstimateSummary SummarizeEstimates(std::span<const double> estimates, double true_omega);

// Sample RMSE of RunTrials against the true omega. Requires num_trials >= 100.
double EmpiricalRmse(const TrialConfig& tc, std::uint64_t seed);

// ---- Random-sampling test -------------------------------------------------

enum class RegisterNoise { kIdealBell, kWernerMix };

// A two-qubit register. A Werner register with weight w is
// w |Phi+><Phi+| + (1 - w) I/4, whose Bell fidelity is w + (1 - w)/4.
struct TwoQubitRegister {
  double bell_fidelity = 1.0;
  RegisterNoise noise_form = RegisterNoise::kIdealBell;

  static TwoQubitRegister Ideal();
  // Throws DomainError unless 1/4 <= fidelity <= 1.
  static TwoQubitRegister Werner(double fidelity);

  double WernerWeight() const;
  // Probability that the two halves disagree in the X or Z basis, (1 - w)/2.
  double MismatchProbability() const;
};

struct SamplingTestParams {
  double epsilon = 0.1;
  double delta = 0.05;          // failure probability
  double capital_delta = 0.0;   // tolerated mismatch fraction

  // Throws DomainError unless epsilon > 3 capital_delta and 0 < delta < 1.
  void Validate() const;
};

struct SamplingTestReport {
  std::int64_t k = 0;
  std::int64_t n_fail = 0;
  bool passed = false;
  double fidelity_lower_bound = 0.0;
  // Simulator-only ground truth, hidden from the test itself.
  std::size_t selected_register = 0;
  double selected_fidelity = 0.0;
  bool bound_violated = false;
};

// k = ceil(75 ln(2/delta) / (8 (epsilon - 3 Delta)^2)).
std::int64_t RequiredRegisters(const SamplingTestParams& params);

// Runs the test on exactly 4k registers: 2k are drawn uniformly, k measured
// in XX and k in ZZ; N_fail counts disagreements. Passes iff
// N_fail <= 2 k Delta and certifies 1 - eps + 3 Delta - 3 N_fail / (2k) for a
// register drawn uniformly from the remaining 2k.
// Throws SizeMismatchError if registers.size() != 4k.
SamplingTestReport RunRandomSamplingTest(const SamplingTestParams& params,
                                         std::span<const TwoQubitRegister> registers,
                                         RngStream& rng);

// `runs` independent tests on identical registers of the given Bell
// fidelity (ideal when fidelity == 1, Werner otherwise). Run i uses
// RngStream(seed, i).
std::vector<SamplingTestReport> SimulateSamplingCampaign(const SamplingTestParams& params,
                                                         double fidelity, std::int64_t runs,
                                                         std::uint64_t seed);

}  // namespace qrs

#endif  // QRS_SIMULATE_H_
