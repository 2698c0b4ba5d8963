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

// Command implementations behind the `qrs` executable. Each command writes
// CSV to a caller-supplied stream so that tests can drive them in memory.

#ifndef QRS_CLI_COMMANDS_H_
#define QRS_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrs/noise.h"
#include "qrs/optimize.h"
#include "qrs/simulate.h"

namespace qrs::cli {

// Raised for unreadable/unwritable paths. Maps to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class SweepScale { kLinear, kLog };

struct SweepSpec {
  double start = 1.0;
  double stop = 10.0;
  int points = 2;
  SweepScale scale = SweepScale::kLog;

  // Parses "start:stop:points:{lin|log}". Throws DomainError on bad syntax
  // or when the invariants fail.
  static SweepSpec Parse(const std::string& text);
  void Validate() const;
  // Grid values; the first and last are exactly start and stop.
  std::vector<double> Values() const;
};

// "white", "lowfreq" or "both".
std::vector<NoiseKind> ParseNoiseSelection(const std::string& text);
// "uncertainty", "ratio" or "both".
std::vector<OptimizationTarget> ParseTargetSelection(const std::string& text);
RegimeFamily ParseRegime(const std::string& text);
SamplingMode ParseSamplingMode(const std::string& text);

// Column suffix used in CSV headers: "white" or "low".
const char* KindSuffix(NoiseKind kind);

// Formats a cell with 17 significant digits; nullopt becomes an empty cell.
std::string FormatCell(std::optional<double> value);

struct SlowSweepOptions {
  double epsilon = 0.001;
  std::vector<NoiseKind> kinds{NoiseKind::kWhite, NoiseKind::kLowFrequency};
  SweepSpec sweep{1.0, 1e4, 200, SweepScale::kLog};
};

struct FastSweepOptions {
  double epsilon = 0.0001;
  std::vector<NoiseKind> kinds{NoiseKind::kWhite, NoiseKind::kLowFrequency};
  std::vector<OptimizationTarget> targets{OptimizationTarget::kMinimizeClientUncertainty,
                                          OptimizationTarget::kMinimizeRatio};
  SweepSpec sweep{1.0, 1e10, 200, SweepScale::kLog};
};

struct ContourOptions {
  double epsilon = 0.001;
  NoiseKind kind = NoiseKind::kWhite;
  RegimeFamily regime = RegimeFamily::kSlow;
  OptimizationTarget objective = OptimizationTarget::kMinimizeClientUncertainty;
  SweepSpec outer{1.0, 1e4, 41, SweepScale::kLog};        // M or N
  SweepSpec t_grid{0.9, 2.0, 111, SweepScale::kLinear};   // t / T2
};

struct MonteCarloOptions {
  double epsilon = 0.0;
  NoiseKind kind = NoiseKind::kWhite;
  double t2 = 1.0;
  double t_over_t2 = 1.0;
  double omega_t = 0.01;
  std::int64_t shots = 100;     // M
  std::int64_t trials = 10000;
  SamplingMode mode = SamplingMode::kChannel;
  std::uint64_t seed = 0;
};

struct MonteCarloSummary {
  double omega = 0.0;
  double t = 0.0;
  EstimateSummary estimates;
  double analytic_uncertainty = 0.0;
  double z_score = 0.0;
};

struct SamplingOptions {
  SamplingTestParams params{0.1, 0.05, 0.02};
  double fidelity = 1.0;
  std::int64_t runs = 1000;
  std::uint64_t seed = 0;
};

struct SamplingSummary {
  std::int64_t k = 0;
  std::int64_t runs = 0;
  double pass_rate = 0.0;
  double violation_rate = 0.0;
};

void SweepSlow(const SlowSweepOptions& options, std::ostream& csv);
void SweepFast(const FastSweepOptions& options, std::ostream& csv);
// Columns m_or_n, t_over_t2, value, ridge, t_opt_over_t2. `ridge` is 1 at the
// grid minimum of each outer column; t_opt_over_t2 is the analytic optimum
// (empty when the objective has no interior optimum).
void Contour(const ContourOptions& options, std::ostream& csv);
MonteCarloSummary MonteCarlo(const MonteCarloOptions& options, std::ostream& csv);
void WriteMonteCarloSummary(const MonteCarloSummary& summary, std::ostream& out);
SamplingSummary SamplingTest(const SamplingOptions& options, std::ostream& csv);
void WriteSamplingSummary(const SamplingSummary& summary, std::ostream& out);

// Writes the data files for figure ids 3..11 into out_dir and returns their
// paths. Throws DomainError for unknown ids and IoError on write failure.
std::vector<std::filesystem::path> ReproduceFigure(int id, const std::filesystem::path& out_dir);

}  // namespace qrs::cli

#endif  // QRS_CLI_COMMANDS_H_
