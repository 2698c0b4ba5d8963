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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qrs/errors.h"
#include "qrs_cli/commands.h"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

std::uint64_t DefaultSeed() {
  const char* env = std::getenv("QRS_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::logic_error&) {
  }
  throw qrs::DomainError(std::string("QRS_SEED is not an unsigned integer: ") + env);
}

// Sends the CSV body to --out when given, otherwise to stdout. Summaries go
// to stdout in the first case and stderr in the second so the streams never mix.
void WithOutput(const std::string& out_path,
                const std::function<void(std::ostream& csv, std::ostream& summary)>& body) {
  if (out_path.empty()) {
    body(std::cout, std::cerr);
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw qrs::cli::IoError("cannot open " + out_path + " for writing");
  body(out, std::cout);
  out.flush();
  if (!out) throw qrs::cli::IoError("write to " + out_path + " failed");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = qrs::cli;
  CLI::App app{"Delegated Ramsey sensing under dephasing: sweeps, contours and simulations"};
  app.require_subcommand(1);

  std::string out_path;
  std::string noise = "both";
  std::string target = "both";
  std::string regime = "slow";
  std::string mode = "channel";
  std::string sweep_text;
  std::string t_sweep_text;
  std::optional<std::uint64_t> seed;

  // sweep-slow
  cli::SlowSweepOptions slow;
  auto* sweep_slow = app.add_subcommand("sweep-slow", "Optimized time, uncertainty and ratio vs M");
  sweep_slow->add_option("--epsilon", slow.epsilon, "State preparation error")->capture_default_str();
  sweep_slow->add_option("--noise", noise, "white|lowfreq|both")->capture_default_str();
  sweep_slow->add_option("--sweep", sweep_text, "start:stop:points:{lin|log} over M");
  sweep_slow->add_option("--out", out_path, "CSV path (stdout if omitted)");

  // sweep-fast
  cli::FastSweepOptions fast;
  auto* sweep_fast = app.add_subcommand("sweep-fast", "Fast-readout optima vs N = T/T2");
  sweep_fast->add_option("--epsilon", fast.epsilon, "State preparation error")->capture_default_str();
  sweep_fast->add_option("--noise", noise, "white|lowfreq|both")->capture_default_str();
  sweep_fast->add_option("--target", target, "uncertainty|ratio|both")->capture_default_str();
  sweep_fast->add_option("--sweep", sweep_text, "start:stop:points:{lin|log} over N");
  sweep_fast->add_option("--out", out_path, "CSV path (stdout if omitted)");

  // contour
  cli::ContourOptions contour;
  std::string contour_noise = "white";
  std::string contour_target = "uncertainty";
  auto* contour_cmd = app.add_subcommand("contour", "Objective on an (M or N) x t/T2 grid");
  contour_cmd->add_option("--epsilon", contour.epsilon, "State preparation error")->capture_default_str();
  contour_cmd->add_option("--noise", contour_noise, "white|lowfreq")->capture_default_str();
  contour_cmd->add_option("--regime", regime, "slow|fast")->capture_default_str();
  contour_cmd->add_option("--target", contour_target, "uncertainty|ratio")->capture_default_str();
  contour_cmd->add_option("--sweep", sweep_text, "Grid over M or N");
  contour_cmd->add_option("--t-sweep", t_sweep_text, "Grid over t/T2");
  contour_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");

  // montecarlo
  cli::MonteCarloOptions mc;
  std::string mc_noise = "white";
  auto* mc_cmd = app.add_subcommand("montecarlo", "Simulate the protocol and compare RMSE to theory");
  mc_cmd->add_option("--epsilon", mc.epsilon, "State preparation error")->capture_default_str();
  mc_cmd->add_option("--noise", mc_noise, "white|lowfreq")->capture_default_str();
  mc_cmd->add_option("--t2", mc.t2, "Decoherence time")->capture_default_str();
  mc_cmd->add_option("--time", mc.t_over_t2, "Interaction time in units of T2")->capture_default_str();
  mc_cmd->add_option("--omega-t", mc.omega_t, "Phase omega*t")->capture_default_str();
  mc_cmd->add_option("--shots", mc.shots, "Protocol repetitions M")->capture_default_str();
  mc_cmd->add_option("--trials", mc.trials, "Independent estimates")->capture_default_str();
  mc_cmd->add_option("--mode", mode, "channel|trajectory")->capture_default_str();
  mc_cmd->add_option("--seed", seed, "RNG seed (default QRS_SEED or 0)");
  mc_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");

  // sampling-test
  cli::SamplingOptions st;
  auto* st_cmd = app.add_subcommand("sampling-test", "Simulate the Bell-pair random-sampling test");
  st_cmd->add_option("--epsilon", st.params.epsilon, "Target error")->capture_default_str();
  st_cmd->add_option("--capital-delta", st.params.capital_delta, "Mismatch threshold fraction")
      ->capture_default_str();
  st_cmd->add_option("--delta", st.params.delta, "Failure probability")->capture_default_str();
  st_cmd->add_option("--fidelity", st.fidelity, "Bell fidelity of every register")->capture_default_str();
  st_cmd->add_option("--runs", st.runs, "Independent test runs")->capture_default_str();
  st_cmd->add_option("--seed", seed, "RNG seed (default QRS_SEED or 0)");
  st_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");

  // reproduce-figure
  int figure_id = 0;
  std::string out_dir = ".";
  auto* fig_cmd = app.add_subcommand("reproduce-figure", "Write the data behind one figure");
  fig_cmd->add_option("--id", figure_id, "Figure id, 3..11")->required();
  fig_cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (sweep_slow->parsed()) {
      slow.kinds = cli::ParseNoiseSelection(noise);
      if (!sweep_text.empty()) slow.sweep = cli::SweepSpec::Parse(sweep_text);
      WithOutput(out_path, [&](std::ostream& csv, std::ostream&) { cli::SweepSlow(slow, csv); });
    } else if (sweep_fast->parsed()) {
      fast.kinds = cli::ParseNoiseSelection(noise);
      fast.targets = cli::ParseTargetSelection(target);
      if (!sweep_text.empty()) fast.sweep = cli::SweepSpec::Parse(sweep_text);
      WithOutput(out_path, [&](std::ostream& csv, std::ostream&) { cli::SweepFast(fast, csv); });
    } else if (contour_cmd->parsed()) {
      const auto kinds = cli::ParseNoiseSelection(contour_noise);
      const auto targets = cli::ParseTargetSelection(contour_target);
      if (kinds.size() != 1 || targets.size() != 1) {
        throw qrs::DomainError("contour takes a single noise kind and a single target");
      }
      contour.kind = kinds.front();
      contour.objective = targets.front();
      contour.regime = cli::ParseRegime(regime);
      if (!sweep_text.empty()) contour.outer = cli::SweepSpec::Parse(sweep_text);
      if (!t_sweep_text.empty()) contour.t_grid = cli::SweepSpec::Parse(t_sweep_text);
      WithOutput(out_path, [&](std::ostream& csv, std::ostream&) { cli::Contour(contour, csv); });
    } else if (mc_cmd->parsed()) {
      const auto kinds = cli::ParseNoiseSelection(mc_noise);
      if (kinds.size() != 1) throw qrs::DomainError("montecarlo takes a single noise kind");
      mc.kind = kinds.front();
      mc.mode = cli::ParseSamplingMode(mode);
      mc.seed = seed.value_or(DefaultSeed());
      WithOutput(out_path, [&](std::ostream& csv, std::ostream& summary) {
        cli::WriteMonteCarloSummary(cli::MonteCarlo(mc, csv), summary);
      });
    } else if (st_cmd->parsed()) {
      st.seed = seed.value_or(DefaultSeed());
      WithOutput(out_path, [&](std::ostream& csv, std::ostream& summary) {
        cli::WriteSamplingSummary(cli::SamplingTest(st, csv), summary);
      });
    } else if (fig_cmd->parsed()) {
      for (const auto& path : cli::ReproduceFigure(figure_id, out_dir)) {
        std::cout << path.string() << '\n';
      }
    }
  } catch (const cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const qrs::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
