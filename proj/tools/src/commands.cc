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

#include "qrs_cli/commands.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include "qrs/errors.h"
#include "qrs/metrology.h"
#include "qrs/parallel.h"
#include "qrs/states.h"

namespace qrs::cli {
namespace {

using Eval = std::function<double(double)>;

struct Column {
  std::string name;
  std::function<std::optional<double>(double)> eval;
};

// Undefined points (domain errors from asymptotic forms, times outside the
// admissible range) become empty cells.
std::optional<double> Try(const Eval& f, double x) {
  try {
    const double v = f(x);
    if (!std::isfinite(v)) return std::nullopt;
    return v;
  } catch (const DomainError&) {
    return std::nullopt;
  } catch (const DegenerateStateError&) {
    return std::nullopt;
  }
}

Column MakeColumn(std::string name, Eval f) {
  return {std::move(name), [f = std::move(f)](double x) { return Try(f, x); }};
}

void WriteTable(const std::string& first, const std::vector<Column>& columns,
                const std::vector<double>& xs, std::ostream& csv) {
  csv << first;
  for (const Column& c : columns) csv << ',' << c.name;
  csv << '\n';
  std::vector<std::string> rows(xs.size());
  ParallelFor(xs.size(), [&](std::size_t i) {
    std::string row = FormatCell(xs[i]);
    for (const Column& c : columns) {
      row += ',';
      row += FormatCell(c.eval(xs[i]));
    }
    rows[i] = std::move(row);
  });
  for (const std::string& row : rows) csv << row << '\n';
}

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void CloseChecked(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

bool Selected(const std::vector<OptimizationTarget>& targets, OptimizationTarget t) {
  for (OptimizationTarget s : targets) {
    if (s == t) return true;
  }
  return false;
}

}  // namespace

SweepSpec SweepSpec::Parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4) {
    throw DomainError("sweep must look like start:stop:points:{lin|log}, got '" + text + "'");
  }
  SweepSpec spec;
  try {
    std::size_t used = 0;
    spec.start = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    spec.stop = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    spec.points = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    throw DomainError("malformed number in sweep '" + text + "'");
  }
  if (parts[3] == "lin") {
    spec.scale = SweepScale::kLinear;
  } else if (parts[3] == "log") {
    spec.scale = SweepScale::kLog;
  } else {
    throw DomainError("sweep scale must be lin or log, got '" + parts[3] + "'");
  }
  spec.Validate();
  return spec;
}

void SweepSpec::Validate() const {
  if (!(std::isfinite(start) && std::isfinite(stop) && start < stop)) {
    throw DomainError("sweep requires finite start < stop");
  }
  if (points < 2) throw DomainError("sweep requires at least 2 points");
  if (scale == SweepScale::kLog && !(start > 0.0)) {
    throw DomainError("log sweep requires start > 0");
  }
}

std::vector<double> SweepSpec::Values() const {
  Validate();
  std::vector<double> values(static_cast<std::size_t>(points));
  const double last = points - 1;
  for (int i = 0; i < points; ++i) {
    const double f = i / last;
    values[i] = scale == SweepScale::kLinear
                    ? start + (stop - start) * f
                    : start * std::pow(stop / start, f);
  }
  values.front() = start;
  values.back() = stop;
  return values;
}

std::vector<NoiseKind> ParseNoiseSelection(const std::string& text) {
  if (text == "white") return {NoiseKind::kWhite};
  if (text == "lowfreq") return {NoiseKind::kLowFrequency};
  if (text == "both") return {NoiseKind::kWhite, NoiseKind::kLowFrequency};
  throw DomainError("noise must be white, lowfreq or both, got '" + text + "'");
}

std::vector<OptimizationTarget> ParseTargetSelection(const std::string& text) {
  if (text == "uncertainty") return {OptimizationTarget::kMinimizeClientUncertainty};
  if (text == "ratio") return {OptimizationTarget::kMinimizeRatio};
  if (text == "both") {
    return {OptimizationTarget::kMinimizeClientUncertainty, OptimizationTarget::kMinimizeRatio};
  }
  throw DomainError("target must be uncertainty, ratio or both, got '" + text + "'");
}

RegimeFamily ParseRegime(const std::string& text) {
  if (text == "slow") return RegimeFamily::kSlow;
  if (text == "fast") return RegimeFamily::kFast;
  throw DomainError("regime must be slow or fast, got '" + text + "'");
}

SamplingMode ParseSamplingMode(const std::string& text) {
  if (text == "channel") return SamplingMode::kChannel;
  if (text == "trajectory") return SamplingMode::kTrajectory;
  throw DomainError("mode must be channel or trajectory, got '" + text + "'");
}

const char* KindSuffix(NoiseKind kind) {
  return kind == NoiseKind::kWhite ? "white" : "low";
}

std::string FormatCell(std::optional<double> value) {
  if (!value) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *value);
  return buf;
}

void SweepSlow(const SlowSweepOptions& options, std::ostream& csv) {
  const PreparationErrorBudget budget(options.epsilon);
  const std::vector<double> ms = options.sweep.Values();
  if (ms.front() < 1.0) throw DomainError("slow sweep requires M >= 1");

  constexpr auto kSmall = AsymptoticRegime::kSmall;
  constexpr auto kLarge = AsymptoticRegime::kLarge;
  using Maker = std::function<Eval(NoiseKind)>;
  const std::vector<std::pair<std::string, Maker>> quantities = {
      {"t_opt", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimalTimeSlow(m, budget, k); };
       }},
      {"t_opt_small_asym", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimalTimeSlowAsymptotic(m, budget, k, kSmall); };
       }},
      {"t_opt_large_asym", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimalTimeSlowAsymptotic(m, budget, k, kLarge); };
       }},
      {"u_exact", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimizedUncertaintySlow(m, budget, k); };
       }},
      {"u_small_asym", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimizedUncertaintySlowAsymptotic(m, budget, k, kSmall); };
       }},
      {"u_large_asym", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimizedUncertaintySlowAsymptotic(m, budget, k, kLarge); };
       }},
      {"ratio_exact", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimizedRatioSlow(m, budget, k); };
       }},
      {"ratio_small_asym", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimizedRatioSlowAsymptotic(m, budget, k, kSmall); };
       }},
      {"ratio_large_asym", [&](NoiseKind k) -> Eval {
         return [=](double m) { return OptimizedRatioSlowAsymptotic(m, budget, k, kLarge); };
       }},
  };

  std::vector<Column> columns;
  for (const auto& [name, make] : quantities) {
    for (NoiseKind kind : options.kinds) {
      columns.push_back(MakeColumn(name + "_" + KindSuffix(kind), make(kind)));
    }
  }
  WriteTable("M", columns, ms, csv);
}

void SweepFast(const FastSweepOptions& options, std::ostream& csv) {
  const PreparationErrorBudget budget(options.epsilon);
  const std::vector<double> ns = options.sweep.Values();
  if (!(ns.front() > 0.0)) throw DomainError("fast sweep requires N > 0");

  constexpr auto kU = OptimizationTarget::kMinimizeClientUncertainty;
  constexpr auto kR = OptimizationTarget::kMinimizeRatio;
  constexpr auto kSmall = AsymptoticRegime::kSmall;
  constexpr auto kLarge = AsymptoticRegime::kLarge;
  struct Quantity {
    std::string name;
    OptimizationTarget target;
    std::function<Eval(NoiseKind)> make;
  };
  const std::vector<Quantity> quantities = {
      {"t_opt_uncertainty", kU, [&](NoiseKind k) -> Eval {
         return [=](double n) { return OptimalTimeFastUncertainty(n, budget, k); };
       }},
      {"t_optR", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return OptimalTimeFastRatio(n, budget, k); };
       }},
      {"u_at_topt", kU, [&](NoiseKind k) -> Eval {
         return [=](double n) {
           return FastUncertainty(OptimalTimeFastUncertainty(n, budget, k), n, budget, k);
         };
       }},
      {"u_at_toptR", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) {
           return FastUncertainty(OptimalTimeFastRatio(n, budget, k), n, budget, k);
         };
       }},
      {"ratio_at_topt", kU, [&](NoiseKind k) -> Eval {
         return [=](double n) {
           return FastRatio(OptimalTimeFastUncertainty(n, budget, k), n, budget, k);
         };
       }},
      {"ratio_at_toptR", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return FastRatio(OptimalTimeFastRatio(n, budget, k), n, budget, k); };
       }},
      {"t_opt_uncertainty_small_asym", kU, [](NoiseKind) -> Eval {
         return [](double) { return 0.5; };
       }},
      {"t_optR_small_asym", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return OptimalTimeFastRatioAsymptotic(n, budget, k, kSmall); };
       }},
      {"t_optR_large_asym", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return OptimalTimeFastRatioAsymptotic(n, budget, k, kLarge); };
       }},
      {"u_at_toptR_small_asym", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return UncertaintyAtRatioOptimumAsymptotic(n, budget, k, kSmall); };
       }},
      {"u_at_toptR_large_asym", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return UncertaintyAtRatioOptimumAsymptotic(n, budget, k, kLarge); };
       }},
      {"ratio_at_toptR_small_asym", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return RatioAtRatioOptimumAsymptotic(n, budget, k, kSmall); };
       }},
      {"ratio_at_toptR_large_asym", kR, [&](NoiseKind k) -> Eval {
         return [=](double n) { return RatioAtRatioOptimumAsymptotic(n, budget, k, kLarge); };
       }},
  };

  std::vector<Column> columns;
  for (const Quantity& q : quantities) {
    if (!Selected(options.targets, q.target)) continue;
    for (NoiseKind kind : options.kinds) {
      columns.push_back(MakeColumn(q.name + "_" + KindSuffix(kind), q.make(kind)));
    }
  }
  WriteTable("N", columns, ns, csv);
}

void Contour(const ContourOptions& options, std::ostream& csv) {
  const PreparationErrorBudget budget(options.epsilon);
  const std::vector<double> outer = options.outer.Values();
  const std::vector<double> taus = options.t_grid.Values();
  if (!(taus.front() > 0.0)) throw DomainError("contour requires t/T2 > 0");
  const bool slow = options.regime == RegimeFamily::kSlow;
  const bool ratio = options.objective == OptimizationTarget::kMinimizeRatio;
  if (slow && outer.front() < 1.0) throw DomainError("slow contour requires M >= 1");
  if (!slow && !(outer.front() > 0.0)) throw DomainError("fast contour requires N > 0");

  const NoiseKind kind = options.kind;
  auto objective = [&](double count, double tau) -> std::optional<double> {
    return Try(
        [&](double t) {
          if (slow) {
            return ratio ? SlowRatio(t, count, budget, kind) : SlowUncertainty(t, count, budget, kind);
          }
          return ratio ? FastRatio(t, count, budget, kind) : FastUncertainty(t, count, budget, kind);
        },
        tau);
  };
  auto analytic_optimum = [&](double count) -> std::optional<double> {
    // The slow-regime ratio grows monotonically in t, so it has no interior optimum.
    if (slow && ratio) return std::nullopt;
    return Try(
        [&](double c) {
          if (slow) return OptimalTimeSlow(c, budget, kind);
          return ratio ? OptimalTimeFastRatio(c, budget, kind)
                       : OptimalTimeFastUncertainty(c, budget, kind);
        },
        count);
  };

  std::vector<std::string> blocks(outer.size());
  ParallelFor(outer.size(), [&](std::size_t i) {
    std::vector<std::optional<double>> values(taus.size());
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < taus.size(); ++j) {
      values[j] = objective(outer[i], taus[j]);
      if (values[j] && (!best || *values[j] < *values[*best])) best = j;
    }
    const std::string count_cell = FormatCell(outer[i]);
    const std::string opt_cell = FormatCell(analytic_optimum(outer[i]));
    std::string block;
    for (std::size_t j = 0; j < taus.size(); ++j) {
      block += count_cell + ',' + FormatCell(taus[j]) + ',' + FormatCell(values[j]) + ',' +
               (best && *best == j ? "1" : "0") + ',' + opt_cell + '\n';
    }
    blocks[i] = std::move(block);
  });
  csv << "m_or_n,t_over_t2,value,ridge,t_opt_over_t2\n";
  for (const std::string& b : blocks) csv << b;
}

MonteCarloSummary MonteCarlo(const MonteCarloOptions& options, std::ostream& csv) {
  if (!(options.t_over_t2 > 0.0)) throw DomainError("interaction time must be positive");
  const PreparationErrorBudget budget(options.epsilon);
  TrialConfig tc;
  tc.config.t = options.t_over_t2 * options.t2;
  tc.config.omega = options.omega_t / tc.config.t;
  tc.config.model = DephasingModel(options.kind, options.t2);
  tc.config.budget = budget;
  tc.config.regime = SlowReadout{options.shots};
  tc.state = WorstCaseClientState(budget);
  tc.num_protocol_runs = options.shots;
  tc.num_trials = options.trials;
  tc.mode = options.mode;

  const std::vector<double> estimates = RunTrials(tc, options.seed);
  csv << "trial,estimate\n";
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    csv << i << ',' << FormatCell(estimates[i]) << '\n';
  }

  MonteCarloSummary summary;
  summary.omega = tc.config.omega;
  summary.t = tc.config.t;
  summary.estimates = SummarizeEstimates(estimates, tc.config.omega);
  summary.analytic_uncertainty =
      ClientUncertainty(tc.config.t, static_cast<double>(options.shots), tc.state.ry,
                        tc.config.DecoherenceExponent());
  const double se = summary.estimates.rmse_standard_error;
  summary.z_score =
      se > 0.0 ? (summary.estimates.rmse - summary.analytic_uncertainty) / se : 0.0;
  return summary;
}

void WriteMonteCarloSummary(const MonteCarloSummary& s, std::ostream& out) {
  out << "quantity,value\n"
      << "omega," << FormatCell(s.omega) << '\n'
      << "t," << FormatCell(s.t) << '\n'
      << "trials," << s.estimates.trials << '\n'
      << "mean_estimate," << FormatCell(s.estimates.mean) << '\n'
      << "mean_standard_error," << FormatCell(s.estimates.mean_standard_error) << '\n'
      << "empirical_rmse," << FormatCell(s.estimates.rmse) << '\n'
      << "rmse_standard_error," << FormatCell(s.estimates.rmse_standard_error) << '\n'
      << "analytic_uncertainty," << FormatCell(s.analytic_uncertainty) << '\n'
      << "z_score," << FormatCell(s.z_score) << '\n';
}

SamplingSummary SamplingTest(const SamplingOptions& options, std::ostream& csv) {
  const std::vector<SamplingTestReport> reports = SimulateSamplingCampaign(
      options.params, options.fidelity, options.runs, options.seed);
  SamplingSummary summary;
  summary.k = RequiredRegisters(options.params);
  summary.runs = options.runs;
  std::int64_t passes = 0;
  std::int64_t violations = 0;
  csv << "run,k,n_fail,passed,fidelity_lower_bound,selected_fidelity,bound_violated\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const SamplingTestReport& r = reports[i];
    passes += r.passed ? 1 : 0;
    violations += r.bound_violated ? 1 : 0;
    csv << i << ',' << r.k << ',' << r.n_fail << ',' << (r.passed ? 1 : 0) << ','
        << FormatCell(r.fidelity_lower_bound) << ',' << FormatCell(r.selected_fidelity) << ','
        << (r.bound_violated ? 1 : 0) << '\n';
  }
  const auto runs = static_cast<double>(options.runs);
  summary.pass_rate = static_cast<double>(passes) / runs;
  summary.violation_rate = static_cast<double>(violations) / runs;
  return summary;
}

void WriteSamplingSummary(const SamplingSummary& s, std::ostream& out) {
  out << "quantity,value\n"
      << "k," << s.k << '\n'
      << "runs," << s.runs << '\n'
      << "pass_rate," << FormatCell(s.pass_rate) << '\n'
      << "violation_rate," << FormatCell(s.violation_rate) << '\n';
}

std::vector<std::filesystem::path> ReproduceFigure(int id, const std::filesystem::path& out_dir) {
  if (id < 3 || id > 11) throw DomainError("figure id must be in 3..11, got " + std::to_string(id));
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& name, const std::function<void(std::ostream&)>& body) {
    const std::filesystem::path path = out_dir / name;
    std::ofstream out = OpenForWrite(path);
    body(out);
    CloseChecked(out, path);
    written.push_back(path);
  };
  const std::string stem = "fig" + std::to_string(id);

  if (id <= 4) {
    SlowSweepOptions o;
    o.epsilon = 0.001;
    o.sweep = {1.0, 1e10, 201, SweepScale::kLog};
    emit(stem + ".csv", [&](std::ostream& out) { SweepSlow(o, out); });
    return written;
  }
  if (id <= 8) {
    FastSweepOptions o;
    o.epsilon = 0.0001;
    o.sweep = {1.0, 1e10, 201, SweepScale::kLog};
    emit(stem + ".csv", [&](std::ostream& out) { SweepFast(o, out); });
    return written;
  }

  struct Panel {
    NoiseKind kind;
    double t_lo;
    double t_hi;
  };
  ContourOptions base;
  std::vector<Panel> panels;
  if (id == 9) {
    base.epsilon = 0.001;
    base.regime = RegimeFamily::kSlow;
    base.objective = OptimizationTarget::kMinimizeClientUncertainty;
    panels = {{NoiseKind::kWhite, 0.9, 2.0}, {NoiseKind::kLowFrequency, 0.7, 1.3}};
  } else if (id == 10) {
    base.epsilon = 0.0001;
    base.regime = RegimeFamily::kFast;
    base.objective = OptimizationTarget::kMinimizeClientUncertainty;
    panels = {{NoiseKind::kWhite, 0.5, 2.0}, {NoiseKind::kLowFrequency, 0.6, 1.4}};
  } else {
    base.epsilon = 0.0001;
    base.regime = RegimeFamily::kFast;
    base.objective = OptimizationTarget::kMinimizeRatio;
    panels = {{NoiseKind::kWhite, 0.2, 2.0}, {NoiseKind::kLowFrequency, 0.2, 1.4}};
  }
  for (const Panel& panel : panels) {
    ContourOptions o = base;
    o.kind = panel.kind;
    o.outer = {1.0, 1e4, 41, SweepScale::kLog};
    o.t_grid = {panel.t_lo, panel.t_hi, 121, SweepScale::kLinear};
    emit(stem + "_" + KindSuffix(panel.kind) + ".csv", [&](std::ostream& out) { Contour(o, out); });
  }
  return written;
}

}  // namespace qrs::cli
