// Copyright 2026 The ddapprox Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ddapprox/approx.h"
#include "ddapprox/dd_package.h"

namespace ddapprox {

/// A named state source: "fig2", "ghz" (n), "qft" (n) or "random" (n, depth, seed).
struct BuiltinSource {
    std::string name;
    std::size_t n = 0;
    std::size_t depth = 0;
    std::uint64_t seed = 0;
};

enum class OutputFormat { Human, Csv };

struct RunConfig {
    std::optional<std::string> circuit_path;
    std::optional<BuiltinSource> builtin;
    Scheme scheme = TargetFidelityScheme{};
    OutputFormat format = OutputFormat::Human;
    Normalization normalization = Normalization::PositiveReal;
    std::optional<std::string> csv_path;
    std::optional<std::string> dot_before;
    std::optional<std::string> dot_after;
    std::optional<std::string> dump_vector;
    std::size_t vector_cap = kDefaultVectorCap;

    /// Throws std::invalid_argument unless exactly one source is set and the
    /// scheme parameters are valid.
    void validate() const;
};

inline constexpr const char *kReportHeader = "benchmark,scheme,param,orig_size,approx_size,compression,fidelity";
inline constexpr const char *kSweepHeader = "param,fidelity,relddsize";

/// The amplitudes of the worked example: [0, 2, 0, 2, 1, 0, 0, -1] / sqrt(10).
std::vector<std::complex<double>> fig2_amplitudes();

/// Builds the configured state. Returns the benchmark name alongside it.
struct LoadedState {
    std::string benchmark;
    StateDD state;
};
LoadedState load_state(Package &pkg, const RunConfig &config);

/// One CSV report row (no trailing newline).
std::string format_report_row(const std::string &benchmark, const ApproxReport &report);

/// Loads, approximates and writes the artifacts named in `config`. Returns the
/// result; errors propagate as exceptions.
struct RunOutcome {
    std::string benchmark;
    StateDD original;
    ApproxResult result;
};
RunOutcome execute(Package &pkg, const RunConfig &config);

struct SweepRow {
    double param = 0.0;
    double fidelity = 0.0;
    double relddsize = 0.0;
};

/// Re-runs the configured scheme on one state for each value of its primary
/// parameter (traversals for sampling, tau for threshold, f otherwise).
std::vector<SweepRow> sweep(Package &pkg, const RunConfig &config, const std::vector<double> &values);

/// "param,fidelity,relddsize" CSV text, header included.
std::string format_sweep(const std::vector<SweepRow> &rows);

/// Exit codes of run() and the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitZeroState = 3,
    kExitIo = 4,
};

/// execute() plus reporting: prints the report in the configured format to
/// `out`, error messages to `err`, and maps exceptions to ExitCode values.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// sweep() plus reporting; the CSV goes to config.csv_path if set, else `out`.
int run_sweep(const RunConfig &config, const std::vector<double> &values, std::ostream &out, std::ostream &err);

}  // namespace ddapprox
