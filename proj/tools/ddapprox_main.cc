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

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "ddapprox/runner.h"

namespace {

using namespace ddapprox;

std::size_t to_count(const std::string &s, const char *what) {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) {
        throw std::invalid_argument(std::string("malformed ") + what + " '" + s + "'");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Approximate quantum states held as decision diagrams."};
    app.set_version_flag("--version", "ddapprox 0.1.0");

    std::string circuit_path;
    std::vector<std::string> builtin;
    std::string scheme = "target-fidelity";
    std::uint64_t traversals = 1000;
    std::uint64_t tau = 0;
    double fidelity = 0.9;
    std::string level = "best";
    std::uint64_t seed = 0;
    std::string format = "human";
    std::string normalization = "positive-real";
    std::string csv_path, dot_before, dot_after, dump_vector;
    std::vector<double> sweep_values;

    auto *source = app.add_option_group("source");
    source->add_option("--circuit", circuit_path, "Circuit file to simulate");
    source->add_option("--builtin", builtin, "fig2 | ghz <n> | qft <n> | random <n> <depth> <seed>")->expected(1, 4);
    source->require_option(1);

    app.add_option("--scheme", scheme, "Approximation scheme")
        ->check(CLI::IsMember({"sampling", "threshold", "target-fidelity", "per-level"}));
    app.add_option("--traversals,-L", traversals, "Number of sampled walks (sampling, threshold)");
    app.add_option("--tau", tau, "Keep nodes visited more than tau times (threshold)");
    app.add_option("--fidelity,-f", fidelity, "Target fidelity in (0, 1] (target-fidelity, per-level)");
    app.add_option("--level", level, "best or a qubit index (target-fidelity)");
    app.add_option("--seed", seed, "Seed for the sampling schemes");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "csv"}));
    app.add_option("--normalization", normalization, "Node weight normalization")
        ->check(CLI::IsMember({"positive-real", "complex"}));
    app.add_option("--csv", csv_path, "Write the CSV report (or sweep table) to this file");
    app.add_option("--dot-before", dot_before, "Write the original diagram as Graphviz");
    app.add_option("--dot-after", dot_after, "Write the approximated diagram as Graphviz");
    app.add_option("--dump-vector", dump_vector, "Write the approximated amplitudes (n <= 20)");
    app.add_option("--sweep", sweep_values, "Sweep the scheme's primary parameter over these values")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunConfig config;
    try {
        if (!circuit_path.empty()) {
            config.circuit_path = circuit_path;
        }
        if (!builtin.empty()) {
            BuiltinSource b;
            b.name = builtin[0];
            if (builtin.size() > 1) {
                b.n = to_count(builtin[1], "qubit count");
            }
            if (builtin.size() > 2) {
                b.depth = to_count(builtin[2], "depth");
            }
            if (builtin.size() > 3) {
                b.seed = to_count(builtin[3], "seed");
            }
            config.builtin = b;
        }
        if (scheme == "sampling") {
            config.scheme = SamplingScheme{traversals, seed};
        } else if (scheme == "threshold") {
            config.scheme = ThresholdScheme{traversals, tau, seed};
        } else if (scheme == "target-fidelity") {
            LevelStrategy strategy = level == "best" ? LevelStrategy::best() : LevelStrategy::at(to_count(level, "level"));
            config.scheme = TargetFidelityScheme{fidelity, strategy};
        } else {
            config.scheme = PerLevelScheme{fidelity};
        }
        config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Human;
        config.normalization = normalization == "complex" ? Normalization::Complex : Normalization::PositiveReal;
        if (!csv_path.empty()) {
            config.csv_path = csv_path;
        }
        if (!dot_before.empty()) {
            config.dot_before = dot_before;
        }
        if (!dot_after.empty()) {
            config.dot_after = dot_after;
        }
        if (!dump_vector.empty()) {
            config.dump_vector = dump_vector;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!sweep_values.empty()) {
        return run_sweep(config, sweep_values, std::cout, std::cerr);
    }
    return run(config, std::cout, std::cerr);
}
