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

#include "ddapprox/runner.h"

#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ddapprox/circuit.h"
#include "ddapprox/errors.h"

namespace ddapprox {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading '" + path + "'");
    }
    return buf.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path + "'");
    }
}

std::string format_real(double v) {
    return fmt::format("{:.12g}", v);
}

std::string vector_dump(const StateDD &dd, std::size_t cap) {
    std::string out;
    const auto amps = to_vector(dd, cap);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out += fmt::format("{} {:.17g} {:.17g}\n", i, amps[i].real(), amps[i].imag());
    }
    return out;
}

Scheme with_primary_param(const Scheme &scheme, double value) {
    auto count = [&](const char *what) {
        if (!(value >= 0.0) || value != std::floor(value)) {
            throw std::invalid_argument(fmt::format("{} sweep values must be non-negative integers, got {}", what, value));
        }
        return static_cast<std::uint64_t>(value);
    };
    if (auto *s = std::get_if<SamplingScheme>(&scheme)) {
        return SamplingScheme{count("traversal"), s->seed};
    }
    if (auto *s = std::get_if<ThresholdScheme>(&scheme)) {
        return ThresholdScheme{s->traversals, count("tau"), s->seed};
    }
    if (auto *s = std::get_if<TargetFidelityScheme>(&scheme)) {
        return TargetFidelityScheme{value, s->level};
    }
    return PerLevelScheme{value};
}

int report_error(std::ostream &err, const char *kind, const std::exception &e, int code) {
    err << "error: " << kind << e.what() << '\n';
    return code;
}

template <typename Body>
int guarded(std::ostream &err, Body &&body) {
    try {
        return body();
    } catch (const ParseError &e) {
        return report_error(err, "parse: ", e, kExitUsage);
    } catch (const ZeroStateError &e) {
        return report_error(err, "zero state: ", e, kExitZeroState);
    } catch (const IoError &e) {
        return report_error(err, "io: ", e, kExitIo);
    } catch (const SizeError &e) {
        return report_error(err, "", e, kExitUsage);
    } catch (const std::invalid_argument &e) {
        return report_error(err, "", e, kExitUsage);
    } catch (const std::exception &e) {
        return report_error(err, "", e, kExitFailure);
    }
}

}  // namespace

void RunConfig::validate() const {
    if (circuit_path.has_value() == builtin.has_value()) {
        throw std::invalid_argument("exactly one of a circuit file or a builtin state must be given");
    }
    if (vector_cap > kDefaultVectorCap) {
        throw std::invalid_argument(fmt::format("vector dump cap must be at most {}", kDefaultVectorCap));
    }
    ddapprox::validate(scheme);
}

std::vector<std::complex<double>> fig2_amplitudes() {
    const double s = 1.0 / std::sqrt(10.0);
    return {0.0, 2.0 * s, 0.0, 2.0 * s, s, 0.0, 0.0, -s};
}

LoadedState load_state(Package &pkg, const RunConfig &config) {
    config.validate();
    if (config.circuit_path) {
        Circuit c = parse_circuit(read_file(*config.circuit_path));
        return {std::filesystem::path(*config.circuit_path).stem().string(), simulate(pkg, c)};
    }
    const BuiltinSource &b = *config.builtin;
    if (b.name == "fig2") {
        auto amps = fig2_amplitudes();
        return {"fig2", pkg.from_vector(amps)};
    }
    if (b.name == "ghz" || b.name == "qft") {
        if (b.n == 0) {
            throw std::invalid_argument("builtin " + b.name + " needs a qubit count");
        }
        Circuit c = b.name == "ghz" ? ghz(b.n) : qft(b.n);
        return {fmt::format("{}_{}", b.name, b.n), simulate(pkg, c)};
    }
    if (b.name == "random") {
        if (b.n == 0) {
            throw std::invalid_argument("builtin random needs a qubit count");
        }
        return {fmt::format("random_{}_{}_{}", b.n, b.depth, b.seed), simulate(pkg, random_circuit(b.n, b.depth, b.seed))};
    }
    throw std::invalid_argument("unknown builtin '" + b.name + "' (expected fig2, ghz, qft or random)");
}

std::string format_report_row(const std::string &benchmark, const ApproxReport &report) {
    return fmt::format("{},{},{},{},{},{},{}", benchmark, scheme_name(report.scheme), scheme_params(report.scheme),
                       report.orig_size, report.approx_size, format_real(report.compression),
                       format_real(report.fidelity));
}

RunOutcome execute(Package &pkg, const RunConfig &config) {
    LoadedState loaded = load_state(pkg, config);
    if (config.dump_vector && loaded.state.n > config.vector_cap) {
        throw SizeError(fmt::format("--dump-vector needs n <= {}, state has {} qubits", config.vector_cap, loaded.state.n));
    }
    if (config.dot_before) {
        write_file(*config.dot_before, to_dot(loaded.state));
    }
    ApproxResult result = approximate(pkg, loaded.state, config.scheme);
    if (config.dot_after) {
        write_file(*config.dot_after, to_dot(result.state));
    }
    if (config.dump_vector) {
        write_file(*config.dump_vector, vector_dump(result.state, config.vector_cap));
    }
    if (config.csv_path) {
        write_file(*config.csv_path, std::string(kReportHeader) + "\n" + format_report_row(loaded.benchmark, result.report) + "\n");
    }
    return {loaded.benchmark, loaded.state, std::move(result)};
}

std::vector<SweepRow> sweep(Package &pkg, const RunConfig &config, const std::vector<double> &values) {
    LoadedState loaded = load_state(pkg, config);
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        Scheme s = with_primary_param(config.scheme, v);
        ApproxResult r = approximate(pkg, loaded.state, s);
        rows.push_back({v, r.report.fidelity, r.report.compression});
    }
    return rows;
}

std::string format_sweep(const std::vector<SweepRow> &rows) {
    std::string out = std::string(kSweepHeader) + "\n";
    for (const SweepRow &r : rows) {
        out += fmt::format("{},{},{}\n", format_real(r.param), format_real(r.fidelity), format_real(r.relddsize));
    }
    return out;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Package pkg(Tolerance(), config.normalization);
        RunOutcome outcome = execute(pkg, config);
        const ApproxReport &r = outcome.result.report;
        if (config.format == OutputFormat::Csv) {
            out << kReportHeader << '\n' << format_report_row(outcome.benchmark, r) << '\n';
        } else {
            out << fmt::format("benchmark    {}\n", outcome.benchmark)
                << fmt::format("scheme       {} ({})\n", scheme_name(r.scheme), scheme_params(r.scheme))
                << fmt::format("orig size    {}\n", r.orig_size)
                << fmt::format("approx size  {}\n", r.approx_size)
                << fmt::format("compression  {}\n", format_real(r.compression))
                << fmt::format("fidelity     {}\n", format_real(r.fidelity))
                << fmt::format("eliminated   {}\n", r.eliminated);
            if (r.level) {
                out << fmt::format("level        {}\n", *r.level);
            }
        }
        return static_cast<int>(kExitOk);
    });
}

int run_sweep(const RunConfig &config, const std::vector<double> &values, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (values.empty()) {
            throw std::invalid_argument("sweep needs at least one value");
        }
        Package pkg(Tolerance(), config.normalization);
        std::string csv = format_sweep(sweep(pkg, config, values));
        if (config.csv_path) {
            write_file(*config.csv_path, csv);
        } else {
            out << csv;
        }
        return static_cast<int>(kExitOk);
    });
}

}  // namespace ddapprox
