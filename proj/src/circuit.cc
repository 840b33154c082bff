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

#include "ddapprox/circuit.h"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "ddapprox/errors.h"
#include "ddapprox/rng.h"

namespace ddapprox {

namespace {

struct Mnemonic {
    std::string_view name;
    GateKind kind;
    std::size_t qubit_args;
    bool has_angle;
};

constexpr Mnemonic kMnemonics[] = {
    {"h", GateKind::H, 1, false},     {"x", GateKind::X, 1, false},   {"y", GateKind::Y, 1, false},
    {"z", GateKind::Z, 1, false},     {"s", GateKind::S, 1, false},   {"t", GateKind::T, 1, false},
    {"p", GateKind::P, 1, true},      {"cx", GateKind::CX, 2, false}, {"cz", GateKind::CZ, 2, false},
    {"cp", GateKind::CP, 2, true},    {"swap", GateKind::SWAP, 2, false},
};

const Mnemonic &info(GateKind kind) {
    for (const auto &m : kMnemonics) {
        if (m.kind == kind) {
            return m;
        }
    }
    throw std::logic_error("unknown gate kind");
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line, const char *what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, fmt::format("malformed {} '{}'", what, tok));
    }
    return v;
}

double parse_angle(std::string_view tok, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
        throw ParseError(line, fmt::format("malformed angle '{}'", tok));
    }
    return v;
}

}  // namespace

std::string_view mnemonic(GateKind kind) {
    return info(kind).name;
}

bool is_two_qubit(GateKind kind) {
    return info(kind).qubit_args == 2;
}

void Circuit::validate() const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        std::size_t arity = is_two_qubit(g.kind) ? 2 : 1;
        for (std::size_t k = 0; k < arity; ++k) {
            if (g.qubits[k] >= n) {
                throw std::invalid_argument(
                    fmt::format("gate {} ({}): qubit {} out of range for {} qubits", i, mnemonic(g.kind), g.qubits[k], n));
            }
        }
        if (arity == 2 && g.qubits[0] == g.qubits[1]) {
            throw std::invalid_argument(fmt::format("gate {} ({}): operands coincide", i, mnemonic(g.kind)));
        }
        if (!std::isfinite(g.angle)) {
            throw std::invalid_argument(fmt::format("gate {} ({}): non-finite angle", i, mnemonic(g.kind)));
        }
    }
}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tok = tokenize(line);
        if (tok.empty()) {
            continue;
        }
        std::string op(tok[0]);
        std::transform(op.begin(), op.end(), op.begin(), [](unsigned char ch) { return std::tolower(ch); });

        if (op == "qubits") {
            if (have_header) {
                throw ParseError(line_no, "duplicate 'qubits' header");
            }
            if (tok.size() != 2) {
                throw ParseError(line_no, "expected 'qubits <n>'");
            }
            c.n = parse_index(tok[1], line_no, "qubit count");
            if (c.n == 0) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw ParseError(line_no, "missing 'qubits <n>' header");
        }
        const Mnemonic *m = nullptr;
        for (const auto &cand : kMnemonics) {
            if (cand.name == op) {
                m = &cand;
            }
        }
        if (m == nullptr) {
            throw ParseError(line_no, fmt::format("unknown gate '{}'", tok[0]));
        }
        std::size_t expected = 1 + m->qubit_args + (m->has_angle ? 1 : 0);
        if (tok.size() != expected) {
            throw ParseError(line_no, fmt::format("'{}' takes {} operand(s), got {}", m->name, expected - 1, tok.size() - 1));
        }
        Gate g;
        g.kind = m->kind;
        std::size_t next = 1;
        if (m->has_angle) {
            g.angle = parse_angle(tok[next++], line_no);
        }
        for (std::size_t k = 0; k < m->qubit_args; ++k) {
            g.qubits[k] = parse_index(tok[next++], line_no, "qubit index");
            if (g.qubits[k] >= c.n) {
                throw ParseError(line_no, fmt::format("qubit index {} out of range for {} qubits", g.qubits[k], c.n));
            }
        }
        if (m->qubit_args == 2 && g.qubits[0] == g.qubits[1]) {
            throw ParseError(line_no, "control and target must differ");
        }
        c.gates.push_back(g);
    }
    if (!have_header) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'qubits <n>' header");
    }
    return c;
}

std::string format_circuit(const Circuit &c) {
    std::string out = fmt::format("qubits {}\n", c.n);
    for (const Gate &g : c.gates) {
        out += mnemonic(g.kind);
        if (info(g.kind).has_angle) {
            out += fmt::format(" {:.17g}", g.angle);
        }
        out += fmt::format(" {}", g.qubits[0]);
        if (is_two_qubit(g.kind)) {
            out += fmt::format(" {}", g.qubits[1]);
        }
        out += '\n';
    }
    return out;
}

Circuit ghz(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("ghz: n must be at least 1");
    }
    Circuit c{n, {}};
    c.gates.push_back({GateKind::H, {0, 0}, 0.0});
    for (std::size_t q = 0; q + 1 < n; ++q) {
        c.gates.push_back({GateKind::CX, {q, q + 1}, 0.0});
    }
    return c;
}

Circuit qft(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("qft: n must be at least 1");
    }
    Circuit c{n, {}};
    for (std::size_t j = 0; j < n; ++j) {
        c.gates.push_back({GateKind::H, {j, j}, 0.0});
        for (std::size_t k = j + 1; k < n; ++k) {
            double angle = std::numbers::pi / static_cast<double>(std::uint64_t{1} << (k - j));
            c.gates.push_back({GateKind::CP, {k, j}, angle});
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        c.gates.push_back({GateKind::SWAP, {i, n - 1 - i}, 0.0});
    }
    return c;
}

Circuit random_circuit(std::size_t n, std::size_t depth, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("random_circuit: n must be at least 1");
    }
    SplitMix64 rng(seed);
    Circuit c{n, {}};
    for (std::size_t layer = 0; layer < depth; ++layer) {
        for (std::size_t q = 0; q < n; ++q) {
            switch (rng.below(3)) {
                case 0:
                    c.gates.push_back({GateKind::H, {q, q}, 0.0});
                    break;
                case 1:
                    c.gates.push_back({GateKind::T, {q, q}, 0.0});
                    break;
                default:
                    c.gates.push_back({GateKind::P, {q, q}, rng.uniform() * 2.0 * std::numbers::pi});
                    break;
            }
        }
        if (n > 1) {
            std::size_t a = rng.below(n);
            std::size_t b = rng.below(n - 1);
            if (b >= a) {
                ++b;
            }
            c.gates.push_back({GateKind::CZ, {a, b}, 0.0});
        }
    }
    return c;
}

}  // namespace ddapprox
