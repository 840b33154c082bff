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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ddapprox/dd_package.h"

namespace ddapprox {

enum class GateKind { H, X, Y, Z, S, T, P, CX, CZ, CP, SWAP };

std::string_view mnemonic(GateKind kind);
bool is_two_qubit(GateKind kind);

/// One gate. Single-qubit gates use qubits[0]; controlled gates store
/// (control, target); swap stores both operands.
struct Gate {
    GateKind kind = GateKind::H;
    std::array<std::size_t, 2> qubits{};
    double angle = 0.0;

    bool operator==(const Gate &) const = default;
};

struct Circuit {
    std::size_t n = 0;
    std::vector<Gate> gates;

    /// Throws std::invalid_argument on out-of-range or coinciding operands.
    void validate() const;
};

/// Line format, '#' starts a comment:
///   qubits <n>
///   h|x|y|z|s|t <q>
///   p <theta> <q>
///   cx|cz <control> <target>
///   cp <theta> <control> <target>
///   swap <a> <b>
/// Throws ParseError carrying the offending line number.
Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit (angles printed with 17 significant digits).
std::string format_circuit(const Circuit &c);

/// Called after every applied gate with the gate index and the current state.
using GateObserver = std::function<void(std::size_t, const StateDD &)>;

/// Applies the circuit to |0...0>.
StateDD simulate(Package &pkg, const Circuit &c, const GateObserver &observer = {});

/// Applies a single gate to `state`.
StateDD apply_gate(Package &pkg, const StateDD &state, const Gate &g);

/// The 2x2 unitary of a single-qubit gate (or of the target action of a
/// controlled gate). Row-major.
std::array<std::complex<double>, 4> gate_matrix(const Gate &g);

Circuit ghz(std::size_t n);
Circuit qft(std::size_t n);

/// `depth` layers; each layer draws one of {H, T, P(theta)} per qubit and then
/// a CZ on a random distinct pair (when n > 1). Deterministic in `seed`
/// (SplitMix64 stream: per qubit below(3) then uniform()*2pi for P; then
/// below(n) and below(n-1) for the pair).
Circuit random_circuit(std::size_t n, std::size_t depth, std::uint64_t seed);

}  // namespace ddapprox
