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

// Dense state-vector reference used only by the tests. Nothing here calls
// into the decision-diagram code paths it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "ddapprox/circuit.h"

namespace ddapprox::oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;

inline double norm2(const Vec &v) {
    double s = 0.0;
    for (const cd &a : v) {
        s += std::norm(a);
    }
    return s;
}

inline Vec normalized(Vec v) {
    const double n = std::sqrt(norm2(v));
    for (cd &a : v) {
        a /= n;
    }
    return v;
}

/// Complex Gaussian entries, normalised.
inline Vec random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(std::size_t{1} << n);
    for (cd &a : v) {
        a = {g(rng), g(rng)};
    }
    return normalized(std::move(v));
}

/// Random state with a random subset of amplitudes forced to zero, so the
/// diagram has zero-stubs and sharing.
inline Vec random_sparse_state(std::size_t n, std::mt19937_64 &rng, double zero_prob = 0.4) {
    Vec v = random_state(n, rng);
    std::bernoulli_distribution drop(zero_prob);
    for (cd &a : v) {
        if (drop(rng)) {
            a = 0.0;
        }
    }
    if (norm2(v) == 0.0) {
        v[0] = 1.0;
    }
    return normalized(std::move(v));
}

inline cd dot(const Vec &a, const Vec &b) {
    cd s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

inline double max_abs_diff(const Vec &a, const Vec &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

/// Bit of qubit q in basis index i (qubit 0 is the most significant).
inline bool bit(std::size_t i, std::size_t q, std::size_t n) {
    return (i >> (n - 1 - q)) & 1U;
}

inline void apply_1q(Vec &v, std::size_t n, std::size_t q, const cd (&u)[2][2]) {
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i & stride) {
            continue;
        }
        cd a = v[i], b = v[i | stride];
        v[i] = u[0][0] * a + u[0][1] * b;
        v[i | stride] = u[1][0] * a + u[1][1] * b;
    }
}

inline void apply_controlled(Vec &v, std::size_t n, std::size_t c, std::size_t t, const cd (&u)[2][2]) {
    const std::size_t cs = std::size_t{1} << (n - 1 - c);
    const std::size_t ts = std::size_t{1} << (n - 1 - t);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(i & cs) || (i & ts)) {
            continue;
        }
        cd a = v[i], b = v[i | ts];
        v[i] = u[0][0] * a + u[0][1] * b;
        v[i | ts] = u[1][0] * a + u[1][1] * b;
    }
}

inline void apply(Vec &v, std::size_t n, const Gate &g) {
    using namespace std::complex_literals;
    const double r = std::sqrt(0.5);
    const cd H[2][2] = {{r, r}, {r, -r}};
    const cd X[2][2] = {{0, 1}, {1, 0}};
    const cd Y[2][2] = {{0, -1i}, {1i, 0}};
    const cd Z[2][2] = {{1, 0}, {0, -1}};
    const cd S[2][2] = {{1, 0}, {0, 1i}};
    const cd T[2][2] = {{1, 0}, {0, std::exp(1i * (std::numbers::pi / 4))}};
    const cd P[2][2] = {{1, 0}, {0, std::exp(1i * g.angle)}};
    const std::size_t a = g.qubits[0], b = g.qubits[1];
    switch (g.kind) {
        case GateKind::H: apply_1q(v, n, a, H); break;
        case GateKind::X: apply_1q(v, n, a, X); break;
        case GateKind::Y: apply_1q(v, n, a, Y); break;
        case GateKind::Z: apply_1q(v, n, a, Z); break;
        case GateKind::S: apply_1q(v, n, a, S); break;
        case GateKind::T: apply_1q(v, n, a, T); break;
        case GateKind::P: apply_1q(v, n, a, P); break;
        case GateKind::CX: apply_controlled(v, n, a, b, X); break;
        case GateKind::CZ: apply_controlled(v, n, a, b, Z); break;
        case GateKind::CP: apply_controlled(v, n, a, b, P); break;
        case GateKind::SWAP:
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::size_t j = i;
                if (bit(i, a, n) != bit(i, b, n)) {
                    j ^= (std::size_t{1} << (n - 1 - a)) | (std::size_t{1} << (n - 1 - b));
                }
                if (j > i) {
                    std::swap(v[i], v[j]);
                }
            }
            break;
    }
}

inline Vec simulate(const Circuit &c) {
    Vec v(std::size_t{1} << c.n);
    v[0] = 1.0;
    for (const Gate &g : c.gates) {
        apply(v, c.n, g);
    }
    return v;
}

/// A random circuit drawn independently of random_circuit(), covering every
/// gate kind.
inline Circuit random_mixed_circuit(std::size_t n, std::size_t depth, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind(0, n > 1 ? 10 : 6);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    Circuit c{n, {}};
    for (std::size_t d = 0; d < depth; ++d) {
        for (std::size_t q = 0; q < n; ++q) {
            Gate g;
            g.kind = static_cast<GateKind>(kind(rng));
            g.qubits = {q, q};
            if (is_two_qubit(g.kind)) {
                do {
                    g.qubits[1] = qubit(rng);
                } while (g.qubits[1] == q);
            }
            if (g.kind == GateKind::P || g.kind == GateKind::CP) {
                g.angle = angle(rng);
            }
            c.gates.push_back(g);
        }
    }
    return c;
}

/// Zero every amplitude outside `keep`, then rescale to unit norm.
inline Vec project_and_rescale(const Vec &v, const std::vector<bool> &keep) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (keep[i]) {
            out[i] = v[i];
        }
    }
    return normalized(std::move(out));
}

}  // namespace ddapprox::oracle
