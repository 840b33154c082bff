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

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "ddapprox/circuit.h"

namespace ddapprox {

namespace {

using cd = std::complex<double>;

// Applies a 2x2 matrix at one level, optionally only on the control = 1
// cofactor. Results are memoised per node with the incoming weight factored out.
class LevelApplier {
   public:
    LevelApplier(Package &pkg, int target, const std::array<cd, 4> &u, std::optional<int> control)
        : pkg_(pkg), target_(target), control_(control) {
        for (std::size_t i = 0; i < 4; ++i) {
            u_[i] = pkg.complex_table().lookup(u[i]);
        }
    }

    Edge apply(const Edge &e) {
        if (e.is_zero()) {
            return Edge::zero();
        }
        if (e.is_terminal()) {
            throw std::logic_error("gate target lies below the last qubit level");
        }
        return pkg_.scale(apply_node(e.node), e.w);
    }

   private:
    Edge apply_node(const Node *n) {
        if (auto it = memo_.find(n); it != memo_.end()) {
            return it->second;
        }
        const int level = n->level;
        const Edge &e0 = n->succ[0];
        const Edge &e1 = n->succ[1];
        Edge result;
        if (control_ && *control_ < target_ && level == *control_) {
            result = pkg_.make_node(level, e0, apply(e1));
        } else if (level == target_) {
            if (control_ && *control_ > target_) {
                Edge p00 = project(e0, 0), p01 = project(e0, 1);
                Edge p10 = project(e1, 0), p11 = project(e1, 1);
                Edge lo = pkg_.add(p00, combine(p01, p11, 0));
                Edge hi = pkg_.add(p10, combine(p01, p11, 1));
                result = pkg_.make_node(level, lo, hi);
            } else {
                result = pkg_.make_node(level, combine(e0, e1, 0), combine(e0, e1, 1));
            }
        } else if (level < target_) {
            result = pkg_.make_node(level, apply(e0), apply(e1));
        } else {
            throw std::logic_error("level applier walked past the target level");
        }
        memo_.emplace(n, result);
        return result;
    }

    // Row `row` of U applied to (a, b).
    Edge combine(const Edge &a, const Edge &b, int row) {
        return pkg_.add(pkg_.scale(a, u_[2 * row]), pkg_.scale(b, u_[2 * row + 1]));
    }

    // Keeps only the cofactor with control qubit == bit.
    Edge project(const Edge &e, int bit) {
        if (e.is_zero()) {
            return Edge::zero();
        }
        auto &memo = project_memo_[bit];
        const Node *n = e.node;
        Edge r;
        if (auto it = memo.find(n); it != memo.end()) {
            r = it->second;
        } else {
            if (n->level == *control_) {
                r = bit == 0 ? pkg_.make_node(n->level, n->succ[0], Edge::zero())
                             : pkg_.make_node(n->level, Edge::zero(), n->succ[1]);
            } else {
                r = pkg_.make_node(n->level, project(n->succ[0], bit), project(n->succ[1], bit));
            }
            memo.emplace(n, r);
        }
        return pkg_.scale(r, e.w);
    }

    Package &pkg_;
    int target_;
    std::array<Complex, 4> u_;
    std::optional<int> control_;
    std::unordered_map<const Node *, Edge> memo_;
    std::array<std::unordered_map<const Node *, Edge>, 2> project_memo_;
};

StateDD apply_level(Package &pkg, const StateDD &state, int target, const std::array<cd, 4> &u,
                    std::optional<int> control) {
    LevelApplier applier(pkg, target, u, control);
    return {state.n, applier.apply(state.root)};
}

}  // namespace

std::array<cd, 4> gate_matrix(const Gate &g) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::numbers::sqrt2;
    switch (g.kind) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::X:
        case GateKind::CX:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -1i, 1i, 0.0};
        case GateKind::Z:
        case GateKind::CZ:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S:
            return {1.0, 0.0, 0.0, 1i};
        case GateKind::T:
            return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
        case GateKind::P:
        case GateKind::CP:
            return {1.0, 0.0, 0.0, std::polar(1.0, g.angle)};
        case GateKind::SWAP:
            break;
    }
    throw std::invalid_argument("gate_matrix: swap has no single 2x2 action");
}

StateDD apply_gate(Package &pkg, const StateDD &state, const Gate &g) {
    auto level = [](std::size_t q) { return static_cast<int>(q); };
    switch (g.kind) {
        case GateKind::SWAP: {
            Gate cx{GateKind::CX, g.qubits, 0.0};
            Gate xc{GateKind::CX, {g.qubits[1], g.qubits[0]}, 0.0};
            return apply_gate(pkg, apply_gate(pkg, apply_gate(pkg, state, cx), xc), cx);
        }
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::CP:
            return apply_level(pkg, state, level(g.qubits[1]), gate_matrix(g), level(g.qubits[0]));
        default:
            return apply_level(pkg, state, level(g.qubits[0]), gate_matrix(g), std::nullopt);
    }
}

StateDD simulate(Package &pkg, const Circuit &c, const GateObserver &observer) {
    c.validate();
    StateDD state = pkg.zero_state(c.n);
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        state = apply_gate(pkg, state, c.gates[i]);
        if (observer) {
            observer(i, state);
        }
    }
    return state;
}

}  // namespace ddapprox
