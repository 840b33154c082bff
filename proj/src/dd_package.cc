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

#include "ddapprox/dd_package.h"

#include <bit>
#include <cassert>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ddapprox/errors.h"

namespace ddapprox {

namespace {

const Node g_terminal{};

std::size_t mix(std::size_t h, std::uint64_t v) {
    v *= 0x9E3779B97F4A7C15ULL;
    v ^= v >> 29;
    return h ^ (static_cast<std::size_t>(v) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
}

std::size_t hash_complex(std::size_t h, Complex c) {
    h = mix(h, std::bit_cast<std::uint64_t>(c.re));
    return mix(h, std::bit_cast<std::uint64_t>(c.im));
}

std::size_t hash_edge(std::size_t h, const Edge &e) {
    h = mix(h, reinterpret_cast<std::uintptr_t>(e.node));
    return hash_complex(h, e.w);
}

}  // namespace

const Node *terminal_node() {
    return &g_terminal;
}

std::size_t Package::NodeKeyHash::operator()(const NodeKey &k) const {
    std::size_t h = mix(0, static_cast<std::uint64_t>(k.level));
    h = hash_edge(h, Edge{k.n0, k.w0});
    return hash_edge(h, Edge{k.n1, k.w1});
}

std::size_t Package::AddKeyHash::operator()(const AddKey &k) const {
    return hash_edge(hash_edge(0, k.a), k.b);
}

Package::Package(Tolerance tol, Normalization normalization) : complex_(tol), normalization_(normalization) {
}

Edge Package::make_node(int level, Edge succ0, Edge succ1) {
    if (succ0.is_zero()) {
        succ0 = Edge::zero();
    }
    if (succ1.is_zero()) {
        succ1 = Edge::zero();
    }
    if (succ0.is_zero() && succ1.is_zero()) {
        return Edge::zero();
    }
    assert(succ0.is_zero() || succ0.is_terminal() || succ0.node->level == level + 1);
    assert(succ1.is_zero() || succ1.is_terminal() || succ1.node->level == level + 1);

    // Divide by the larger weight (succ0 on ties), or by its magnitude.
    Edge &big = succ1.w.sqr_mag() > succ0.w.sqr_mag() ? succ1 : succ0;
    Edge &other = &big == &succ0 ? succ1 : succ0;
    Complex divisor = normalization_ == Normalization::Complex ? big.w : complex_.lookup(big.w.mag(), 0.0);
    if (!divisor.is_one()) {
        big.w = normalization_ == Normalization::Complex ? ComplexTable::one() : complex_.div(big.w, divisor);
        if (!other.is_zero()) {
            other.w = complex_.div(other.w, divisor);
            if (other.w.is_zero()) {
                other = Edge::zero();
            }
        }
    }

    NodeKey key{level, succ0.node, succ0.w, succ1.node, succ1.w};
    auto it = unique_.find(key);
    Node *node;
    if (it != unique_.end()) {
        node = it->second;
    } else {
        if (free_.empty()) {
            node = &storage_.emplace_back();
        } else {
            node = free_.back();
            free_.pop_back();
        }
        node->succ = {succ0, succ1};
        node->level = level;
        node->id = next_id_++;
        unique_.emplace(key, node);
    }
    return {node, divisor};
}

Edge Package::terminal_edge(std::complex<double> w) {
    Complex c = complex_.lookup(w);
    if (c.is_zero()) {
        return Edge::zero();
    }
    return {terminal_node(), c};
}

Edge Package::scale(Edge e, Complex factor) {
    if (e.is_zero() || factor.is_zero()) {
        return Edge::zero();
    }
    Complex w = complex_.mul(e.w, factor);
    if (w.is_zero()) {
        return Edge::zero();
    }
    return {e.node, w};
}

Edge Package::add(Edge a, Edge b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.node == b.node) {
        Complex w = complex_.add(a.w, b.w);
        return w.is_zero() ? Edge::zero() : Edge{a.node, w};
    }
    if (a.node->level != b.node->level) {
        throw std::logic_error("add: operands at different levels");
    }
    AddKey key{a, b};
    if (auto it = add_cache_.find(key); it != add_cache_.end()) {
        return it->second;
    }
    std::array<Edge, 2> out;
    for (int i = 0; i < 2; ++i) {
        out[i] = add(scale(a.node->succ[i], a.w), scale(b.node->succ[i], b.w));
    }
    Edge result = make_node(a.node->level, out[0], out[1]);
    add_cache_.emplace(key, result);
    return result;
}

Edge Package::build(std::span<const std::complex<double>> amps, int level) {
    if (amps.size() == 1) {
        return terminal_edge(amps[0]);
    }
    std::size_t half = amps.size() / 2;
    Edge lo = build(amps.first(half), level + 1);
    Edge hi = build(amps.subspan(half), level + 1);
    return make_node(level, lo, hi);
}

StateDD Package::from_vector(std::span<const std::complex<double>> amps) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw std::invalid_argument("state vector length must be a power of two, got " +
                                    std::to_string(amps.size()));
    }
    double norm2 = 0.0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NumericDomainError("state vector contains a non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (norm2 == 0.0) {
        throw ZeroStateError("cannot build a diagram from the zero vector");
    }
    double norm = std::sqrt(norm2);
    if (std::abs(norm - 1.0) > 1e-6) {
        throw std::invalid_argument("state vector norm " + std::to_string(norm) +
                                    " is not within 1e-6 of 1");
    }
    std::vector<std::complex<double>> scaled(amps.begin(), amps.end());
    for (auto &a : scaled) {
        a /= norm;
    }
    StateDD dd;
    dd.n = static_cast<std::size_t>(std::countr_zero(amps.size()));
    dd.root = build(scaled, 0);
    return dd;
}

StateDD Package::zero_state(std::size_t n) {
    Edge e{terminal_node(), ComplexTable::one()};
    for (std::size_t q = n; q-- > 0;) {
        e = make_node(static_cast<int>(q), e, Edge::zero());
    }
    return {n, e};
}

StateDD Package::renormalize(const StateDD &dd) {
    double norm2 = squared_norm(dd);
    if (!(norm2 > 0.0)) {
        throw ZeroStateError("cannot renormalize a state with zero norm");
    }
    double norm = std::sqrt(norm2);
    StateDD out = dd;
    out.root.w = complex_.lookup(dd.root.w.re / norm, dd.root.w.im / norm);
    if (out.root.w.is_zero()) {
        throw ZeroStateError("renormalized root weight underflowed to zero");
    }
    return out;
}

void Package::garbage_collect(std::span<const Edge> roots) {
    std::unordered_set<const Node *> live;
    std::vector<const Node *> stack;
    for (const Edge &r : roots) {
        if (!r.is_terminal()) {
            stack.push_back(r.node);
        }
    }
    while (!stack.empty()) {
        const Node *n = stack.back();
        stack.pop_back();
        if (!live.insert(n).second) {
            continue;
        }
        for (const Edge &s : n->succ) {
            if (!s.is_terminal()) {
                stack.push_back(s.node);
            }
        }
    }
    for (auto it = unique_.begin(); it != unique_.end();) {
        if (live.contains(it->second)) {
            ++it;
        } else {
            free_.push_back(it->second);
            it = unique_.erase(it);
        }
    }
    add_cache_.clear();
}

std::vector<std::complex<double>> to_vector(const StateDD &dd, std::size_t max_qubits) {
    if (dd.n > max_qubits) {
        throw SizeError("to_vector: " + std::to_string(dd.n) + " qubits exceeds the cap of " +
                        std::to_string(max_qubits));
    }
    std::vector<std::complex<double>> out(std::size_t{1} << dd.n);
    std::function<void(const Edge &, std::complex<double>, std::size_t, std::size_t)> fill =
        [&](const Edge &e, std::complex<double> acc, std::size_t offset, std::size_t len) {
            if (e.is_zero()) {
                return;
            }
            acc *= e.w.value();
            if (e.is_terminal()) {
                out[offset] = acc;
                return;
            }
            std::size_t half = len / 2;
            fill(e.node->succ[0], acc, offset, half);
            fill(e.node->succ[1], acc, offset + half, half);
        };
    fill(dd.root, 1.0, 0, out.size());
    return out;
}

std::complex<double> amplitude(const StateDD &dd, std::string_view bits) {
    if (bits.size() != dd.n) {
        throw std::invalid_argument("amplitude: expected " + std::to_string(dd.n) +
                                    " bits, got " + std::to_string(bits.size()));
    }
    std::complex<double> acc = dd.root.w.value();
    const Edge *e = &dd.root;
    for (char b : bits) {
        if (b != '0' && b != '1') {
            throw std::invalid_argument("amplitude: bitstring must contain only 0 and 1");
        }
        if (e->is_zero()) {
            return 0.0;
        }
        e = &e->node->succ[b == '1' ? 1 : 0];
        acc *= e->w.value();
    }
    return e->is_zero() ? std::complex<double>{} : acc;
}

std::vector<std::vector<const Node *>> nodes_by_level(const StateDD &dd) {
    std::vector<std::vector<const Node *>> levels(dd.n);
    std::unordered_set<const Node *> seen;
    std::function<void(const Edge &)> visit = [&](const Edge &e) {
        if (e.is_zero() || e.is_terminal() || !seen.insert(e.node).second) {
            return;
        }
        levels.at(static_cast<std::size_t>(e.node->level)).push_back(e.node);
        visit(e.node->succ[0]);
        visit(e.node->succ[1]);
    };
    visit(dd.root);
    return levels;
}

std::size_t size(const StateDD &dd) {
    std::size_t total = 0;
    for (const auto &level : nodes_by_level(dd)) {
        total += level.size();
    }
    return total;
}

double squared_norm(const StateDD &dd) {
    std::unordered_map<const Node *, double> memo;
    std::function<double(const Node *)> mass = [&](const Node *n) -> double {
        if (n->is_terminal()) {
            return 1.0;
        }
        if (auto it = memo.find(n); it != memo.end()) {
            return it->second;
        }
        double m = 0.0;
        for (const Edge &s : n->succ) {
            if (!s.is_zero()) {
                m += s.w.sqr_mag() * mass(s.node);
            }
        }
        memo.emplace(n, m);
        return m;
    };
    if (dd.root.is_zero()) {
        return 0.0;
    }
    return dd.root.w.sqr_mag() * mass(dd.root.node);
}

}  // namespace ddapprox
