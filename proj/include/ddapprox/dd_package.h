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
#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ddapprox/complex_table.h"

namespace ddapprox {

struct Node;

inline constexpr int kTerminalLevel = -1;
inline constexpr std::size_t kDefaultVectorCap = 20;

/// The shared terminal node. Every edge with weight 0 points here (the
/// zero-stub), as do the nonzero edges leaving the last qubit level.
const Node *terminal_node();

/// (target, weight) handle. A whole state is a single root edge.
struct Edge {
    const Node *node = terminal_node();
    Complex w{};

    bool is_zero() const {
        return w.is_zero();
    }
    bool is_terminal() const {
        return node == terminal_node();
    }
    bool operator==(const Edge &) const = default;

    static Edge zero() {
        return {terminal_node(), ComplexTable::zero()};
    }
};

/// Decision-diagram node for one qubit level. Level 0 is the most significant
/// qubit; nonzero successors of level l target level l + 1 (or the terminal
/// when l is the last qubit).
struct Node {
    std::array<Edge, 2> succ{};
    int level = kTerminalLevel;
    /// Creation order, unique within a package; the terminal has id 0.
    std::uint64_t id = 0;

    bool is_terminal() const {
        return level == kTerminalLevel;
    }
};

/// An n-qubit pure state: root edge into level 0 (or the terminal if n == 0).
struct StateDD {
    std::size_t n = 0;
    Edge root{};
};

/// How a node's successor weights are scaled before hashing.
enum class Normalization {
    /// Divide by |w|, the magnitude of the larger weight. The larger weight
    /// keeps its phase, so sub-vectors that differ by a non-positive factor
    /// (e.g. -1) stay distinct nodes.
    PositiveReal,
    /// Divide by the larger weight itself, which becomes exactly 1. Shares
    /// sub-vectors that differ by any complex factor.
    Complex,
};

/// Owns the value table, the unique table and all nodes.
///
/// Nodes are normalised so that the successor weight of larger magnitude
/// (succ0 on ties) has magnitude exactly 1; the divisor (see Normalization)
/// moves onto the incoming edge. Nodes are only reclaimed by garbage_collect().
///
/// A package is a single-threaded unit. Read-only queries (the free functions
/// below) may run concurrently on a package nobody is mutating.
class Package {
   public:
    explicit Package(Tolerance tol = Tolerance(), Normalization normalization = Normalization::PositiveReal);
    Package(const Package &) = delete;
    Package &operator=(const Package &) = delete;
    Package(Package &&) = default;
    Package &operator=(Package &&) = default;

    ComplexTable &complex_table() {
        return complex_;
    }
    Normalization normalization() const {
        return normalization_;
    }

    /// Normalised, deduplicated node for (level, succ0, succ1). Returns the
    /// zero-stub when both successors are zero.
    Edge make_node(int level, Edge succ0, Edge succ1);

    /// Edge into the terminal carrying `w` (the zero-stub if w rounds to 0).
    Edge terminal_edge(std::complex<double> w);

    /// e with its weight multiplied by `factor`.
    Edge scale(Edge e, Complex factor);
    Edge scale(Edge e, std::complex<double> factor) {
        return scale(e, complex_.lookup(factor));
    }

    /// Pointwise sum of two sub-vectors rooted at the same level.
    Edge add(Edge a, Edge b);

    /// Builds the diagram of a dense vector of length 2^n. The norm must be
    /// within 1e-6 of 1; the input is then renormalised exactly.
    StateDD from_vector(std::span<const std::complex<double>> amps);

    /// |0...0> on n qubits.
    StateDD zero_state(std::size_t n);

    /// Divides the root weight by the state's norm. Throws ZeroStateError on
    /// a state with no mass.
    StateDD renormalize(const StateDD &dd);

    /// Drops every node not reachable from `roots` and clears compute caches.
    /// Edges into dropped nodes become dangling.
    void garbage_collect(std::span<const Edge> roots);

    /// Number of nodes currently registered in the unique table.
    std::size_t live_nodes() const {
        return unique_.size();
    }

   private:
    struct NodeKey {
        int level;
        const Node *n0;
        Complex w0;
        const Node *n1;
        Complex w1;
        bool operator==(const NodeKey &) const = default;
    };
    struct NodeKeyHash {
        std::size_t operator()(const NodeKey &k) const;
    };
    struct AddKey {
        Edge a;
        Edge b;
        bool operator==(const AddKey &) const = default;
    };
    struct AddKeyHash {
        std::size_t operator()(const AddKey &k) const;
    };

    Edge build(std::span<const std::complex<double>> amps, int level);

    ComplexTable complex_;
    Normalization normalization_;
    std::deque<Node> storage_;
    std::vector<Node *> free_;
    std::uint64_t next_id_ = 1;
    std::unordered_map<NodeKey, Node *, NodeKeyHash> unique_;
    std::unordered_map<AddKey, Edge, AddKeyHash> add_cache_;
};

/// Path-product expansion to a dense vector (index bit n-1-q holds qubit q).
/// Throws SizeError if dd.n > max_qubits.
std::vector<std::complex<double>> to_vector(const StateDD &dd,
                                            std::size_t max_qubits = kDefaultVectorCap);

/// Amplitude of a basis state; bits[0] is qubit 0. Throws
/// std::invalid_argument on a bitstring of the wrong length or alphabet.
std::complex<double> amplitude(const StateDD &dd, std::string_view bits);

/// Number of nonterminal nodes reachable from the root.
std::size_t size(const StateDD &dd);

/// Sum of |amplitude|^2 over all basis states.
double squared_norm(const StateDD &dd);

/// Nodes reachable from the root, grouped by level, each level in
/// first-visit order of a depth-first walk (succ0 before succ1).
std::vector<std::vector<const Node *>> nodes_by_level(const StateDD &dd);

/// Graphviz rendering: one node per DD node labelled q<level>, weights on
/// edges (omitted when 1), zero-stubs as "0" leaves, terminal as a box.
std::string to_dot(const StateDD &dd);

}  // namespace ddapprox
