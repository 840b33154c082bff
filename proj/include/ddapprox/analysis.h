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

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ddapprox/dd_package.h"

namespace ddapprox {

template <typename T>
using NodeMap = std::unordered_map<const Node *, T>;

/// Summed probability of all node -> terminal paths, excluding the weight of
/// the edge into the node. The terminal maps to 1.
using UpstreamMap = NodeMap<double>;

/// Summed probability of all root -> node paths, including the root weight
/// and every edge weight on the way into the node.
using DownstreamMap = NodeMap<double>;

/// downstream * upstream: the probability mass flowing through a node. On a
/// unit-norm state the nodes of each level sum to 1.
using ContributionMap = NodeMap<double>;

/// Per-node visit counts of root -> terminal walks. Unvisited nodes are absent.
struct VisitCounts {
    std::uint64_t traversals = 0;
    std::uint64_t seed = 0;
    NodeMap<std::uint64_t> counts;

    std::uint64_t operator[](const Node *n) const {
        auto it = counts.find(n);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Depth-first, memoised. Includes the terminal.
UpstreamMap upstream(const StateDD &dd);

/// Level-order sweep from the root.
DownstreamMap downstream(const StateDD &dd);

ContributionMap contributions(const StateDD &dd);
ContributionMap contributions(const UpstreamMap &up, const DownstreamMap &down);

/// Probability of taking succ[1] at `node`: |w1|^2 up(succ1) / up(node).
/// Exactly 0 or 1 when one side is a zero-stub.
double branch_one_probability(const Node *node, const UpstreamMap &up);

/// L independent walks from the root, branching by
/// branch_one_probability(). One SplitMix64(seed) stream drives all walks in
/// order; each step consumes one uniform() draw, skipped when one side is a
/// zero-stub. Counts are incremented once per walk per visited node.
VisitCounts sample_paths(const StateDD &dd, std::uint64_t traversals, std::uint64_t seed);
VisitCounts sample_paths(const StateDD &dd, const UpstreamMap &up, std::uint64_t traversals,
                         std::uint64_t seed);

/// Basis-state index (qubit 0 is the most significant bit) reached by each
/// walk. Same stream as sample_paths, so the walks coincide for equal seeds.
std::vector<std::uint64_t> sample_bitstrings(const StateDD &dd, std::uint64_t traversals,
                                             std::uint64_t seed);

}  // namespace ddapprox
