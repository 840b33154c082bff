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
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "ddapprox/analysis.h"
#include "ddapprox/dd_package.h"

namespace ddapprox {

using NodeSet = std::unordered_set<const Node *>;

/// Keep exactly the nodes visited by L sampled walks.
struct SamplingScheme {
    std::uint64_t traversals = 1;
    std::uint64_t seed = 0;
};

/// Keep nodes visited more than tau times out of L walks.
struct ThresholdScheme {
    std::uint64_t traversals = 1;
    std::uint64_t tau = 0;
    std::uint64_t seed = 0;
};

/// Which level the target-fidelity scheme eliminates from. `best` tries every
/// level and keeps the smallest result (ties go to the smaller level).
struct LevelStrategy {
    std::optional<std::size_t> fixed;

    static LevelStrategy best() {
        return {};
    }
    static LevelStrategy at(std::size_t level) {
        return {level};
    }
    bool operator==(const LevelStrategy &) const = default;
};

/// Drop the lightest nodes of one level while their mass stays <= 1 - f.
struct TargetFidelityScheme {
    double fidelity = 1.0;
    LevelStrategy level{};
};

/// Apply the target-fidelity selection to every level in turn.
struct PerLevelScheme {
    double fidelity = 1.0;
};

using Scheme = std::variant<SamplingScheme, ThresholdScheme, TargetFidelityScheme, PerLevelScheme>;

/// Throws std::invalid_argument if L < 1, tau >= L, or f outside (0, 1].
void validate(const Scheme &scheme);

/// "sampling", "threshold", "target-fidelity" or "per-level".
std::string scheme_name(const Scheme &scheme);

/// Comma-free parameter summary, e.g. "L=1000;tau=3" or "f=0.5;level=best".
std::string scheme_params(const Scheme &scheme);

struct ApproxReport {
    Scheme scheme;
    std::size_t orig_size = 0;
    std::size_t approx_size = 0;
    /// approx_size / orig_size; smaller is better.
    double compression = 1.0;
    /// fidelity(original, approximation).
    double fidelity = 1.0;
    /// Number of nodes replaced by zero-stubs.
    std::size_t eliminated = 0;
    /// Level the target-fidelity scheme eliminated from, if any.
    std::optional<std::size_t> level;
};

struct ApproxResult {
    StateDD state;
    ApproxReport report;
};

/// Rebuilds `dd` with every edge into a doomed node replaced by the
/// zero-stub, then renormalises. `dd` itself is left untouched. Throws
/// ZeroStateError if no mass survives.
StateDD eliminate(Package &pkg, const StateDD &dd, const NodeSet &doomed);

/// Reachable nodes visited at most `tau` times.
NodeSet doomed_by_visits(const StateDD &dd, const VisitCounts &counts, std::uint64_t tau);

/// Nodes of `level_nodes` in ascending (contribution, id) order, taking the
/// longest prefix whose summed contribution stays <= budget.
NodeSet lightest_prefix(const std::vector<const Node *> &level_nodes, const ContributionMap &contribution, double budget);

ApproxResult approx_sampling(Package &pkg, const StateDD &dd, std::uint64_t traversals, std::uint64_t seed);

ApproxResult approx_threshold(Package &pkg, const StateDD &dd, std::uint64_t traversals, std::uint64_t tau,
                              std::uint64_t seed);

/// Threshold selection on externally supplied visit counts.
ApproxResult approx_threshold(Package &pkg, const StateDD &dd, const VisitCounts &counts, std::uint64_t tau);

/// Attained fidelity is at least f. Returns the input unchanged (eliminated
/// == 0) when no level has an eliminable node.
ApproxResult approx_target_fidelity(Package &pkg, const StateDD &dd, double f,
                                    LevelStrategy strategy = LevelStrategy::best());

/// Runs the single-level selection at every level from the top, each time on
/// the contributions of the state left by the levels above. Attained
/// fidelity is at least f^(n-1).
ApproxResult approx_per_level(Package &pkg, const StateDD &dd, double f);

ApproxResult approximate(Package &pkg, const StateDD &dd, const Scheme &scheme);

}  // namespace ddapprox
