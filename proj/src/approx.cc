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

#include "ddapprox/approx.h"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "ddapprox/errors.h"
#include "ddapprox/fidelity.h"

namespace ddapprox {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_fidelity(double f) {
    if (!(f > 0.0 && f <= 1.0)) {
        throw std::invalid_argument(fmt::format("target fidelity must lie in (0, 1], got {}", f));
    }
}

ApproxResult finish(const StateDD &original, StateDD approx, Scheme scheme, std::size_t eliminated,
                    std::optional<std::size_t> level = std::nullopt) {
    ApproxReport report;
    report.scheme = std::move(scheme);
    report.orig_size = size(original);
    report.approx_size = size(approx);
    report.compression = report.orig_size == 0 ? 1.0
                                               : static_cast<double>(report.approx_size) /
                                                     static_cast<double>(report.orig_size);
    report.fidelity = approx.root == original.root ? 1.0 : fidelity(original, approx);
    report.eliminated = eliminated;
    report.level = level;
    return {approx, std::move(report)};
}

StateDD eliminate_or_keep(Package &pkg, const StateDD &dd, const NodeSet &doomed) {
    return doomed.empty() ? dd : eliminate(pkg, dd, doomed);
}

}  // namespace

void validate(const Scheme &scheme) {
    std::visit(Overloaded{
                   [](const SamplingScheme &s) {
                       if (s.traversals < 1) {
                           throw std::invalid_argument("sampling: traversal count must be at least 1");
                       }
                   },
                   [](const ThresholdScheme &s) {
                       if (s.traversals < 1) {
                           throw std::invalid_argument("threshold: traversal count must be at least 1");
                       }
                       if (s.tau >= s.traversals) {
                           throw std::invalid_argument(
                               fmt::format("threshold: tau ({}) must be below the traversal count ({})", s.tau,
                                           s.traversals));
                       }
                   },
                   [](const TargetFidelityScheme &s) { check_fidelity(s.fidelity); },
                   [](const PerLevelScheme &s) { check_fidelity(s.fidelity); },
               },
               scheme);
}

std::string scheme_name(const Scheme &scheme) {
    return std::visit(Overloaded{
                          [](const SamplingScheme &) { return std::string("sampling"); },
                          [](const ThresholdScheme &) { return std::string("threshold"); },
                          [](const TargetFidelityScheme &) { return std::string("target-fidelity"); },
                          [](const PerLevelScheme &) { return std::string("per-level"); },
                      },
                      scheme);
}

std::string scheme_params(const Scheme &scheme) {
    return std::visit(
        Overloaded{
            [](const SamplingScheme &s) { return fmt::format("L={};seed={}", s.traversals, s.seed); },
            [](const ThresholdScheme &s) {
                return fmt::format("L={};tau={};seed={}", s.traversals, s.tau, s.seed);
            },
            [](const TargetFidelityScheme &s) {
                return fmt::format("f={};level={}", s.fidelity,
                                   s.level.fixed ? std::to_string(*s.level.fixed) : std::string("best"));
            },
            [](const PerLevelScheme &s) { return fmt::format("f={}", s.fidelity); },
        },
        scheme);
}

StateDD eliminate(Package &pkg, const StateDD &dd, const NodeSet &doomed) {
    std::unordered_map<const Node *, Edge> rebuilt;
    std::function<Edge(const Edge &)> rebuild = [&](const Edge &e) -> Edge {
        if (e.is_zero() || e.is_terminal()) {
            return e;
        }
        if (doomed.contains(e.node)) {
            return Edge::zero();
        }
        auto it = rebuilt.find(e.node);
        if (it == rebuilt.end()) {
            const Node *n = e.node;
            Edge lo = rebuild(n->succ[0]);
            Edge hi = rebuild(n->succ[1]);
            it = rebuilt.emplace(n, pkg.make_node(n->level, lo, hi)).first;
        }
        return pkg.scale(it->second, e.w);
    };
    StateDD out{dd.n, rebuild(dd.root)};
    if (out.root.is_zero()) {
        throw ZeroStateError("elimination removed every path of the state");
    }
    return pkg.renormalize(out);
}

NodeSet doomed_by_visits(const StateDD &dd, const VisitCounts &counts, std::uint64_t tau) {
    NodeSet doomed;
    for (const auto &level : nodes_by_level(dd)) {
        for (const Node *n : level) {
            if (counts[n] <= tau) {
                doomed.insert(n);
            }
        }
    }
    return doomed;
}

NodeSet lightest_prefix(const std::vector<const Node *> &level_nodes, const ContributionMap &contribution,
                        double budget) {
    std::vector<std::pair<double, const Node *>> order;
    order.reserve(level_nodes.size());
    for (const Node *n : level_nodes) {
        order.emplace_back(contribution.at(n), n);
    }
    std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        return a.first != b.first ? a.first < b.first : a.second->id < b.second->id;
    });
    NodeSet doomed;
    double sum = 0.0;
    for (const auto &[c, n] : order) {
        sum += c;
        if (sum > budget) {
            break;
        }
        doomed.insert(n);
    }
    return doomed;
}

ApproxResult approx_sampling(Package &pkg, const StateDD &dd, std::uint64_t traversals, std::uint64_t seed) {
    SamplingScheme scheme{traversals, seed};
    validate(scheme);
    VisitCounts counts = sample_paths(dd, traversals, seed);
    NodeSet doomed = doomed_by_visits(dd, counts, 0);
    return finish(dd, eliminate_or_keep(pkg, dd, doomed), scheme, doomed.size());
}

ApproxResult approx_threshold(Package &pkg, const StateDD &dd, std::uint64_t traversals, std::uint64_t tau,
                              std::uint64_t seed) {
    validate(ThresholdScheme{traversals, tau, seed});
    return approx_threshold(pkg, dd, sample_paths(dd, traversals, seed), tau);
}

ApproxResult approx_threshold(Package &pkg, const StateDD &dd, const VisitCounts &counts, std::uint64_t tau) {
    ThresholdScheme scheme{counts.traversals, tau, counts.seed};
    validate(scheme);
    NodeSet doomed = doomed_by_visits(dd, counts, tau);
    return finish(dd, eliminate_or_keep(pkg, dd, doomed), scheme, doomed.size());
}

ApproxResult approx_target_fidelity(Package &pkg, const StateDD &dd, double f, LevelStrategy strategy) {
    TargetFidelityScheme scheme{f, strategy};
    validate(scheme);
    const auto levels = nodes_by_level(dd);
    if (strategy.fixed && *strategy.fixed >= dd.n) {
        throw std::invalid_argument(fmt::format("level {} out of range for {} qubits", *strategy.fixed, dd.n));
    }
    const ContributionMap contribution = contributions(dd);
    const double budget = 1.0 - f;

    std::vector<std::size_t> candidates;
    if (strategy.fixed) {
        candidates.push_back(*strategy.fixed);
    } else {
        for (std::size_t l = 0; l < levels.size(); ++l) {
            candidates.push_back(l);
        }
    }

    std::optional<StateDD> best;
    std::size_t best_size = 0;
    std::size_t best_level = 0;
    std::size_t best_eliminated = 0;
    for (std::size_t l : candidates) {
        NodeSet doomed = lightest_prefix(levels[l], contribution, budget);
        if (doomed.empty()) {
            continue;
        }
        StateDD trial = eliminate(pkg, dd, doomed);
        std::size_t s = size(trial);
        if (!best || s < best_size) {
            best = trial;
            best_size = s;
            best_level = l;
            best_eliminated = doomed.size();
        }
    }
    if (!best) {
        return finish(dd, dd, scheme, 0);
    }
    return finish(dd, *best, scheme, best_eliminated, best_level);
}

ApproxResult approx_per_level(Package &pkg, const StateDD &dd, double f) {
    PerLevelScheme scheme{f};
    validate(scheme);
    // Top-down; each level's prefix is taken from the current state, so every
    // step keeps at least f of the remaining mass.
    StateDD current = dd;
    std::size_t eliminated = 0;
    for (std::size_t l = 0; l < dd.n; ++l) {
        const auto levels = nodes_by_level(current);
        NodeSet doomed = lightest_prefix(levels[l], contributions(current), 1.0 - f);
        if (doomed.empty()) {
            continue;
        }
        current = eliminate(pkg, current, doomed);
        eliminated += doomed.size();
    }
    return finish(dd, current, scheme, eliminated);
}

ApproxResult approximate(Package &pkg, const StateDD &dd, const Scheme &scheme) {
    return std::visit(
        Overloaded{
            [&](const SamplingScheme &s) { return approx_sampling(pkg, dd, s.traversals, s.seed); },
            [&](const ThresholdScheme &s) { return approx_threshold(pkg, dd, s.traversals, s.tau, s.seed); },
            [&](const TargetFidelityScheme &s) { return approx_target_fidelity(pkg, dd, s.fidelity, s.level); },
            [&](const PerLevelScheme &s) { return approx_per_level(pkg, dd, s.fidelity); },
        },
        scheme);
}

}  // namespace ddapprox
