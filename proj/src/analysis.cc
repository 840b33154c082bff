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

#include "ddapprox/analysis.h"

#include <functional>
#include <stdexcept>

#include "ddapprox/rng.h"

namespace ddapprox {

UpstreamMap upstream(const StateDD &dd) {
    UpstreamMap up;
    up.emplace(terminal_node(), 1.0);
    std::function<double(const Node *)> visit = [&](const Node *n) -> double {
        if (auto it = up.find(n); it != up.end()) {
            return it->second;
        }
        double p = 0.0;
        for (const Edge &s : n->succ) {
            if (!s.is_zero()) {
                p += s.w.sqr_mag() * visit(s.node);
            }
        }
        up.emplace(n, p);
        return p;
    };
    if (!dd.root.is_zero()) {
        visit(dd.root.node);
    }
    return up;
}

DownstreamMap downstream(const StateDD &dd) {
    DownstreamMap down;
    if (dd.root.is_zero() || dd.root.is_terminal()) {
        return down;
    }
    down[dd.root.node] = dd.root.w.sqr_mag();
    // Every parent sits exactly one level above its children, so finishing a
    // level before the next one starts sees all incoming edges.
    for (const auto &level : nodes_by_level(dd)) {
        for (const Node *u : level) {
            const double du = down.at(u);
            for (const Edge &s : u->succ) {
                if (!s.is_zero() && !s.is_terminal()) {
                    down[s.node] += du * s.w.sqr_mag();
                }
            }
        }
    }
    return down;
}

ContributionMap contributions(const UpstreamMap &up, const DownstreamMap &down) {
    ContributionMap out;
    for (const auto &[node, d] : down) {
        out.emplace(node, d * up.at(node));
    }
    return out;
}

ContributionMap contributions(const StateDD &dd) {
    return contributions(upstream(dd), downstream(dd));
}

double branch_one_probability(const Node *node, const UpstreamMap &up) {
    const Edge &e0 = node->succ[0];
    const Edge &e1 = node->succ[1];
    if (e1.is_zero()) {
        return 0.0;
    }
    if (e0.is_zero()) {
        return 1.0;
    }
    const double p1 = e1.w.sqr_mag() * up.at(e1.node);
    const double p0 = e0.w.sqr_mag() * up.at(e0.node);
    return p1 / (p0 + p1);
}

namespace {

template <typename OnStep>
void walk(const StateDD &dd, const UpstreamMap &up, SplitMix64 &rng, OnStep &&on_step) {
    const Edge *e = &dd.root;
    while (!e->is_terminal()) {
        const Node *n = e->node;
        int bit;
        if (n->succ[1].is_zero()) {
            bit = 0;
        } else if (n->succ[0].is_zero()) {
            bit = 1;
        } else {
            bit = rng.uniform() < branch_one_probability(n, up) ? 1 : 0;
        }
        on_step(n, bit);
        e = &n->succ[bit];
    }
}

void check_sampleable(const StateDD &dd, std::uint64_t traversals) {
    if (traversals == 0) {
        throw std::invalid_argument("sample_paths: traversal count must be at least 1");
    }
    if (dd.root.is_zero()) {
        throw std::invalid_argument("sample_paths: cannot sample the zero state");
    }
}

}  // namespace

VisitCounts sample_paths(const StateDD &dd, const UpstreamMap &up, std::uint64_t traversals, std::uint64_t seed) {
    check_sampleable(dd, traversals);
    VisitCounts vc{traversals, seed, {}};
    SplitMix64 rng(seed);
    for (std::uint64_t i = 0; i < traversals; ++i) {
        walk(dd, up, rng, [&](const Node *n, int) { ++vc.counts[n]; });
    }
    return vc;
}

VisitCounts sample_paths(const StateDD &dd, std::uint64_t traversals, std::uint64_t seed) {
    return sample_paths(dd, upstream(dd), traversals, seed);
}

std::vector<std::uint64_t> sample_bitstrings(const StateDD &dd, std::uint64_t traversals, std::uint64_t seed) {
    check_sampleable(dd, traversals);
    const UpstreamMap up = upstream(dd);
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(traversals);
    for (std::uint64_t i = 0; i < traversals; ++i) {
        std::uint64_t index = 0;
        walk(dd, up, rng, [&](const Node *, int bit) { index = (index << 1) | static_cast<std::uint64_t>(bit); });
        out.push_back(index);
    }
    return out;
}

}  // namespace ddapprox
