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

#include <algorithm>
#include <cmath>
#include <random>

#include "dense_oracle.h"
#include "path_oracle.h"
#include "ddapprox/runner.h"
#include "gtest/gtest.h"

using namespace ddapprox;
using oracle::cd;
using oracle::Vec;

namespace {

struct Fig2 {
    Package pkg;
    StateDD dd;
    const Node *root, *left, *right, *shared, *right0, *right1;

    Fig2() {
        auto amps = fig2_amplitudes();
        dd = pkg.from_vector(amps);
        root = dd.root.node;
        left = root->succ[0].node;
        right = root->succ[1].node;
        shared = left->succ[0].node;
        right0 = right->succ[0].node;
        right1 = right->succ[1].node;
    }
};

// Squared norm of the sub-vector a node represents on its own.
double brute_upstream(const StateDD &dd, const Node *n) {
    StateDD sub{dd.n - static_cast<std::size_t>(n->level), Edge{n, ComplexTable::one()}};
    return oracle::norm2(to_vector(sub));
}

}  // namespace

TEST(analysis, worked_example_probabilities) {
    Fig2 f;
    UpstreamMap up = upstream(f.dd);
    DownstreamMap down = downstream(f.dd);
    ContributionMap c = contributions(f.dd);

    EXPECT_NEAR(up.at(f.root), 2.5, 1e-12);
    EXPECT_NEAR(up.at(f.left), 2.0, 1e-12);
    EXPECT_NEAR(up.at(f.right), 2.0, 1e-12);
    EXPECT_NEAR(up.at(f.shared), 1.0, 1e-12);
    EXPECT_NEAR(up.at(f.right0), 1.0, 1e-12);
    EXPECT_NEAR(up.at(f.right1), 1.0, 1e-12);
    EXPECT_EQ(up.at(terminal_node()), 1.0);

    EXPECT_NEAR(down.at(f.root), 0.4, 1e-12);
    EXPECT_NEAR(down.at(f.left), 0.4, 1e-12);
    EXPECT_NEAR(down.at(f.right), 0.1, 1e-12);
    EXPECT_NEAR(down.at(f.shared), 0.8, 1e-12);
    EXPECT_NEAR(down.at(f.right0), 0.1, 1e-12);
    EXPECT_NEAR(down.at(f.right1), 0.1, 1e-12);

    EXPECT_NEAR(c.at(f.root), 1.0, 1e-12);
    EXPECT_NEAR(c.at(f.left), 0.8, 1e-12);
    EXPECT_NEAR(c.at(f.right), 0.2, 1e-12);
    EXPECT_NEAR(c.at(f.shared), 0.8, 1e-12);
    EXPECT_NEAR(c.at(f.right0), 0.1, 1e-12);
    EXPECT_NEAR(c.at(f.right1), 0.1, 1e-12);

    EXPECT_NEAR(branch_one_probability(f.root, up), 0.2, 1e-12);
    EXPECT_EQ(branch_one_probability(f.shared, up), 1.0);
    EXPECT_EQ(branch_one_probability(f.right0, up), 0.0);
    EXPECT_NEAR(branch_one_probability(f.left, up), 0.5, 1e-12);
}

TEST(analysis, contributions_match_brute_force_on_random_states) {
    std::mt19937_64 rng(21);
    Package pkg;
    for (int i = 0; i < 50; ++i) {
        StateDD dd = pkg.from_vector(oracle::random_sparse_state(1 + i % 7, rng));
        UpstreamMap up = upstream(dd);
        ContributionMap c = contributions(dd);
        ContributionMap c2 = contributions(up, downstream(dd));
        NodeMap<double> want = oracle::brute_contributions(dd, to_vector(dd));
        for (const auto &level : nodes_by_level(dd)) {
            double sum = 0.0;
            for (const Node *n : level) {
                EXPECT_NEAR(c.at(n), want.at(n), 1e-12);
                EXPECT_EQ(c.at(n), c2.at(n));
                EXPECT_NEAR(up.at(n), brute_upstream(dd, n), 1e-12);
                double p1 = branch_one_probability(n, up);
                EXPECT_GE(p1, 0.0);
                EXPECT_LE(p1, 1.0);
                sum += c.at(n);
            }
            EXPECT_NEAR(sum, 1.0, 1e-9);
        }
    }
}

TEST(analysis, sampling_frequencies_track_branch_probabilities) {
    Fig2 f;
    const std::uint64_t L = 100000;
    VisitCounts v = sample_paths(f.dd, L, 11);
    EXPECT_EQ(v.traversals, L);
    EXPECT_EQ(v.seed, 11u);
    EXPECT_EQ(v[f.root], L);
    EXPECT_NEAR(double(v[f.left]) / L, 0.8, 0.01);
    EXPECT_EQ(v[f.left] + v[f.right], L);
    EXPECT_EQ(v[f.shared], v[f.left]);
    EXPECT_EQ(v[f.right0] + v[f.right1], v[f.right]);
    EXPECT_NEAR(double(v[f.right0]) / L, 0.1, 0.01);
}

TEST(analysis, sampled_bitstrings_follow_born_rule) {
    std::mt19937_64 rng(4);
    Package pkg;
    for (std::size_t n = 1; n <= 4; ++n) {
        Vec amps = oracle::random_sparse_state(n, rng);
        StateDD dd = pkg.from_vector(amps);
        const std::uint64_t L = 20000;
        std::vector<std::uint64_t> hits(amps.size());
        for (std::uint64_t idx : sample_bitstrings(dd, L, 100 + n)) {
            ASSERT_LT(idx, amps.size());
            ++hits[idx];
        }
        for (std::size_t i = 0; i < amps.size(); ++i) {
            const double p = std::norm(amps[i]);
            if (p == 0.0) {
                EXPECT_EQ(hits[i], 0u);
                continue;
            }
            const double sigma = std::sqrt(std::max(0.0, p * (1 - p)) / L);
            EXPECT_NEAR(double(hits[i]) / L, p, 3 * sigma + 1e-12) << "n=" << n << " i=" << i;
        }
    }
}

TEST(analysis, bitstrings_and_visits_share_a_stream) {
    Fig2 f;
    auto bits = sample_bitstrings(f.dd, 500, 9);
    VisitCounts v = sample_paths(f.dd, 500, 9);
    std::uint64_t left = 0;
    for (std::uint64_t b : bits) {
        left += (b >> 2) == 0;
    }
    EXPECT_EQ(left, v[f.left]);
    EXPECT_EQ(sample_bitstrings(f.dd, 500, 9), bits);
    UpstreamMap up = upstream(f.dd);
    EXPECT_EQ(sample_paths(f.dd, up, 500, 9).counts, v.counts);
}

TEST(analysis, basis_state_walks_are_deterministic) {
    Package pkg;
    StateDD dd = pkg.zero_state(5);
    VisitCounts v = sample_paths(dd, 37, 1);
    for (const auto &level : nodes_by_level(dd)) {
        EXPECT_EQ(v[level[0]], 37u);
    }
    for (std::uint64_t b : sample_bitstrings(dd, 10, 2)) {
        EXPECT_EQ(b, 0u);
    }
}

TEST(analysis, sampling_rejects_bad_arguments) {
    Fig2 f;
    EXPECT_THROW(sample_paths(f.dd, 0, 1), std::invalid_argument);
    EXPECT_THROW(sample_paths(StateDD{3, Edge::zero()}, 10, 1), std::invalid_argument);
}

TEST(analysis, upstream_is_weight_free) {
    // Scaling the root weight changes downstream values only.
    Fig2 f;
    StateDD half{f.dd.n, f.pkg.scale(f.dd.root, std::complex<double>(0.5))};
    UpstreamMap a = upstream(f.dd);
    UpstreamMap b = upstream(half);
    EXPECT_EQ(a.at(f.root), b.at(f.root));
    EXPECT_NEAR(downstream(half).at(f.shared), 0.2, 1e-12);
}
