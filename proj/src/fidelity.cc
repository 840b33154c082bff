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

#include "ddapprox/fidelity.h"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace ddapprox {

namespace {

using cd = std::complex<double>;

struct PairHash {
    std::size_t operator()(const std::pair<const Node *, const Node *> &p) const {
        auto h = reinterpret_cast<std::uintptr_t>(p.first) * 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(h ^ (reinterpret_cast<std::uintptr_t>(p.second) + (h << 6) + (h >> 2)));
    }
};

double clamp_unit(double v) {
    return std::clamp(v, 0.0, 1.0);
}

}  // namespace

cd inner_product(const StateDD &a, const StateDD &b, InnerProductStats *stats) {
    if (a.n != b.n) {
        throw std::invalid_argument("inner_product: qubit counts differ (" + std::to_string(a.n) + " vs " +
                                    std::to_string(b.n) + ")");
    }
    if (a.root.is_zero() || b.root.is_zero()) {
        return 0.0;
    }
    std::unordered_map<std::pair<const Node *, const Node *>, cd, PairHash> cache;
    InnerProductStats local;
    std::function<cd(const Node *, const Node *)> pair_product = [&](const Node *x, const Node *y) -> cd {
        if (x->is_terminal() && y->is_terminal()) {
            return 1.0;
        }
        auto key = std::make_pair(x, y);
        if (auto it = cache.find(key); it != cache.end()) {
            ++local.cache_hits;
            return it->second;
        }
        ++local.pairs;
        cd sum = 0.0;
        for (int i = 0; i < 2; ++i) {
            const Edge &ex = x->succ[i];
            const Edge &ey = y->succ[i];
            if (ex.is_zero() || ey.is_zero()) {
                continue;
            }
            sum += std::conj(ex.w.value()) * ey.w.value() * pair_product(ex.node, ey.node);
        }
        cache.emplace(key, sum);
        return sum;
    };
    cd result = std::conj(a.root.w.value()) * b.root.w.value() * pair_product(a.root.node, b.root.node);
    if (stats != nullptr) {
        *stats = local;
    }
    return result;
}

double fidelity(const StateDD &a, const StateDD &b) {
    return clamp_unit(std::norm(inner_product(a, b)));
}

double fidelity(std::span<const cd> a, std::span<const cd> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("fidelity: vector lengths differ");
    }
    cd dot = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += std::conj(a[i]) * b[i];
    }
    return clamp_unit(std::norm(dot));
}

}  // namespace ddapprox
