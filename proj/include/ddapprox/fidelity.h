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

#include <complex>
#include <cstddef>
#include <span>

#include "ddapprox/dd_package.h"

namespace ddapprox {

/// Work done by one inner_product() call.
struct InnerProductStats {
    /// Distinct (node, node) pairs evaluated.
    std::size_t pairs = 0;
    /// Lookups answered from the pair cache.
    std::size_t cache_hits = 0;
};

/// <a|b> by pairwise recursion over both diagrams. The cache stores the
/// weight-free product of each (nodeA, nodeB) pair, so every pair is
/// evaluated at most once. Throws std::invalid_argument if the qubit counts
/// differ.
std::complex<double> inner_product(const StateDD &a, const StateDD &b, InnerProductStats *stats = nullptr);

/// |<a|b>|^2 clamped to [0, 1].
double fidelity(const StateDD &a, const StateDD &b);

/// |<a|b>|^2 of two dense vectors (no normalisation applied), clamped to [0, 1].
double fidelity(std::span<const std::complex<double>> a, std::span<const std::complex<double>> b);

}  // namespace ddapprox
