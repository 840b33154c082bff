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

#include "ddapprox/complex_table.h"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ddapprox/errors.h"

namespace ddapprox {

Tolerance::Tolerance(double tol) : tol_(tol) {
    if (!(tol > 0.0) || !(tol < 1e-3)) {
        throw std::invalid_argument("tolerance must lie in (0, 1e-3), got " + std::to_string(tol));
    }
}

std::size_t ComplexTable::CellHash::operator()(const Cell &c) const {
    auto h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

ComplexTable::ComplexTable(Tolerance tol) : tol_(tol.value()) {
    for (Complex seed : {zero(), one()}) {
        grid_[cell_of(seed.re, seed.im)].push_back(static_cast<std::uint32_t>(values_.size()));
        values_.push_back(seed);
    }
}

ComplexTable::Cell ComplexTable::cell_of(double re, double im) const {
    return {static_cast<std::int64_t>(std::floor(re / tol_)),
            static_cast<std::int64_t>(std::floor(im / tol_))};
}

Complex ComplexTable::lookup(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw NumericDomainError("non-finite complex value (" + std::to_string(re) + ", " +
                                 std::to_string(im) + ")");
    }
    // Normalise -0.0 so that bitwise equality and hashing agree.
    re += 0.0;
    im += 0.0;

    // A value within tol of (re, im) lives in one of the 3x3 neighbouring cells.
    Cell home = cell_of(re, im);
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            auto it = grid_.find(Cell{home.x + dx, home.y + dy});
            if (it == grid_.end()) {
                continue;
            }
            for (std::uint32_t idx : it->second) {
                const Complex &c = values_[idx];
                if (std::abs(c.re - re) < tol_ && std::abs(c.im - im) < tol_) {
                    return c;
                }
            }
        }
    }
    assert(std::isfinite(re) && std::isfinite(im));
    grid_[home].push_back(static_cast<std::uint32_t>(values_.size()));
    values_.push_back({re, im});
    return values_.back();
}

Complex ComplexTable::add(Complex a, Complex b) {
    return lookup(a.re + b.re, a.im + b.im);
}

Complex ComplexTable::sub(Complex a, Complex b) {
    return lookup(a.re - b.re, a.im - b.im);
}

Complex ComplexTable::mul(Complex a, Complex b) {
    if (a.is_one()) {
        return b;
    }
    if (b.is_one()) {
        return a;
    }
    if (a.is_zero() || b.is_zero()) {
        return zero();
    }
    return lookup(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Complex ComplexTable::div(Complex a, Complex b) {
    if (b.is_zero()) {
        throw NumericDomainError("complex division by zero");
    }
    if (b.is_one()) {
        return a;
    }
    if (a == b) {
        return one();
    }
    return lookup(a.value() / b.value());
}

Complex ComplexTable::conj(Complex a) {
    return lookup(a.re, -a.im);
}

}  // namespace ddapprox
