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

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ddapprox {

inline constexpr double kDefaultTolerance = 1e-10;

/// A complex amplitude. Values handed out by a ComplexTable are canonical:
/// two canonical values from the same table are equal iff their bits are equal.
struct Complex {
    double re = 0.0;
    double im = 0.0;

    bool operator==(const Complex &) const = default;

    bool is_zero() const {
        return re == 0.0 && im == 0.0;
    }
    bool is_one() const {
        return re == 1.0 && im == 0.0;
    }
    std::complex<double> value() const {
        return {re, im};
    }
    double sqr_mag() const {
        return re * re + im * im;
    }
    double mag() const {
        return std::hypot(re, im);
    }
};

/// Componentwise absolute comparison threshold, 0 < tol < 1e-3.
class Tolerance {
   public:
    explicit Tolerance(double tol = kDefaultTolerance);
    double value() const {
        return tol_;
    }

   private:
    double tol_;
};

/// Value table for complex amplitudes.
///
/// Every value that enters the table is snapped to the first stored value
/// whose real and imaginary parts both lie within the tolerance of it. Exact
/// 0 and 1 are seeded first, so anything within the tolerance of them becomes
/// exactly 0 or 1. Entries are never removed.
///
/// Single-writer; not safe for concurrent mutation.
class ComplexTable {
   public:
    explicit ComplexTable(Tolerance tol = Tolerance());

    /// Canonical representative of (re, im). Throws NumericDomainError on
    /// non-finite input.
    Complex lookup(double re, double im);
    Complex lookup(std::complex<double> v) {
        return lookup(v.real(), v.imag());
    }
    Complex lookup(Complex v) {
        return lookup(v.re, v.im);
    }

    Complex add(Complex a, Complex b);
    Complex sub(Complex a, Complex b);
    Complex mul(Complex a, Complex b);
    Complex div(Complex a, Complex b);
    Complex conj(Complex a);
    static double sqr_mag(Complex a) {
        return a.sqr_mag();
    }

    static constexpr Complex zero() {
        return {0.0, 0.0};
    }
    static constexpr Complex one() {
        return {1.0, 0.0};
    }

    double tolerance() const {
        return tol_;
    }
    std::size_t size() const {
        return values_.size();
    }

   private:
    struct Cell {
        std::int64_t x;
        std::int64_t y;
        bool operator==(const Cell &) const = default;
    };
    struct CellHash {
        std::size_t operator()(const Cell &c) const;
    };

    Cell cell_of(double re, double im) const;

    double tol_;
    std::vector<Complex> values_;
    std::unordered_map<Cell, std::vector<std::uint32_t>, CellHash> grid_;
};

}  // namespace ddapprox
