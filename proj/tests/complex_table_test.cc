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

#include <cmath>
#include <limits>
#include <random>

#include "ddapprox/errors.h"
#include "gtest/gtest.h"

using namespace ddapprox;

TEST(complex_table, zero_and_one_are_exact) {
    ComplexTable t;
    EXPECT_EQ(t.lookup(0.0, 0.0), ComplexTable::zero());
    EXPECT_EQ(t.lookup(-0.0, -0.0), ComplexTable::zero());
    EXPECT_EQ(t.lookup(1.0, 0.0), ComplexTable::one());
    EXPECT_EQ(t.lookup(1.0 + 1e-12, -1e-12), ComplexTable::one());
    EXPECT_EQ(t.lookup(3e-11, 0.0), ComplexTable::zero());
}

TEST(complex_table, values_within_tolerance_share_a_representative) {
    ComplexTable t;
    const double tol = t.tolerance();
    Complex a = t.lookup(0.3, 0.4);
    Complex b = t.lookup(0.3 + tol / 2, 0.4 - tol / 2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(b.re, 0.3);

    Complex c = t.lookup(0.3 + 3 * tol, 0.4);
    EXPECT_NE(a, c);
}

TEST(complex_table, first_come_representative) {
    ComplexTable t;
    const double tol = t.tolerance();
    Complex first = t.lookup(0.5, 0.0);
    // Within tol of `first` but on the other side of it: still `first`.
    EXPECT_EQ(t.lookup(0.5 - 0.9 * tol, 0.0), first);
    EXPECT_EQ(t.lookup(0.5 + 0.9 * tol, 0.0), first);
}

TEST(complex_table, lookup_is_idempotent) {
    ComplexTable t;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        Complex v = t.lookup(u(rng), u(rng));
        EXPECT_EQ(t.lookup(v), v);
    }
}

TEST(complex_table, rejects_non_finite) {
    ComplexTable t;
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(t.lookup(nan, 0.0), NumericDomainError);
    EXPECT_THROW(t.lookup(0.0, inf), NumericDomainError);
    EXPECT_THROW(t.div(t.lookup(0.5, 0.0), ComplexTable::zero()), NumericDomainError);
}

TEST(complex_table, tolerance_bounds) {
    EXPECT_THROW(Tolerance(0.0), std::invalid_argument);
    EXPECT_THROW(Tolerance(-1e-9), std::invalid_argument);
    EXPECT_THROW(Tolerance(1e-3), std::invalid_argument);
    EXPECT_NO_THROW(Tolerance(1e-6));
}

TEST(complex_table, path_product_of_worked_example) {
    ComplexTable t;
    Complex root = t.lookup(2.0 / std::sqrt(10.0), 0.0);
    Complex half = t.lookup(0.5, 0.0);
    Complex minus_one = t.lookup(-1.0, 0.0);
    Complex amp = t.mul(t.mul(root, half), minus_one);
    EXPECT_NEAR(amp.re, -1.0 / std::sqrt(10.0), 1e-15);
    EXPECT_EQ(amp.im, 0.0);
}

TEST(complex_table, conj_and_sqr_mag) {
    ComplexTable t;
    Complex v = t.lookup(0.25, -0.75);
    Complex c = t.conj(v);
    EXPECT_EQ(c.re, 0.25);
    EXPECT_EQ(c.im, 0.75);
    EXPECT_EQ(ComplexTable::sqr_mag(c), ComplexTable::sqr_mag(v));
    Complex r = t.lookup(1.0 / std::sqrt(2.0), 0.0);
    EXPECT_NEAR(ComplexTable::sqr_mag(r), 0.5, 1e-15);
}

TEST(complex_table, add_matches_floating_point) {
    ComplexTable t;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 16; ++i) {
        double ar = u(rng), ai = u(rng), br = u(rng), bi = u(rng);
        Complex a = t.lookup(ar, ai);
        Complex b = t.lookup(br, bi);
        Complex s = t.add(a, b);
        EXPECT_NEAR(s.re, ar + br, 2 * t.tolerance());
        EXPECT_NEAR(s.im, ai + bi, 2 * t.tolerance());
        Complex p = t.mul(a, b);
        std::complex<double> expect = std::complex<double>(ar, ai) * std::complex<double>(br, bi);
        EXPECT_NEAR(p.re, expect.real(), 2 * t.tolerance());
        EXPECT_NEAR(p.im, expect.imag(), 2 * t.tolerance());
    }
}

TEST(complex_table, stored_values_are_finite_and_nonnegative_magnitude) {
    ComplexTable t;
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        Complex v = t.lookup(u(rng), u(rng));
        EXPECT_TRUE(std::isfinite(v.re) && std::isfinite(v.im));
        EXPECT_GE(ComplexTable::sqr_mag(v), 0.0);
        EXPECT_EQ(ComplexTable::sqr_mag(t.conj(v)), ComplexTable::sqr_mag(v));
    }
}
