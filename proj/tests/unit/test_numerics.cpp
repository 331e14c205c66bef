// SPDX-License-Identifier: Apache-2.0
//
// irs-secrecy: link-level simulator for IRS-assisted downlink secrecy
// Copyright (C) 2026 The irs-secrecy authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "irs/errors.hpp"
#include "irs/numerics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace irs;
using Catch::Matchers::WithinAbs;

namespace
{
    CMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64 &rng)
    {
        std::normal_distribution<double> g;
        CMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = {g(rng), g(rng)};
        return m;
    }

    double max_abs_diff(const CMatrix &a, const CMatrix &b)
    {
        REQUIRE(a.rows() == b.rows());
        REQUIRE(a.cols() == b.cols());
        double d = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                d = std::max(d, std::abs(a(i, j) - b(i, j)));
        return d;
    }
}

TEST_CASE("conj_transpose of a scalar and an identity", "[numerics]")
{
    CMatrix s(1, 1, cplx(0.0, 1.0));
    CHECK(conj_transpose(s)(0, 0) == cplx(0.0, -1.0));
    CHECK(max_abs_diff(conj_transpose(CMatrix::identity(2)), CMatrix::identity(2)) == 0.0);
}

TEST_CASE("conj_transpose is an involution and swaps shape", "[numerics]")
{
    std::mt19937_64 rng(7);
    const CMatrix a = random_matrix(3, 2, rng);
    const CMatrix t = conj_transpose(a);
    CHECK(t.rows() == 2);
    CHECK(t.cols() == 3);
    CHECK(t(1, 2) == std::conj(a(2, 1)));
    CHECK(max_abs_diff(conj_transpose(t), a) == 0.0);
}

TEST_CASE("kron matches the block index formula", "[numerics]")
{
    std::mt19937_64 rng(11);
    const CMatrix a = random_matrix(2, 3, rng), b = random_matrix(3, 2, rng);
    const CMatrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(k(i, j) == a(i / 3, j / 2) * b(i % 3, j % 2));
}

TEST_CASE("kron with an identity is block diagonal", "[numerics]")
{
    const CMatrix m(2, 2, cplx(1.0, 2.0));
    const CMatrix k = kron(CMatrix::identity(2), m);
    CHECK(k(0, 1) == cplx(1.0, 2.0));
    CHECK(k(3, 2) == cplx(1.0, 2.0));
    CHECK(k(0, 2) == cplx{});
    CHECK(k(3, 1) == cplx{});
}

TEST_CASE("kron of vectors repeats the second factor", "[numerics]")
{
    const CVector ones{1.0, 1.0, 1.0};
    const CVector v{cplx(1, 1), cplx(0, -2)};
    const CVector k = kron(ones, v);
    REQUIRE(k.size() == 6);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(k[i] == v[i % 2]);
}

TEST_CASE("kron mixed-product property", "[numerics][property]")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial)
    {
        const CMatrix a = random_matrix(2, 3, rng), b = random_matrix(2, 2, rng);
        const CMatrix c = random_matrix(3, 2, rng), d = random_matrix(2, 3, rng);
        CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    }
}

TEST_CASE("frobenius norm", "[numerics]")
{
    CHECK_THAT(frobenius_norm(CMatrix::identity(3)), WithinAbs(std::sqrt(3.0), 1e-15));
    CHECK(frobenius_norm(CMatrix(4, 2)) == 0.0);

    std::mt19937_64 rng(5);
    const CMatrix a = random_matrix(4, 3, rng);
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            sum += std::norm(a(i, j));
    CHECK_THAT(frobenius_norm(a), WithinAbs(std::sqrt(sum), 1e-13));
    CHECK_THAT(frobenius_norm(conj_transpose(a)), WithinAbs(frobenius_norm(a), 1e-13));
}

TEST_CASE("gram_solve with orthonormal columns returns the columns", "[numerics]")
{
    // First three DFT columns of size 8
    CMatrix h(8, 3);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 3; ++k)
            h(i, k) = std::polar(1.0 / std::sqrt(8.0), 2.0 * std::numbers::pi * double(i * k) / 8.0);
    CHECK(max_abs_diff(gram_solve(h, CMatrix::identity(3)), h) < 1e-14);
}

TEST_CASE("gram_solve with one column is h / |h|^2", "[numerics]")
{
    std::mt19937_64 rng(9);
    const CMatrix h = random_matrix(5, 1, rng);
    const double n2 = std::pow(frobenius_norm(h), 2);
    const CMatrix x = gram_solve(h, CMatrix::identity(1));
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(std::abs(x(i, 0) - h(i, 0) / n2) < 1e-15);
}

TEST_CASE("gram_solve residual on random tall matrices", "[numerics][property]")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial)
    {
        const CMatrix h = random_matrix(6, 3, rng);
        const CMatrix rhs = random_matrix(3, 3, rng);
        const CMatrix x = gram_solve(h, rhs);
        // H^H X must reproduce the right-hand side
        CHECK(max_abs_diff(conj_transpose(h) * x, rhs) <= 1e-10 * std::max(1.0, frobenius_norm(rhs)));
    }
}

TEST_CASE("gram_solve rejects rank-deficient and wide inputs", "[numerics]")
{
    CMatrix h(4, 2);
    for (std::size_t i = 0; i < 4; ++i)
        h(i, 0) = h(i, 1) = cplx(double(i + 1), 0.5);
    CHECK_THROWS_AS(gram_solve(h, CMatrix::identity(2)), IllConditioned);

    CMatrix near = h;
    near(0, 1) += 1e-9;
    CHECK_THROWS_AS(gram_solve(near, CMatrix::identity(2)), IllConditioned);

    CHECK_THROWS_AS(gram_solve(CMatrix(2, 3, 1.0), CMatrix::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(gram_solve(CMatrix(4, 2, 1.0), CMatrix::identity(3)), std::invalid_argument);
}
