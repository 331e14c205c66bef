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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace irs
{
    using cplx = std::complex<double>;

    // Dense complex column vector
    class CVector
    {
    public:
        CVector() = default;
        explicit CVector(std::size_t n, cplx fill = {}) : data_(n, fill) {}
        CVector(std::initializer_list<cplx> values) : data_(values) {}
        explicit CVector(std::vector<cplx> values) : data_(std::move(values)) {}

        std::size_t size() const { return data_.size(); }
        cplx &operator[](std::size_t i) { return data_[i]; }
        const cplx &operator[](std::size_t i) const { return data_[i]; }

        std::span<const cplx> values() const { return data_; }
        std::span<cplx> values() { return data_; }

        auto begin() const { return data_.begin(); }
        auto end() const { return data_.end(); }

        double norm() const;

        // Hermitian inner product a^H b
        friend cplx vdot(const CVector &a, const CVector &b);

    private:
        std::vector<cplx> data_;
    };

    // Dense complex matrix, row-major
    class CMatrix
    {
    public:
        CMatrix() = default;
        CMatrix(std::size_t rows, std::size_t cols, cplx fill = {});

        static CMatrix identity(std::size_t n);
        static CMatrix diagonal(const CVector &d);
        static CMatrix column(const CVector &v);
        static CMatrix from_columns(std::span<const CVector> columns);
        // a * b^H for column vectors a and b
        static CMatrix outer(const CVector &a, const CVector &b);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }

        cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        CVector col(std::size_t c) const;

        CMatrix &operator*=(cplx s);
        friend CMatrix operator*(const CMatrix &a, const CMatrix &b);
        friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }
        friend CMatrix operator+(const CMatrix &a, const CMatrix &b);
        friend CMatrix operator-(const CMatrix &a, const CMatrix &b);

        bool all_finite() const;

    private:
        std::size_t rows_ = 0, cols_ = 0;
        std::vector<cplx> data_;
    };

    CMatrix conj_transpose(const CMatrix &m);

    CMatrix kron(const CMatrix &a, const CMatrix &b);
    CVector kron(const CVector &a, const CVector &b);

    double frobenius_norm(const CMatrix &m);

    // Default upper bound on the 1-norm condition number of the Gram matrix
    inline constexpr double gram_condition_limit = 1e12;

    // Returns X = H (H^H H)^{-1} rhs for a tall H (M x K, K <= M) and a K x K right-hand side.
    // Throws IllConditioned when the condition estimate of H^H H exceeds the limit.
    CMatrix gram_solve(const CMatrix &h, const CMatrix &rhs, double condition_limit = gram_condition_limit);
}
