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

#include "irs/numerics.hpp"
#include "irs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace irs
{
    double CVector::norm() const
    {
        double acc = 0.0;
        for (const auto &v : data_)
            acc += std::norm(v);
        return std::sqrt(acc);
    }

    cplx vdot(const CVector &a, const CVector &b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("vdot: size mismatch");
        cplx acc{};
        for (std::size_t i = 0; i < a.size(); ++i)
            acc += std::conj(a[i]) * b[i];
        return acc;
    }

    CMatrix::CMatrix(std::size_t rows, std::size_t cols, cplx fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    CMatrix CMatrix::identity(std::size_t n)
    {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    CMatrix CMatrix::diagonal(const CVector &d)
    {
        CMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    CMatrix CMatrix::column(const CVector &v)
    {
        CMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            m(i, 0) = v[i];
        return m;
    }

    CMatrix CMatrix::from_columns(std::span<const CVector> columns)
    {
        if (columns.empty())
            return {};
        const std::size_t rows = columns.front().size();
        CMatrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c)
        {
            if (columns[c].size() != rows)
                throw std::invalid_argument("from_columns: ragged columns");
            for (std::size_t r = 0; r < rows; ++r)
                m(r, c) = columns[c][r];
        }
        return m;
    }

    CMatrix CMatrix::outer(const CVector &a, const CVector &b)
    {
        CMatrix m(a.size(), b.size());
        for (std::size_t r = 0; r < a.size(); ++r)
            for (std::size_t c = 0; c < b.size(); ++c)
                m(r, c) = a[r] * std::conj(b[c]);
        return m;
    }

    CVector CMatrix::col(std::size_t c) const
    {
        CVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    CMatrix &CMatrix::operator*=(cplx s)
    {
        for (auto &v : data_)
            v *= s;
        return *this;
    }

    CMatrix operator*(const CMatrix &a, const CMatrix &b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product: inner dimensions differ");
        CMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
            {
                const cplx aik = a(i, k);
                if (aik == cplx{})
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    CMatrix operator+(const CMatrix &a, const CMatrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: dimensions differ");
        CMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] += b.data_[i];
        return out;
    }

    CMatrix operator-(const CMatrix &a, const CMatrix &b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: dimensions differ");
        CMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i)
            out.data_[i] -= b.data_[i];
        return out;
    }

    bool CMatrix::all_finite() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const cplx &v)
                           { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
    }

    CMatrix conj_transpose(const CMatrix &m)
    {
        CMatrix out(m.cols(), m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                out(c, r) = std::conj(m(r, c));
        return out;
    }

    CMatrix kron(const CMatrix &a, const CMatrix &b)
    {
        CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                for (std::size_t k = 0; k < b.rows(); ++k)
                    for (std::size_t l = 0; l < b.cols(); ++l)
                        out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        return out;
    }

    CVector kron(const CVector &a, const CVector &b)
    {
        CVector out(a.size() * b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < b.size(); ++k)
                out[i * b.size() + k] = a[i] * b[k];
        return out;
    }

    double frobenius_norm(const CMatrix &m)
    {
        double acc = 0.0;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                acc += std::norm(m(r, c));
        return std::sqrt(acc);
    }

    namespace
    {
        // LU factorization with partial pivoting of a small square matrix, in place
        struct LU
        {
            CMatrix lu;
            std::vector<std::size_t> piv;

            explicit LU(CMatrix a) : lu(std::move(a)), piv(lu.rows())
            {
                const std::size_t n = lu.rows();
                std::iota(piv.begin(), piv.end(), std::size_t{0});
                for (std::size_t k = 0; k < n; ++k)
                {
                    std::size_t p = k;
                    for (std::size_t i = k + 1; i < n; ++i)
                        if (std::abs(lu(i, k)) > std::abs(lu(p, k)))
                            p = i;
                    if (lu(p, k) == cplx{})
                        throw IllConditioned("gram_solve: singular Gram matrix");
                    if (p != k)
                    {
                        for (std::size_t j = 0; j < n; ++j)
                            std::swap(lu(k, j), lu(p, j));
                        std::swap(piv[k], piv[p]);
                    }
                    for (std::size_t i = k + 1; i < n; ++i)
                    {
                        lu(i, k) /= lu(k, k);
                        for (std::size_t j = k + 1; j < n; ++j)
                            lu(i, j) -= lu(i, k) * lu(k, j);
                    }
                }
            }

            CMatrix solve(const CMatrix &b) const
            {
                const std::size_t n = lu.rows();
                CMatrix x(n, b.cols());
                for (std::size_t c = 0; c < b.cols(); ++c)
                {
                    std::vector<cplx> y(n);
                    for (std::size_t i = 0; i < n; ++i)
                    {
                        cplx s = b(piv[i], c);
                        for (std::size_t j = 0; j < i; ++j)
                            s -= lu(i, j) * y[j];
                        y[i] = s;
                    }
                    for (std::size_t i = n; i-- > 0;)
                    {
                        cplx s = y[i];
                        for (std::size_t j = i + 1; j < n; ++j)
                            s -= lu(i, j) * x(j, c);
                        x(i, c) = s / lu(i, i);
                    }
                }
                return x;
            }
        };

        double norm1(const CMatrix &m)
        {
            double best = 0.0;
            for (std::size_t c = 0; c < m.cols(); ++c)
            {
                double s = 0.0;
                for (std::size_t r = 0; r < m.rows(); ++r)
                    s += std::abs(m(r, c));
                best = std::max(best, s);
            }
            return best;
        }
    }

    CMatrix gram_solve(const CMatrix &h, const CMatrix &rhs, double condition_limit)
    {
        const std::size_t k = h.cols();
        if (k == 0 || k > h.rows())
            throw std::invalid_argument("gram_solve: H must be tall with at least one column");
        if (rhs.rows() != k)
            throw std::invalid_argument("gram_solve: right-hand side has wrong row count");

        const CMatrix hh = conj_transpose(h);
        const CMatrix gram = hh * h;
        const LU lu(gram);

        // K is tiny, so the exact 1-norm of the inverse is affordable
        const double cond = norm1(gram) * norm1(lu.solve(CMatrix::identity(k)));
        if (!std::isfinite(cond) || cond > condition_limit)
            throw IllConditioned("gram_solve: condition estimate " + std::to_string(cond) + " exceeds limit");

        CMatrix y = lu.solve(rhs);
        // One step of iterative refinement on the Gram system
        y = y + lu.solve(rhs - gram * y);
        return h * y;
    }
}
