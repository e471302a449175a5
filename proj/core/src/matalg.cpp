// Copyright 2026 The higgs-sp4 Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "higgs_sp4/matalg.hpp"

#include <array>
#include <sstream>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4 {

namespace {

void require_same_dim(const SqMatrix &a, const SqMatrix &b, const char *what)
{
    if (a.dim() != b.dim()) {
        fail(ErrorKind::DimensionMismatch, std::string(what) + ": dimensions " +
                                               std::to_string(a.dim()) + " and " +
                                               std::to_string(b.dim()));
    }
}

// Laplace expansion along the first listed row.
FieldElem minor_det(const SqMatrix &m, const std::vector<std::size_t> &rows,
                    const std::vector<std::size_t> &cols)
{
    const std::size_t n = rows.size();
    if (n == 1) return m(rows[0], cols[0]);
    if (n == 2) {
        return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
    }
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    FieldElem acc;
    for (std::size_t k = 0; k < n; ++k) {
        const FieldElem &entry = m(rows[0], cols[k]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != k) sub_cols.push_back(cols[j]);
        }
        FieldElem term = entry * minor_det(m, sub_rows, sub_cols);
        if (k % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip)
{
    std::vector<std::size_t> v;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != skip) v.push_back(k);
    }
    return v;
}

} // namespace

SqMatrix::SqMatrix(std::size_t dim) : dim_(dim), e_(dim * dim)
{
    if (dim != 2 && dim != 4) {
        fail(ErrorKind::DimensionMismatch, "matrix dimension must be 2 or 4, got " +
                                               std::to_string(dim));
    }
}

SqMatrix::SqMatrix(std::initializer_list<std::initializer_list<FieldElem>> rows)
    : SqMatrix(rows.size())
{
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) fail(ErrorKind::DimensionMismatch, "ragged matrix literal");
        std::size_t c = 0;
        for (const auto &x : row) (*this)(r, c++) = x;
        ++r;
    }
}

SqMatrix SqMatrix::from_rows(const std::vector<std::vector<FieldElem>> &rows)
{
    SqMatrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            fail(ErrorKind::DimensionMismatch, "matrix rows must have length dim");
        }
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

SqMatrix SqMatrix::identity(std::size_t dim)
{
    SqMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = FieldElem(1);
    return m;
}

SqMatrix SqMatrix::diag(const std::vector<FieldElem> &d)
{
    SqMatrix m(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
}

SqMatrix SqMatrix::block(const SqMatrix &a, const SqMatrix &b, const SqMatrix &c,
                         const SqMatrix &d)
{
    for (const SqMatrix *x : {&a, &b, &c, &d}) {
        if (x->dim() != 2) fail(ErrorKind::DimensionMismatch, "blocks must be 2x2");
    }
    SqMatrix m(4);
    const std::array<const SqMatrix *, 4> blocks = {&a, &b, &c, &d};
    for (std::size_t bi = 0; bi < 4; ++bi) {
        const std::size_t r0 = 2 * (bi / 2), c0 = 2 * (bi % 2);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) m(r0 + r, c0 + c) = (*blocks[bi])(r, c);
        }
    }
    return m;
}

SqMatrix SqMatrix::block_at(std::size_t br, std::size_t bc) const
{
    if (dim_ != 4 || br > 1 || bc > 1) fail(ErrorKind::DimensionMismatch, "block_at needs 4x4");
    SqMatrix b(2);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) b(r, c) = (*this)(2 * br + r, 2 * bc + c);
    }
    return b;
}

SqMatrix SqMatrix::transpose() const
{
    SqMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

SqMatrix SqMatrix::conj() const
{
    SqMatrix t(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) t.e_[k] = e_[k].conj();
    return t;
}

FieldElem SqMatrix::trace() const
{
    FieldElem t;
    for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
    return t;
}

FieldElem SqMatrix::det() const
{
    std::vector<std::size_t> idx(dim_);
    for (std::size_t k = 0; k < dim_; ++k) idx[k] = k;
    return minor_det(*this, idx, idx);
}

SqMatrix SqMatrix::adjugate() const
{
    SqMatrix adj(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            FieldElem cof = minor_det(*this, all_but(dim_, r), all_but(dim_, c));
            adj(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

SqMatrix SqMatrix::inverse() const
{
    const FieldElem d = det();
    if (d.is_zero()) fail(ErrorKind::SingularMatrix, "matrix is not invertible");
    return d.inv() * adjugate();
}

bool SqMatrix::is_zero() const
{
    for (const auto &x : e_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool SqMatrix::is_diagonal() const
{
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) return false;
        }
    }
    return true;
}

bool SqMatrix::is_symmetric() const { return *this == transpose(); }
bool SqMatrix::is_antisymmetric() const { return *this == -transpose(); }

SqMatrix SqMatrix::operator-() const
{
    SqMatrix m(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
}

SqMatrix &SqMatrix::operator+=(const SqMatrix &o)
{
    require_same_dim(*this, o, "matrix sum");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

SqMatrix &SqMatrix::operator-=(const SqMatrix &o)
{
    require_same_dim(*this, o, "matrix difference");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

SqMatrix operator*(const SqMatrix &a, const SqMatrix &b)
{
    require_same_dim(a, b, "matrix product");
    const std::size_t n = a.dim_;
    SqMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const FieldElem &x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
            }
        }
    }
    return m;
}

SqMatrix operator*(const FieldElem &s, const SqMatrix &m)
{
    SqMatrix r(m.dim_);
    for (std::size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = s * m.e_[k];
    return r;
}

std::string SqMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < dim_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < dim_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

SqMatrix kron(const SqMatrix &a, const SqMatrix &b)
{
    if (a.dim() != 2 || b.dim() != 2) fail(ErrorKind::DimensionMismatch, "kron takes two 2x2 matrices");
    SqMatrix m(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
            }
        }
    }
    return m;
}

bool is_symplectic(const SqMatrix &g, const SqMatrix &j)
{
    return g.transpose() * j * g == j;
}

std::optional<FieldElem> preserves_symplectic_up_to_scalar(const SqMatrix &m, const SqMatrix &j)
{
    const SqMatrix image = m.transpose() * j * m;
    // Locate the scale from the first nonzero entry of J.
    for (std::size_t r = 0; r < j.dim(); ++r) {
        for (std::size_t c = 0; c < j.dim(); ++c) {
            if (j(r, c).is_zero()) continue;
            FieldElem s = image(r, c) / j(r, c);
            if (image == s * j) return s;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

bool in_symplectic_algebra(const SqMatrix &x, const SqMatrix &j)
{
    return (x.transpose() * j + j * x).is_zero();
}

SqMatrix conjugate(const SqMatrix &m, const SqMatrix &p) { return p * m * p.inverse(); }

bool is_nilpotent(const SqMatrix &m)
{
    SqMatrix power = m;
    for (std::size_t k = 1; k < m.dim(); ++k) power = power * m;
    return power.is_zero();
}

SqMatrix exp_nilpotent(const SqMatrix &m)
{
    if (!is_nilpotent(m)) fail(ErrorKind::InvalidArgument, "exp is only defined for nilpotent input");
    SqMatrix sum = SqMatrix::identity(m.dim());
    SqMatrix term = SqMatrix::identity(m.dim());
    for (std::size_t k = 1; k < m.dim(); ++k) {
        term = FieldElem::fraction(1, static_cast<long>(k)) * (term * m);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

bool kron_identities_check(const SqMatrix &a, const SqMatrix &b, const SqMatrix &c,
                           const SqMatrix &d)
{
    if (kron(a, b) * kron(c, d) != kron(a * c, b * d)) return false;
    if (kron(a, b).transpose() != kron(a.transpose(), b.transpose())) return false;

    auto strict = [](const SqMatrix &m, bool upper) {
        SqMatrix s(2);
        if (upper) {
            s(0, 1) = m(0, 1);
        } else {
            s(1, 0) = m(1, 0);
        }
        return s;
    };
    const SqMatrix na = is_nilpotent(a) ? a : strict(a, true);
    const SqMatrix nb = is_nilpotent(b) ? b : strict(b, false);
    const SqMatrix i2 = mat::I2();
    return exp_nilpotent(kron(na, i2) + kron(i2, nb)) == kron(exp_nilpotent(na), exp_nilpotent(nb));
}

namespace mat {

SqMatrix I2() { return SqMatrix::identity(2); }
SqMatrix I4() { return SqMatrix::identity(4); }
SqMatrix J() { return SqMatrix{{0, 1}, {-1, 0}}; }
SqMatrix J13() { return kron(J(), I2()); }
SqMatrix J12() { return kron(I2(), J()); }

SqMatrix J0()
{
    return SqMatrix{{0, 0, 1, 0}, {0, 0, 0, -3}, {-1, 0, 0, 0}, {0, 3, 0, 0}};
}

SqMatrix h_perm()
{
    return SqMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

SqMatrix h_sym3()
{
    const FieldElem s = FieldElem::sqrt3().inv();
    return SqMatrix{{1, 0, 0, 0}, {0, 0, 0, s}, {0, 0, 1, 0}, {0, s, 0, 0}};
}

SqMatrix T()
{
    const SqMatrix i2 = I2();
    const SqMatrix ii = FieldElem::i() * i2;
    return SqMatrix::block(i2, ii, i2, -ii);
}

SqMatrix H_tilde()
{
    const auto [u, v] = embed_u_v();
    const FieldElem s3 = FieldElem::sqrt3();
    const FieldElem eighth = FieldElem::fraction(1, 8);
    const FieldElem one(1), three(3);
    return SqMatrix{
        {0, 0, (s3 - one) * u * eighth, (s3 - three) * u * eighth},
        {0, 0, -(s3 + three) * v * eighth, -(s3 + one) * v * eighth},
        {(s3 + one) / u, -(s3 + three) / u, 0, 0},
        {(s3 - three) / v, -(s3 - one) / v, 0, 0},
    };
}

SqMatrix P() { return H_tilde() * T(); }

SqMatrix E11() { return SqMatrix{{1, 0}, {0, 0}}; }
SqMatrix E22() { return SqMatrix{{0, 0}, {0, 1}}; }

} // namespace mat

} // namespace higgs_sp4
