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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "higgs_sp4/numfield.hpp"

namespace higgs_sp4 {

/// Dense square matrix over FieldElem, dimension 2 or 4.
class SqMatrix {
  public:
    SqMatrix() : SqMatrix(2) {}
    explicit SqMatrix(std::size_t dim);
    SqMatrix(std::initializer_list<std::initializer_list<FieldElem>> rows);
    static SqMatrix from_rows(const std::vector<std::vector<FieldElem>> &rows);

    static SqMatrix identity(std::size_t dim);
    static SqMatrix zero(std::size_t dim) { return SqMatrix(dim); }
    static SqMatrix diag(const std::vector<FieldElem> &d);
    /// 4x4 matrix with 2x2 blocks (A B; C D).
    static SqMatrix block(const SqMatrix &a, const SqMatrix &b, const SqMatrix &c,
                          const SqMatrix &d);

    std::size_t dim() const { return dim_; }
    const FieldElem &operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }
    FieldElem &operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }

    /// 2x2 block (br, bc) of a 4x4 matrix.
    SqMatrix block_at(std::size_t br, std::size_t bc) const;

    SqMatrix transpose() const;
    SqMatrix conj() const;
    FieldElem trace() const;
    FieldElem det() const;
    SqMatrix adjugate() const;
    /// Throws SingularMatrix.
    SqMatrix inverse() const;
    bool is_zero() const;
    bool is_diagonal() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    SqMatrix operator-() const;
    SqMatrix &operator+=(const SqMatrix &o);
    SqMatrix &operator-=(const SqMatrix &o);
    friend SqMatrix operator+(SqMatrix a, const SqMatrix &b) { return a += b; }
    friend SqMatrix operator-(SqMatrix a, const SqMatrix &b) { return a -= b; }
    friend SqMatrix operator*(const SqMatrix &a, const SqMatrix &b);
    friend SqMatrix operator*(const FieldElem &s, const SqMatrix &m);
    friend bool operator==(const SqMatrix &a, const SqMatrix &b)
    {
        return a.dim_ == b.dim_ && a.e_ == b.e_;
    }
    friend bool operator!=(const SqMatrix &a, const SqMatrix &b) { return !(a == b); }

    std::string to_string() const;

  private:
    std::size_t dim_;
    std::vector<FieldElem> e_;
};

SqMatrix kron(const SqMatrix &a, const SqMatrix &b);

/// gᵀ J g == J.
bool is_symplectic(const SqMatrix &g, const SqMatrix &j);

/// The scalar c with Mᵀ J M = c J, if one exists.
std::optional<FieldElem> preserves_symplectic_up_to_scalar(const SqMatrix &m, const SqMatrix &j);

/// X lies in the Lie algebra of the form J: Xᵀ J + J X = 0.
bool in_symplectic_algebra(const SqMatrix &x, const SqMatrix &j);

/// P M P⁻¹. Throws SingularMatrix.
SqMatrix conjugate(const SqMatrix &m, const SqMatrix &p);

/// Finite exponential series. Throws InvalidArgument unless m is nilpotent.
SqMatrix exp_nilpotent(const SqMatrix &m);
bool is_nilpotent(const SqMatrix &m);

/// Mixed-product, transpose and exp-additivity identities for the given
/// 2x2 inputs. exp is checked on (a, b) when both are nilpotent, else on
/// their strictly upper / strictly lower parts.
bool kron_identities_check(const SqMatrix &a, const SqMatrix &b, const SqMatrix &c,
                           const SqMatrix &d);

namespace mat {

SqMatrix I2();
SqMatrix I4();
/// (0 1; -1 0)
SqMatrix J();
SqMatrix J13();
SqMatrix J12();
SqMatrix J0();
/// Coordinate swap of the middle basis vectors: A⊗B = h (B⊗A) h.
SqMatrix h_perm();
/// Symmetrizer with 1/sqrt3 entries: h_sym3ᵀ J0 h_sym3 = J13.
SqMatrix h_sym3();
/// (I iI; I -iI)
SqMatrix T();
SqMatrix H_tilde();
/// H_tilde * T, the full change of basis used by phi.
SqMatrix P();
SqMatrix E11();
SqMatrix E22();

} // namespace mat

} // namespace higgs_sp4
