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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "higgs_sp4/matalg.hpp"
#include "higgs_sp4/numfield.hpp"

namespace higgs_sp4 {

/// (a b; c d) with ad - bc = 1.
class SL2Elem {
  public:
    /// Throws InvalidArgument unless ad - bc = 1.
    static SL2Elem make(const FieldElem &a, const FieldElem &b, const FieldElem &c,
                        const FieldElem &d);
    static SL2Elem from_matrix(const SqMatrix &m);
    static SL2Elem identity() { return make(1, 0, 0, 1); }

    const FieldElem &a() const { return m_(0, 0); }
    const FieldElem &b() const { return m_(0, 1); }
    const FieldElem &c() const { return m_(1, 0); }
    const FieldElem &d() const { return m_(1, 1); }
    const SqMatrix &matrix() const { return m_; }

    friend SL2Elem operator*(const SL2Elem &x, const SL2Elem &y) { return SL2Elem(x.m_ * y.m_); }
    friend bool operator==(const SL2Elem &x, const SL2Elem &y) { return x.m_ == y.m_; }

  private:
    explicit SL2Elem(SqMatrix m) : m_(std::move(m)) {}
    SqMatrix m_;
};

/// Traceless 2x2 matrix.
class SL2AlgElem {
  public:
    /// Throws NotInAlgebra unless the trace vanishes.
    static SL2AlgElem make(const SqMatrix &m);
    static SL2AlgElem e();
    static SL2AlgElem f();
    /// diag(1, -1)
    static SL2AlgElem h0();
    /// (x y; y -x)
    static SL2AlgElem symmetric(const FieldElem &x, const FieldElem &y);

    const SqMatrix &matrix() const { return m_; }
    friend SL2AlgElem operator+(const SL2AlgElem &x, const SL2AlgElem &y)
    {
        return SL2AlgElem(x.m_ + y.m_);
    }
    friend SL2AlgElem operator-(const SL2AlgElem &x, const SL2AlgElem &y)
    {
        return SL2AlgElem(x.m_ - y.m_);
    }

  private:
    explicit SL2AlgElem(SqMatrix m) : m_(std::move(m)) {}
    SqMatrix m_;
};

/// Change of basis used by phi: P = H~ T. Swappable so verification suites
/// can run against a modified H~.
struct EmbeddingFrame {
    SqMatrix P;
    SqMatrix P_inv;

    static const EmbeddingFrame &standard();
    static EmbeddingFrame from(const SqMatrix &h_tilde, const SqMatrix &t);
};

/// Irreducible representation in the basis where the form is J0. Accepts any
/// 2x2 matrix of determinant ±1. Throws InvalidArgument otherwise.
SqMatrix rho1(const SqMatrix &a);
inline SqMatrix rho1(const SL2Elem &a) { return rho1(a.matrix()); }

/// Irreducible representation preserving J13.
SqMatrix rho13(const SL2Elem &a);

/// (A, B) -> diag(A, B); symplectic for J12.
SqMatrix rho_p(const SL2Elem &a, const SL2Elem &b);
/// The same embedding written for J13: A⊗E11 + B⊗E22.
SqMatrix rho_p_j13(const SL2Elem &a, const SL2Elem &b);
/// A -> A⊗I; symplectic for J13.
SqMatrix rho_delta(const SL2Elem &a);

SqMatrix phi(const SL2Elem &a, const EmbeddingFrame &frame = EmbeddingFrame::standard());

/// SO(2,C) torus element (a -c; c a) with a + ic = lambda:
/// a = (lambda + 1/lambda)/2, c = (lambda - 1/lambda)/(2i).
SL2Elem torus_element(const FieldElem &lambda);

/// Differential of rho13 at the identity, from the polynomial entries.
SqMatrix rho13_star(const SL2AlgElem &x);
SqMatrix phi_star(const SL2AlgElem &x, const EmbeddingFrame &frame = EmbeddingFrame::standard());

namespace golden {
/// i * diag(-3, 1, 3, -1)
SqMatrix phi_star_e_minus_f();
SqMatrix phi_star_e_plus_f();
SqMatrix phi_star_h0();
} // namespace golden

/// S = (1 2r 0 0; 0 1 0 0; 0 0 1 0; 0 0 -2r 1).
SqMatrix s_matrix(const FieldElem &r);

/// S phi_star((x y; y -x)) S⁻¹ with beta = x + iy, gamma = x - iy and
/// r = beta/gamma. Throws SingularNormalization for gamma = 0.
SqMatrix s_conjugate(const FieldElem &beta, const FieldElem &gamma,
                     const EmbeddingFrame &frame = EmbeddingFrame::standard());

/// gamma * (0 0 16r² 5r; 0 0 5r 1; 0 1 0 0; 1 0 0 0)
SqMatrix s_normal_form(const FieldElem &beta, const FieldElem &gamma);

/// Form transported by P; fixed once: (P⁻¹)ᵀ J13 P⁻¹.
const SqMatrix &transported_form();

struct CartanSplit {
    SqMatrix h_part;
    SqMatrix m_part;
    SqMatrix Z;
    SqMatrix beta;
    SqMatrix gamma;
};

/// Splits X = (Z β; γ -Zᵀ). Throws NotInAlgebra unless X preserves the
/// transported form infinitesimally.
CartanSplit cartan_split(const SqMatrix &x);

/// (beta~, gamma~) when X = (0 beta~ I; gamma~ I 0).
std::optional<std::pair<FieldElem, FieldElem>> m_delta_membership(const SqMatrix &x);

/// (a I  b I; b I  -a I)
SqMatrix m_delta_real_form(const FieldElem &a, const FieldElem &b);
/// beta~ = 2(a + ib), gamma~ = 2(a - ib).
std::pair<FieldElem, FieldElem> m_delta_tilde_coordinates(const FieldElem &a, const FieldElem &b);
/// (0 beta~ I; gamma~ I 0)
SqMatrix m_delta_matrix(const FieldElem &beta_t, const FieldElem &gamma_t);

/// M = (A B; -B A) with AᵀA + BᵀB = I and AᵀB = BᵀA.
bool in_u2(const SqMatrix &m);

struct NormalizerReport {
    bool normalizes = false;
    bool det_is_one = false;
    bool symplectic_for_j0 = true;
    std::size_t generators_checked = 0;

    /// What the witness should look like: normalizes, det 1, not symplectic.
    bool as_expected() const { return normalizes && det_is_one && !symplectic_for_j0; }
};

/// Checks that rho1 of the swap (0 1; 1 0) normalizes rho1(SL2) on sampled
/// generators, has determinant 1 and does not preserve J0.
NormalizerReport normalizer_witness_check();

} // namespace higgs_sp4
