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
#include <variant>
#include <vector>

#include "higgs_sp4/f2.hpp"
#include "higgs_sp4/numfield.hpp"

namespace higgs_sp4 {

/// A compact Riemann surface of genus >= 2, together with the label of the
/// square root of K used as origin for spin labels.
struct CurveCtx {
    int genus = 2;
    F2Vec spin_base;

    /// Throws InvalidArgument for genus < 2 or genus > 1000.
    static CurveCtx make(int genus);
    static CurveCtx make(int genus, const F2Vec &spin_base);

    std::size_t f2_len() const { return 2 * static_cast<std::size_t>(genus); }
    F2Vec zero_torsion() const { return F2Vec(f2_len()); }
};

/// Formal line bundle K0^{k_half/2} ⊗ D ⊗ T, where K0^{1/2} is the base
/// square root of K, D a generic bundle of degree extra_degree, and T the
/// 2-torsion bundle labelled by `torsion`.
struct LineBundleClass {
    int k_half = 0;
    long extra_degree = 0;
    F2Vec torsion;

    static LineBundleClass make(const CurveCtx &ctx, int k_half, long extra_degree = 0);
    static LineBundleClass make(const CurveCtx &ctx, int k_half, long extra_degree,
                                const F2Vec &torsion);
    static LineBundleClass trivial(const CurveCtx &ctx) { return make(ctx, 0); }
    static LineBundleClass canonical(const CurveCtx &ctx) { return make(ctx, 2); }
    /// K^{1/2} ⊗ T_torsion.
    static LineBundleClass sqrt_k(const CurveCtx &ctx, const F2Vec &torsion);
    static LineBundleClass torsion_bundle(const CurveCtx &ctx, const F2Vec &torsion);

    long degree(const CurveCtx &ctx) const;
    LineBundleClass dual() const;
    LineBundleClass pow(int n) const;
    bool is_trivial() const { return k_half == 0 && extra_degree == 0 && torsion.is_zero(); }
    /// K^{1/2} ⊗ T for some T.
    bool is_theta_characteristic() const { return k_half == 1 && extra_degree == 0; }

    friend LineBundleClass operator*(const LineBundleClass &a, const LineBundleClass &b);
    friend bool operator==(const LineBundleClass &a, const LineBundleClass &b)
    {
        return a.k_half == b.k_half && a.extra_degree == b.extra_degree && a.torsion == b.torsion;
    }
    friend bool operator!=(const LineBundleClass &a, const LineBundleClass &b) { return !(a == b); }

    std::string to_string() const;
};

/// dim H^0. Riemann-Roch outside [0, 2g-2]; inside, only O and K are known.
/// Throws RequiresExplicitH0 otherwise.
long h0(const CurveCtx &ctx, const LineBundleClass &bundle);

/// scale * s^2 for a section s given by its coordinates.
struct SquareTerm {
    FieldElem scale;
    std::vector<FieldElem> base;

    friend bool operator==(const SquareTerm &a, const SquareTerm &b)
    {
        return a.scale == b.scale && a.base == b.base;
    }
};

/// A global section of `bundle`, stored by coordinates in a fixed basis of
/// H^0, or symbolically as a square.
struct SectionSlot {
    LineBundleClass bundle;
    std::vector<FieldElem> coeffs;
    std::optional<long> h0_override;
    std::optional<SquareTerm> square;

    /// Coordinates; the length is checked against h0 (or the override).
    static SectionSlot make(const CurveCtx &ctx, const LineBundleClass &bundle,
                            std::vector<FieldElem> coeffs,
                            std::optional<long> h0_override = std::nullopt);
    static SectionSlot zero(const CurveCtx &ctx, const LineBundleClass &bundle,
                            std::optional<long> h0_override = std::nullopt);
    /// First basis section. Throws InvalidArgument when h0 = 0.
    static SectionSlot unit(const CurveCtx &ctx, const LineBundleClass &bundle,
                            std::optional<long> h0_override = std::nullopt);
    static SectionSlot square_of(const LineBundleClass &bundle, const FieldElem &scale,
                                 std::vector<FieldElem> base);

    bool is_zero() const;
    SectionSlot scaled(const FieldElem &t) const;
    /// Throws DimensionMismatch when the coordinate count disagrees with h0.
    void validate(const CurveCtx &ctx) const;

    friend bool operator==(const SectionSlot &a, const SectionSlot &b)
    {
        return a.bundle == b.bundle && a.coeffs == b.coeffs && a.square == b.square;
    }
};

/// V = N ⊕ N⁻¹K, γ = antidiag(1, 1), β = (β1 β3; β3 β2).
struct DiagonalShape {
    LineBundleClass N;
    SectionSlot beta1; // H^0(N²K)
    SectionSlot beta2; // H^0(N⁻²K³)
    SectionSlot beta3; // H^0(K²)

    static DiagonalShape make(const CurveCtx &ctx, const LineBundleClass &n, SectionSlot beta1,
                              SectionSlot beta2, SectionSlot beta3);
    /// Bundles carrying β1, β2, β3 for a given N.
    static LineBundleClass beta1_bundle(const CurveCtx &ctx, const LineBundleClass &n);
    static LineBundleClass beta2_bundle(const CurveCtx &ctx, const LineBundleClass &n);
    static LineBundleClass beta3_bundle(const CurveCtx &ctx);

    friend bool operator==(const DiagonalShape &a, const DiagonalShape &b)
    {
        return a.N == b.N && a.beta1 == b.beta1 && a.beta2 == b.beta2 && a.beta3 == b.beta3;
    }
};

/// V = W ⊗ K^{1/2}, W the rank 2 orthogonal bundle of a connected double
/// cover. w2 is carried as input.
struct CoverOrthShape {
    F2Vec w1;
    int w2 = 0;
    bool beta_present = false;
    /// β = q_W ⊗ β~ for a quadratic differential β~.
    bool beta_q_multiple = false;
};

/// V = (L1 ⊕ L2) ⊗ K^{1/2} with L_i² = O and diagonal β, γ.
struct TorsionSplitShape {
    F2Vec L1_torsion;
    F2Vec L2_torsion;
    SectionSlot beta1; // H^0(K²)
    SectionSlot beta2; // H^0(K²)
};

/// SL(2,R)-Higgs bundle: β~ in H^0(L²K), γ~ in H^0(L⁻²K).
struct SL2RDatum {
    LineBundleClass L;
    SectionSlot beta_t;
    SectionSlot gamma_t;

    static SL2RDatum make(const CurveCtx &ctx, const LineBundleClass &l, SectionSlot beta_t,
                          SectionSlot gamma_t);
};

/// Image of an SL(2,R) datum under the irreducible representation:
/// V = L³ ⊕ L⁻¹, β = (0 3β~; 3β~ γ~), γ = (0 γ~; γ~ 4β~).
struct IrrImageShape {
    LineBundleClass L;
    SectionSlot beta_t;
    SectionSlot gamma_t;
};

struct HiggsDatum;

struct DirectSum {
    std::vector<HiggsDatum> summands;
};

struct HiggsDatum {
    using Shape = std::variant<DiagonalShape, CoverOrthShape, TorsionSplitShape, SL2RDatum,
                               IrrImageShape, DirectSum>;
    Shape shape;

    HiggsDatum(DiagonalShape s) : shape(std::move(s)) {}     // NOLINT
    HiggsDatum(CoverOrthShape s) : shape(std::move(s)) {}    // NOLINT
    HiggsDatum(TorsionSplitShape s) : shape(std::move(s)) {} // NOLINT
    HiggsDatum(SL2RDatum s) : shape(std::move(s)) {}         // NOLINT
    HiggsDatum(IrrImageShape s) : shape(std::move(s)) {}     // NOLINT
    HiggsDatum(DirectSum s) : shape(std::move(s)) {}         // NOLINT

    template <class S> bool is() const { return std::holds_alternative<S>(shape); }
    template <class S> const S &as() const { return std::get<S>(shape); }
    /// "diagonal", "cover_orth", "torsion_split", "sl2r", "irr_image", "direct_sum".
    std::string shape_name() const;
};

/// Checks torsion lengths, slot bundles and slot dimensions.
void validate(const CurveCtx &ctx, const HiggsDatum &datum);

/// Rank of V.
int rank(const HiggsDatum &datum);
/// deg V.
long toledo(const CurveCtx &ctx, const HiggsDatum &datum);
bool milnor_wood(const CurveCtx &ctx, long d);
/// deg V = rank(V) (g - 1).
bool is_maximal(const CurveCtx &ctx, const HiggsDatum &datum);

enum class Stability { Stable, StrictlyPolystable, SemistableNotPoly, Unstable };
std::string to_string(Stability s);
inline bool is_polystable(Stability s)
{
    return s == Stability::Stable || s == Stability::StrictlyPolystable;
}

struct StabilityResult {
    Stability verdict;
    std::string clause;
    /// Stable or polystable but with automorphisms beyond ±1.
    bool non_simple = false;
};

/// Throws OutOfClassifiedRange for shapes the case table does not cover.
StabilityResult stability_sp4(const CurveCtx &ctx, const HiggsDatum &datum);
StabilityResult stability_sl2(const CurveCtx &ctx, const SL2RDatum &datum);

struct CayleyPartner {
    enum class Case { SplitSO2 = 1, ConnectedCover = 2, TorsionPair = 3 };
    Case kind;
    /// Case 1: W = L ⊕ L⁻¹.
    std::optional<LineBundleClass> L;
    /// Case 2.
    std::optional<F2Vec> w1;
    /// Case 3: W = L1 ⊕ L2 with L_i² = O.
    std::optional<std::pair<F2Vec, F2Vec>> torsion_pair;
    bool theta_present = false;
};

/// W = V* ⊗ L0 with L0 = K^{1/2} ⊗ T_spin_choice. Throws NotMaximal,
/// NotPolystable.
CayleyPartner cayley_partner(const CurveCtx &ctx, const HiggsDatum &datum,
                             const F2Vec &spin_choice);

struct SWInvariants {
    long toledo = 0;
    F2Vec w1;
    /// Set for rank 2 data with w1 = 0.
    std::optional<long> c;
    /// Set otherwise.
    std::optional<int> w2;
};

SWInvariants sw_invariants(const CurveCtx &ctx, const HiggsDatum &datum);

bool gdelta_reduction_check(const CurveCtx &ctx, const HiggsDatum &datum);
bool gp_reduction_check(const CurveCtx &ctx, const HiggsDatum &datum);
bool sl2xsl2_reduction_check(const CurveCtx &ctx, const HiggsDatum &datum);
/// Image of the irreducible SL(2,R) in normal form.
bool gi_reduction_check(const CurveCtx &ctx, const HiggsDatum &datum);

/// Genus of the connected double cover and the pulled back degree.
inline int double_cover_genus(int g) { return 2 * g - 1; }
inline long pullback_degree(long d) { return 2 * d; }

/// Throws NotPolystable, OutOfClassifiedRange (deg L outside [0, g-1]).
HiggsDatum irr_embed(const CurveCtx &ctx, const SL2RDatum &datum);

HiggsDatum direct_sum(const CurveCtx &ctx, const HiggsDatum &a, const HiggsDatum &b);

/// Flattens direct sums; two maximal SL(2,R) data with L = K^{1/2} ⊗ T become
/// a TorsionSplitShape and a maximal irreducible image becomes its diagonal
/// normal form. Other data are returned unchanged.
HiggsDatum normalize(const CurveCtx &ctx, const HiggsDatum &datum);

bool is_hitchin_minimum(const CurveCtx &ctx, const HiggsDatum &datum);

/// Representative of the orbit (t²β1, t⁻²β2, β3). Throws UnstableInput,
/// OutOfClassifiedRange.
DiagonalShape iso_normal_form(const CurveCtx &ctx, const DiagonalShape &datum);

/// V = ⊕ v[i] with the zero pattern of β_ij : V*_j -> V_i ⊗ K and
/// γ_ij : V_j -> V*_i ⊗ K.
struct SplitHiggsPair {
    std::vector<LineBundleClass> v;
    std::vector<std::vector<bool>> beta_nonzero;
    std::vector<std::vector<bool>> gamma_nonzero;

    long degree(const CurveCtx &ctx) const;
};

/// Line-split view of a datum. Throws InvalidArgument for CoverOrthShape.
SplitHiggsPair to_split_pair(const CurveCtx &ctx, const HiggsDatum &datum);
/// (V, β, γ) -> (V*, γ, β).
SplitHiggsPair dual(const SplitHiggsPair &pair);

} // namespace higgs_sp4
