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

#include <gtest/gtest.h>

#include "datum_gen.hpp"
#include "gl_oracle.hpp"
#include "higgs_sp4/error.hpp"
#include "higgs_sp4/higgs.hpp"
#include "oracles.hpp"

using namespace higgs_sp4;

namespace {

struct Fixture {
    CurveCtx ctx;
    LineBundleClass K;
    explicit Fixture(int g) : ctx(CurveCtx::make(g)), K(LineBundleClass::canonical(ctx)) {}

    SectionSlot unit(const LineBundleClass &b, std::size_t k = 0) const
    {
        SectionSlot s = SectionSlot::zero(ctx, b);
        s.coeffs.at(k) = FieldElem(1);
        return s;
    }
    SectionSlot zero(const LineBundleClass &b) const { return SectionSlot::zero(ctx, b); }

    DiagonalShape diag(const LineBundleClass &n, bool b1, bool b2) const
    {
        return DiagonalShape::make(ctx, n, b1 ? unit(DiagonalShape::beta1_bundle(ctx, n)) : zero(DiagonalShape::beta1_bundle(ctx, n)),
                                   b2 ? unit(DiagonalShape::beta2_bundle(ctx, n)) : zero(DiagonalShape::beta2_bundle(ctx, n)),
                                   zero(DiagonalShape::beta3_bundle(ctx)));
    }
    F2Vec bits(const char *s) const { return F2Vec::parse(s); }
    SL2RDatum sl2(const LineBundleClass &l, bool beta, bool gamma, std::optional<long> gh0 = std::nullopt) const
    {
        const LineBundleClass bb = l.pow(2) * K, gb = l.pow(-2) * K;
        SectionSlot b = SectionSlot::zero(ctx, bb), c = SectionSlot::zero(ctx, gb, gh0);
        if (beta) b.coeffs.at(0) = FieldElem(1);
        if (gamma) c.coeffs.at(0) = FieldElem(1);
        return SL2RDatum::make(ctx, l, b, c);
    }
};

} // namespace

TEST(LineBundleClass, DegreeAndOperations)
{
    Fixture f(3);
    const LineBundleClass n = LineBundleClass::make(f.ctx, 3, 1, f.bits("100100"));
    EXPECT_EQ(n.degree(f.ctx), 7);
    EXPECT_EQ(n.dual().degree(f.ctx), -7);
    EXPECT_EQ((n * n.dual()), LineBundleClass::trivial(f.ctx));
    EXPECT_TRUE(n.pow(2).torsion.is_zero());
    EXPECT_EQ(n.pow(3).torsion, n.torsion);
    EXPECT_TRUE(LineBundleClass::sqrt_k(f.ctx, f.bits("000001")).is_theta_characteristic());
    EXPECT_THROW(LineBundleClass::make(f.ctx, 1, 0, f.bits("01")), Error);
}

TEST(H0, RiemannRochAndKnownBundles)
{
    Fixture f(3);
    EXPECT_EQ(h0(f.ctx, LineBundleClass::make(f.ctx, 0, -1)), 0);
    EXPECT_EQ(h0(f.ctx, f.K.pow(2)), 3 * 3 - 3);
    EXPECT_EQ(h0(f.ctx, LineBundleClass::make(f.ctx, 0, 5)), 5 - 3 + 1);
    EXPECT_EQ(h0(f.ctx, LineBundleClass::trivial(f.ctx)), 1);
    EXPECT_EQ(h0(f.ctx, f.K), 3);
    try {
        h0(f.ctx, LineBundleClass::make(f.ctx, 1, 0));
        FAIL() << "expected RequiresExplicitH0";
    } catch (const RequiresExplicitH0 &e) {
        EXPECT_EQ(e.degree(), 2);
    }
}

TEST(SectionSlot, DimensionChecks)
{
    Fixture f(2);
    EXPECT_THROW(SectionSlot::make(f.ctx, f.K.pow(2), {1, 2}), Error);
    EXPECT_NO_THROW(SectionSlot::make(f.ctx, f.K.pow(2), {1, 2, 3}));
    EXPECT_NO_THROW(SectionSlot::make(f.ctx, LineBundleClass::make(f.ctx, 1, 0), {1}, 1));
    EXPECT_TRUE(SectionSlot::square_of(f.K, 0, {1}).is_zero());
    EXPECT_FALSE(SectionSlot::square_of(f.K, 2, {1}).is_zero());
}

// The nine Sp(4,R) cases and the three SL(2,R) cases.
TEST(StabilityTable, Sp4Cases)
{
    Fixture f(2);
    const auto K32 = LineBundleClass::make(f.ctx, 3, 0);
    const auto K12 = LineBundleClass::sqrt_k(f.ctx, f.bits("0100"));
    struct Row {
        HiggsDatum d;
        Stability v;
        const char *clause;
    };
    const Row rows[] = {
        {f.diag(K32, false, true), Stability::Stable, "Prop. stability 1(a)i"},
        {f.diag(K32, true, false), Stability::Unstable, "Prop. stability 1(a)ii"},
        {f.diag(K12, true, true), Stability::Stable, "Prop. stability 1(b)i"},
        {f.diag(K12, true, false), Stability::SemistableNotPoly, "Prop. stability 1(b)ii"},
        {f.diag(K12, false, true), Stability::SemistableNotPoly, "Prop. stability 1(b)ii"},
        {f.diag(K12, false, false), Stability::StrictlyPolystable, "Prop. stability 1(b)iii"},
        {CoverOrthShape{f.bits("0010"), 1, true, false}, Stability::Stable, "Prop. stability 2"},
        {TorsionSplitShape{f.bits("1000"), f.bits("0001"), f.zero(f.K.pow(2)), f.zero(f.K.pow(2))},
         Stability::Stable, "Prop. stability 3(b)"},
        {TorsionSplitShape{f.bits("1000"), f.bits("1000"), f.unit(f.K.pow(2)), f.zero(f.K.pow(2))},
         Stability::StrictlyPolystable, "Prop. stability 3(a)"},
    };
    for (const auto &r : rows) {
        const StabilityResult s = stability_sp4(f.ctx, r.d);
        EXPECT_EQ(s.verdict, r.v) << r.clause;
        EXPECT_EQ(s.clause, r.clause);
    }
}

TEST(StabilityTable, SL2Cases)
{
    Fixture f(3);
    const auto pos = LineBundleClass::sqrt_k(f.ctx, f.ctx.zero_torsion());
    const auto neg = pos.dual();
    const auto deg0 = LineBundleClass::torsion_bundle(f.ctx, f.bits("010000"));
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(pos, false, true)).verdict, Stability::Stable);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(pos, true, false)).verdict, Stability::Unstable);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(neg, true, false)).verdict, Stability::Stable);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(neg, false, true)).verdict, Stability::Unstable);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(deg0, false, false)).verdict, Stability::StrictlyPolystable);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(deg0, true, true)).verdict, Stability::StrictlyPolystable);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(deg0, true, false)).verdict, Stability::SemistableNotPoly);
    // Beyond the Milnor-Wood range for SL(2,R).
    const auto big = LineBundleClass::make(f.ctx, 0, 3);
    EXPECT_EQ(stability_sl2(f.ctx, f.sl2(big, true, false)).verdict, Stability::Unstable);
}

TEST(Stability, OutOfRangeRefused)
{
    Fixture f(3);
    EXPECT_THROW(stability_sp4(f.ctx, f.diag(LineBundleClass::make(f.ctx, 0, 1), false, false)), Error);
    EXPECT_THROW(stability_sp4(f.ctx, CoverOrthShape{f.ctx.zero_torsion(), 0, false, false}), Error);
}

TEST(Stability, AgreesWithGlCoordinateOracle)
{
    oracle::Sampler s(51);
    std::size_t checked = 0;
    for (int g : {2, 3, 4}) {
        Fixture f(g);
        for (int k = 0; k < 40; ++k) {
            // Random diagonal data with deg N in [g-1, 3g-3].
            const long d = s.integer(g - 1, 3 * g - 3);
            const LineBundleClass n = d == 3 * g - 3   ? LineBundleClass::make(f.ctx, 3, 0, s.bits(f.ctx.f2_len()))
                                      : d == g - 1 ? LineBundleClass::sqrt_k(f.ctx, s.bits(f.ctx.f2_len()))
                                                   : LineBundleClass::make(f.ctx, 1, d - (g - 1));
            const LineBundleClass b2 = DiagonalShape::beta2_bundle(f.ctx, n);
            std::optional<long> h0b2;
            if (b2.degree(f.ctx) >= 0 && b2.degree(f.ctx) <= 2 * g - 2 && !b2.is_trivial() && b2 != f.K) h0b2 = 1;
            const DiagonalShape ds = DiagonalShape::make(
                f.ctx, n, oracle::random_slot(f.ctx, DiagonalShape::beta1_bundle(f.ctx, n), s, false),
                oracle::random_slot(f.ctx, b2, s, false, h0b2),
                oracle::random_slot(f.ctx, DiagonalShape::beta3_bundle(f.ctx), s, false));
            const HiggsDatum datum(ds);
            EXPECT_EQ(oracle::collapse(stability_sp4(f.ctx, datum).verdict),
                      oracle::gl_coordinate_verdict(f.ctx, to_split_pair(f.ctx, datum)));
            ++checked;
        }
        for (int k = 0; k < 20; ++k) {
            // SL(2,R) data of every admissible degree, alone and embedded.
            const long d = s.integer(-(g - 1), g - 1);
            const LineBundleClass l = LineBundleClass::make(f.ctx, 0, d);
            const LineBundleClass bb = l.pow(2) * f.K, gb = l.pow(-2) * f.K;
            auto special = [&](const LineBundleClass &b) -> std::optional<long> {
                const long e = b.degree(f.ctx);
                if (e >= 0 && e <= 2 * g - 2 && !b.is_trivial() && b != f.K) return 1;
                return std::nullopt;
            };
            const SL2RDatum sd = SL2RDatum::make(f.ctx, l, oracle::random_slot(f.ctx, bb, s, false, special(bb)),
                                                 oracle::random_slot(f.ctx, gb, s, false, special(gb)));
            EXPECT_EQ(oracle::collapse(stability_sl2(f.ctx, sd).verdict),
                      oracle::gl_coordinate_verdict(f.ctx, to_split_pair(f.ctx, sd)))
                << "deg L = " << d;
            if (d >= 0) {
                const IrrImageShape irr{l, sd.beta_t, sd.gamma_t};
                const bool classified = d > 0 || sd.beta_t.is_zero() == sd.gamma_t.is_zero();
                if (classified) {
                    EXPECT_EQ(oracle::collapse(stability_sp4(f.ctx, irr).verdict),
                              oracle::gl_coordinate_verdict(f.ctx, to_split_pair(f.ctx, irr)))
                        << "irr deg L = " << d;
                }
            }
            ++checked;
        }
        for (auto fam : oracle::all_families()) {
            if (fam == oracle::Family::CoverOrth) continue;
            const HiggsDatum datum = oracle::make_datum(f.ctx, fam, s);
            EXPECT_EQ(oracle::collapse(stability_sp4(f.ctx, datum).verdict),
                      oracle::gl_coordinate_verdict(f.ctx, to_split_pair(f.ctx, datum)))
                << oracle::family_name(fam);
            ++checked;
        }
    }
    EXPECT_GE(checked, 200U);
}

TEST(Toledo, MaximalityAndMilnorWood)
{
    Fixture f(3);
    EXPECT_EQ(toledo(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), false, true)), 4);
    EXPECT_TRUE(is_maximal(f.ctx, CoverOrthShape{f.bits("100000"), 0, false, false}));
    const SL2RDatum half = f.sl2(LineBundleClass::make(f.ctx, 0, 1), false, true, 1);
    EXPECT_EQ(toledo(f.ctx, half), 1);
    EXPECT_FALSE(is_maximal(f.ctx, half));
    EXPECT_TRUE(milnor_wood(f.ctx, -4));
    EXPECT_FALSE(milnor_wood(f.ctx, 5));
}

TEST(Cayley, PartnerCases)
{
    Fixture f(2);
    const F2Vec spin = f.bits("0001");
    const auto c1 = cayley_partner(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), false, true), spin);
    EXPECT_EQ(c1.kind, CayleyPartner::Case::SplitSO2);
    ASSERT_TRUE(c1.L.has_value());
    EXPECT_EQ(c1.L->degree(f.ctx), 2 * 2 - 2);
    EXPECT_EQ(c1.L->torsion, spin);
    EXPECT_TRUE(c1.theta_present);

    const auto c2 = cayley_partner(f.ctx, CoverOrthShape{f.bits("0110"), 1, false, false}, spin);
    EXPECT_EQ(c2.kind, CayleyPartner::Case::ConnectedCover);
    EXPECT_EQ(*c2.w1, f.bits("0110"));
    EXPECT_FALSE(c2.theta_present);

    const auto c3 = cayley_partner(
        f.ctx, TorsionSplitShape{f.bits("1000"), f.bits("0100"), f.zero(f.K.pow(2)), f.zero(f.K.pow(2))}, spin);
    EXPECT_EQ(c3.kind, CayleyPartner::Case::TorsionPair);
    EXPECT_EQ(c3.torsion_pair->first, f.bits("1001"));

    EXPECT_THROW(cayley_partner(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), true, false), spin), Error);
}

TEST(SWInvariants, ByShape)
{
    Fixture f(2);
    const auto inv1 = sw_invariants(f.ctx, TorsionSplitShape{f.bits("1000"), f.bits("0010"), f.zero(f.K.pow(2)),
                                                               f.zero(f.K.pow(2))});
    EXPECT_EQ(inv1.w1, f.bits("1010"));
    EXPECT_EQ(*inv1.w2, 1);
    EXPECT_FALSE(inv1.c.has_value());
    const auto inv2 = sw_invariants(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), false, true));
    EXPECT_EQ(*inv2.c, 2);
    EXPECT_EQ(inv2.toledo, 2);
    const auto inv3 = sw_invariants(f.ctx, CoverOrthShape{f.bits("1100"), 1, false, false});
    EXPECT_EQ(*inv3.w2, 1);
    EXPECT_THROW(sw_invariants(f.ctx, f.diag(LineBundleClass::sqrt_k(f.ctx, f.ctx.zero_torsion()), true, false)),
                 Error);
}

TEST(ReductionCheckers, Preconditions)
{
    Fixture f(3);
    const SL2RDatum half = f.sl2(LineBundleClass::make(f.ctx, 0, 1), false, true, 1);
    const HiggsDatum nonmax = DirectSum{{half, f.sl2(LineBundleClass::make(f.ctx, 0, 0), false, false)}};
    try {
        gdelta_reduction_check(f.ctx, nonmax);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotMaximal);
    }
    try {
        gp_reduction_check(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), true, false));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotPolystable);
    }
}

TEST(ReductionCheckers, Witnesses)
{
    Fixture f(2);
    const auto K12 = LineBundleClass::sqrt_k(f.ctx, f.ctx.zero_torsion());
    EXPECT_TRUE(gdelta_reduction_check(f.ctx, f.diag(K12, false, false)));
    EXPECT_FALSE(gdelta_reduction_check(f.ctx, f.diag(K12, true, true)));
    EXPECT_TRUE(sl2xsl2_reduction_check(f.ctx, f.diag(K12, true, true)));
    EXPECT_TRUE(gp_reduction_check(f.ctx, f.diag(K12, true, true)));
    EXPECT_FALSE(gp_reduction_check(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), false, true)));
    EXPECT_TRUE(gdelta_reduction_check(f.ctx, CoverOrthShape{f.bits("0100"), 0, true, true}));
    EXPECT_FALSE(gdelta_reduction_check(f.ctx, CoverOrthShape{f.bits("0100"), 0, true, false}));
    const SectionSlot b = f.unit(f.K.pow(2), 1);
    EXPECT_TRUE(gdelta_reduction_check(f.ctx, TorsionSplitShape{f.bits("1000"), f.bits("0000"), b, b}));
    EXPECT_FALSE(gdelta_reduction_check(
        f.ctx, TorsionSplitShape{f.bits("1000"), f.bits("0000"), b, b.scaled(FieldElem(2))}));
}

TEST(IrrEmbed, NormalFormAndGiCheck)
{
    oracle::Sampler s(52);
    for (int g : {2, 3, 4}) {
        Fixture f(g);
        for (int k = 0; k < 5; ++k) {
            const SL2RDatum sd = oracle::maximal_sl2r(f.ctx, s.bits(f.ctx.f2_len()), s);
            const HiggsDatum d = irr_embed(f.ctx, sd);
            ASSERT_TRUE(d.is<DiagonalShape>());
            const auto &ds = d.as<DiagonalShape>();
            EXPECT_EQ(ds.N, sd.L.pow(3));
            EXPECT_EQ(ds.beta2.coeffs, std::vector<FieldElem>{FieldElem(1)});
            EXPECT_EQ(ds.beta3, sd.beta_t.scaled(FieldElem(5) * sd.gamma_t.coeffs[0]));
            EXPECT_EQ(stability_sp4(f.ctx, d).verdict, Stability::Stable);
            EXPECT_TRUE(gi_reduction_check(f.ctx, d));
            EXPECT_TRUE(is_maximal(f.ctx, d));
            if (!ds.beta3.is_zero()) {
                DiagonalShape bent = ds;
                bent.beta1.square->scale = FieldElem::fraction(1, 2);
                EXPECT_FALSE(gi_reduction_check(f.ctx, bent));
            }
        }
    }
}

TEST(IrrEmbed, InvariantRatioMatchesSConjugation)
{
    // In the S-normal form β = γ(16 r², 5 r; 5 r, 1): β1 β2 / β3² = 16/25.
    oracle::Sampler s(53);
    for (int k = 0; k < 10; ++k) {
        const FieldElem beta = s.field_element(), gamma = s.nonzero_field_element();
        if (beta.is_zero()) continue;
        const SqMatrix m = s_normal_form(beta, gamma);
        EXPECT_EQ(m(0, 2) * m(1, 3) / (m(0, 3) * m(0, 3)), FieldElem::fraction(16, 25));
    }
}

TEST(IrrEmbed, LowerDegreesStayIrreducibleImages)
{
    oracle::Sampler s(54);
    Fixture f(4);
    for (long d = 1; d < 3; ++d) {
        const HiggsDatum out = irr_embed(f.ctx, oracle::sl2r_of_degree(f.ctx, d, s));
        EXPECT_TRUE(out.is<IrrImageShape>());
        EXPECT_EQ(toledo(f.ctx, out), 2 * d);
        EXPECT_EQ(stability_sp4(f.ctx, out).verdict, Stability::Stable);
    }
    EXPECT_THROW(irr_embed(f.ctx, f.sl2(LineBundleClass::make(f.ctx, 0, 4), true, false)), Error);
}

TEST(DirectSum, TwoMaximalSL2RBecomeTorsionSplit)
{
    oracle::Sampler s(55);
    Fixture f(3);
    const auto a = oracle::maximal_sl2r(f.ctx, f.bits("100000"), s);
    const auto b = oracle::maximal_sl2r(f.ctx, f.bits("000100"), s);
    const HiggsDatum d = direct_sum(f.ctx, a, b);
    ASSERT_TRUE(d.is<TorsionSplitShape>());
    EXPECT_EQ(d.as<TorsionSplitShape>().L2_torsion, f.bits("000100"));
    EXPECT_EQ(stability_sp4(f.ctx, d).verdict, Stability::Stable);
    EXPECT_EQ(stability_sp4(f.ctx, DirectSum{{a, b}}).verdict, Stability::Stable);
}

TEST(IsoNormalForm, ScalesFirstNonzeroCoordinate)
{
    Fixture f(3);
    const LineBundleClass n = LineBundleClass::make(f.ctx, 1, 1);
    const SectionSlot b1 = SectionSlot::make(f.ctx, DiagonalShape::beta1_bundle(f.ctx, n), {1, 0, 0, 0, 0, 0, 0, 0});
    const SectionSlot b2 = SectionSlot::make(f.ctx, DiagonalShape::beta2_bundle(f.ctx, n), {0, 3, 1, 0});
    const DiagonalShape d = DiagonalShape::make(f.ctx, n, b1, b2, f.zero(DiagonalShape::beta3_bundle(f.ctx)));
    const DiagonalShape nf = iso_normal_form(f.ctx, d);
    EXPECT_EQ(nf.beta2.coeffs, (std::vector<FieldElem>{0, 1, FieldElem::fraction(1, 3), 0}));
    EXPECT_EQ(nf.beta1.coeffs[0], FieldElem(3));
    EXPECT_EQ(iso_normal_form(f.ctx, nf), nf);

    DiagonalShape unstable = d;
    unstable.beta2 = f.zero(DiagonalShape::beta2_bundle(f.ctx, n));
    EXPECT_THROW(iso_normal_form(f.ctx, unstable), Error);
    EXPECT_THROW(iso_normal_form(f.ctx, f.diag(LineBundleClass::sqrt_k(f.ctx, f.ctx.zero_torsion()), true, true)),
                 Error);
    const DiagonalShape hitchin = f.diag(LineBundleClass::make(f.ctx, 3, 0), false, true);
    EXPECT_EQ(iso_normal_form(f.ctx, hitchin), hitchin);
}

TEST(HitchinMinimum, ByComponent)
{
    Fixture f(2);
    EXPECT_TRUE(is_hitchin_minimum(f.ctx, f.diag(LineBundleClass::make(f.ctx, 3, 0), false, true)));
    EXPECT_FALSE(is_hitchin_minimum(f.ctx, f.diag(LineBundleClass::sqrt_k(f.ctx, f.ctx.zero_torsion()), true, true)));
    EXPECT_TRUE(is_hitchin_minimum(f.ctx, f.diag(LineBundleClass::sqrt_k(f.ctx, f.ctx.zero_torsion()), false, false)));
    EXPECT_TRUE(is_hitchin_minimum(f.ctx, CoverOrthShape{f.bits("1000"), 0, false, false}));
}

TEST(SplitPair, DualityAndDegree)
{
    oracle::Sampler s(56);
    Fixture f(3);
    for (auto fam : oracle::all_families()) {
        if (fam == oracle::Family::CoverOrth) continue;
        const SplitHiggsPair p = to_split_pair(f.ctx, oracle::make_datum(f.ctx, fam, s));
        const SplitHiggsPair dd = dual(dual(p));
        EXPECT_EQ(dd.v, p.v);
        EXPECT_EQ(dd.beta_nonzero, p.beta_nonzero);
        EXPECT_EQ(dual(p).degree(f.ctx), -p.degree(f.ctx));
        EXPECT_EQ(p.degree(f.ctx), 2 * (f.ctx.genus - 1)) << oracle::family_name(fam);
    }
    EXPECT_THROW(to_split_pair(f.ctx, CoverOrthShape{f.bits("100000"), 0, false, false}), Error);
}
