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

#include "higgs_sp4/higgs.hpp"

#include <sstream>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4 {

namespace {

void require_torsion(const CurveCtx &ctx, const F2Vec &t, const char *what)
{
    if (t.size() != ctx.f2_len()) {
        fail(ErrorKind::DimensionMismatch, std::string(what) + ": torsion label must have length 2g = " +
                                               std::to_string(ctx.f2_len()));
    }
}

void require_bundle(const SectionSlot &slot, const LineBundleClass &expected, const char *what)
{
    if (slot.bundle != expected) {
        fail(ErrorKind::InvalidArgument, std::string(what) + ": slot bundle " +
                                             slot.bundle.to_string() + " should be " +
                                             expected.to_string());
    }
}

bool same_section(const SectionSlot &a, const SectionSlot &b)
{
    return a.coeffs == b.coeffs && a.square == b.square;
}

// First coordinate of a slot known to live in a one-dimensional H^0.
FieldElem scalar_of(const SectionSlot &s)
{
    if (s.square) return s.square->base.empty() ? FieldElem(0) : s.square->scale * s.square->base[0] * s.square->base[0];
    return s.coeffs.empty() ? FieldElem(0) : s.coeffs[0];
}

void flatten_into(const HiggsDatum &d, std::vector<HiggsDatum> &out)
{
    if (const auto *sum = std::get_if<DirectSum>(&d.shape)) {
        for (const auto &s : sum->summands) flatten_into(s, out);
        return;
    }
    out.push_back(d);
}

bool is_max_theta_sl2r(const CurveCtx &ctx, const HiggsDatum &d)
{
    if (!d.is<SL2RDatum>()) return false;
    const auto &s = d.as<SL2RDatum>();
    return s.L.is_theta_characteristic() && s.L.degree(ctx) == ctx.genus - 1 && !s.gamma_t.is_zero();
}

// Two maximal SL(2,R) data with L_i = K^{1/2} T_i, rescaled so that γ~_i = 1.
TorsionSplitShape torsion_split_from(const CurveCtx &ctx, const SL2RDatum &a, const SL2RDatum &b)
{
    (void)ctx;
    return TorsionSplitShape{a.L.torsion, b.L.torsion, a.beta_t.scaled(scalar_of(a.gamma_t)),
                             b.beta_t.scaled(scalar_of(b.gamma_t))};
}

DiagonalShape irr_normal_form(const CurveCtx &ctx, const LineBundleClass &l, const SectionSlot &beta_t,
                              const SectionSlot &gamma_t)
{
    const LineBundleClass n = l.pow(3);
    const FieldElem g_t = scalar_of(gamma_t);
    SectionSlot beta3 = beta_t.scaled(FieldElem(5) * g_t);
    SectionSlot beta2 = SectionSlot::unit(ctx, DiagonalShape::beta2_bundle(ctx, n));
    SectionSlot beta1 = SectionSlot::square_of(DiagonalShape::beta1_bundle(ctx, n),
                                               FieldElem::fraction(16, 25), beta3.coeffs);
    return DiagonalShape{n, std::move(beta1), std::move(beta2), std::move(beta3)};
}

HiggsDatum normalize_impl(const CurveCtx &ctx, const HiggsDatum &d);

void require_sp4(const HiggsDatum &d, const char *what)
{
    if (rank(d) != 2) fail(ErrorKind::InvalidArgument, std::string(what) + " pre: rank 2 (Sp(4,R)) datum");
}

void require_max_polystable(const CurveCtx &ctx, const HiggsDatum &d, const char *what)
{
    if (!is_maximal(ctx, d)) {
        fail(ErrorKind::NotMaximal, std::string(what) + " pre: maximal, deg V = rank(V)(g-1)");
    }
    if (!is_polystable(stability_sp4(ctx, d).verdict)) {
        fail(ErrorKind::NotPolystable, std::string(what) + " pre: polystable");
    }
}

long c_of(const CurveCtx &ctx, const DiagonalShape &d) { return d.N.degree(ctx) - (ctx.genus - 1); }

// (w1, w2) of a maximal polystable datum of any rank; w2 = c mod 2 when a
// rank 2 piece has w1 = 0.
std::pair<F2Vec, int> sw_pair(const CurveCtx &ctx, const HiggsDatum &raw)
{
    const HiggsDatum d = normalize_impl(ctx, raw);
    if (d.is<DiagonalShape>()) return {ctx.zero_torsion(), static_cast<int>(c_of(ctx, d.as<DiagonalShape>()) % 2)};
    if (d.is<CoverOrthShape>()) return {d.as<CoverOrthShape>().w1, d.as<CoverOrthShape>().w2 & 1};
    if (d.is<TorsionSplitShape>()) {
        const auto &t = d.as<TorsionSplitShape>();
        return f2_sw_map(t.L1_torsion, t.L2_torsion);
    }
    if (d.is<SL2RDatum>()) {
        const auto &s = d.as<SL2RDatum>();
        if (!s.L.is_theta_characteristic()) {
            fail(ErrorKind::UndeterminedSpin, "sw_invariants: maximal SL(2,R) summand needs L = K^{1/2} (x) T");
        }
        return {s.L.torsion, 0};
    }
    if (d.is<DirectSum>()) {
        F2Vec w1 = ctx.zero_torsion();
        int w2 = 0;
        for (const auto &s : d.as<DirectSum>().summands) {
            auto [a1, a2] = sw_pair(ctx, s);
            w2 ^= a2 ^ f2_pairing(w1, a1);
            w1 = w1 + a1;
        }
        return {w1, w2};
    }
    fail(ErrorKind::OutOfClassifiedRange, "sw_invariants: unsupported shape " + raw.shape_name());
}

// Canonical Sp(4) representative: rank 2 direct sums of maximal SL(2,R)
// data become torsion split shapes, maximal irreducible images become
// diagonal shapes.
HiggsDatum normalize_impl(const CurveCtx &ctx, const HiggsDatum &d)
{
    if (d.is<DirectSum>()) {
        std::vector<HiggsDatum> flat;
        flatten_into(d, flat);
        if (flat.size() == 1) return normalize_impl(ctx, flat[0]);
        if (flat.size() == 2 && is_max_theta_sl2r(ctx, flat[0]) && is_max_theta_sl2r(ctx, flat[1])) {
            return torsion_split_from(ctx, flat[0].as<SL2RDatum>(), flat[1].as<SL2RDatum>());
        }
        return DirectSum{std::move(flat)};
    }
    if (d.is<IrrImageShape>()) {
        const auto &s = d.as<IrrImageShape>();
        if (s.L.is_theta_characteristic() && !s.gamma_t.is_zero()) {
            return irr_normal_form(ctx, s.L, s.beta_t, s.gamma_t);
        }
    }
    return d;
}

} // namespace

HiggsDatum normalize(const CurveCtx &ctx, const HiggsDatum &datum) { return normalize_impl(ctx, datum); }

CurveCtx CurveCtx::make(int genus)
{
    if (genus < 2 || genus > 1000) fail(ErrorKind::InvalidArgument, "CurveCtx: genus g >= 2 (and <= 1000)");
    return CurveCtx{genus, F2Vec(2 * static_cast<std::size_t>(genus))};
}

CurveCtx CurveCtx::make(int genus, const F2Vec &spin_base)
{
    CurveCtx ctx = make(genus);
    require_torsion(ctx, spin_base, "CurveCtx spin_base");
    ctx.spin_base = spin_base;
    return ctx;
}

LineBundleClass LineBundleClass::make(const CurveCtx &ctx, int k_half, long extra_degree)
{
    return LineBundleClass{k_half, extra_degree, ctx.zero_torsion()};
}

LineBundleClass LineBundleClass::make(const CurveCtx &ctx, int k_half, long extra_degree,
                                      const F2Vec &torsion)
{
    require_torsion(ctx, torsion, "LineBundleClass");
    return LineBundleClass{k_half, extra_degree, torsion};
}

LineBundleClass LineBundleClass::sqrt_k(const CurveCtx &ctx, const F2Vec &torsion)
{
    return make(ctx, 1, 0, torsion);
}

LineBundleClass LineBundleClass::torsion_bundle(const CurveCtx &ctx, const F2Vec &torsion)
{
    return make(ctx, 0, 0, torsion);
}

long LineBundleClass::degree(const CurveCtx &ctx) const
{
    return extra_degree + static_cast<long>(k_half) * (ctx.genus - 1);
}

LineBundleClass LineBundleClass::dual() const { return LineBundleClass{-k_half, -extra_degree, torsion}; }

LineBundleClass LineBundleClass::pow(int n) const
{
    return LineBundleClass{k_half * n, extra_degree * n, (n % 2 != 0) ? torsion : F2Vec(torsion.size())};
}

LineBundleClass operator*(const LineBundleClass &a, const LineBundleClass &b)
{
    return LineBundleClass{a.k_half + b.k_half, a.extra_degree + b.extra_degree, a.torsion + b.torsion};
}

std::string LineBundleClass::to_string() const
{
    std::ostringstream os;
    os << "K^(" << k_half << "/2)";
    if (extra_degree != 0) os << "*D(" << extra_degree << ")";
    if (!torsion.is_zero()) os << "*T[" << torsion.to_string() << "]";
    return os.str();
}

long h0(const CurveCtx &ctx, const LineBundleClass &bundle)
{
    const long d = bundle.degree(ctx);
    const long g = ctx.genus;
    if (d < 0) return 0;
    if (d > 2 * g - 2) return d - g + 1;
    if (bundle.is_trivial()) return 1;
    if (bundle == LineBundleClass::canonical(ctx)) return g;
    throw RequiresExplicitH0(d, "h0: " + bundle.to_string() + " has degree " + std::to_string(d) +
                                    " in [0, 2g-2] and no known dimension; supply h0");
}

SectionSlot SectionSlot::make(const CurveCtx &ctx, const LineBundleClass &bundle,
                              std::vector<FieldElem> coeffs, std::optional<long> h0_override)
{
    SectionSlot s{bundle, std::move(coeffs), h0_override, std::nullopt};
    s.validate(ctx);
    return s;
}

SectionSlot SectionSlot::zero(const CurveCtx &ctx, const LineBundleClass &bundle,
                              std::optional<long> h0_override)
{
    const long n = h0_override ? *h0_override : h0(ctx, bundle);
    return SectionSlot{bundle, std::vector<FieldElem>(static_cast<std::size_t>(n)), h0_override, std::nullopt};
}

SectionSlot SectionSlot::unit(const CurveCtx &ctx, const LineBundleClass &bundle,
                              std::optional<long> h0_override)
{
    SectionSlot s = zero(ctx, bundle, h0_override);
    if (s.coeffs.empty()) fail(ErrorKind::InvalidArgument, "unit section of a bundle with h0 = 0");
    s.coeffs[0] = FieldElem(1);
    return s;
}

SectionSlot SectionSlot::square_of(const LineBundleClass &bundle, const FieldElem &scale,
                                   std::vector<FieldElem> base)
{
    return SectionSlot{bundle, {}, std::nullopt, SquareTerm{scale, std::move(base)}};
}

bool SectionSlot::is_zero() const
{
    if (square) {
        if (square->scale.is_zero()) return true;
        for (const auto &x : square->base) {
            if (!x.is_zero()) return false;
        }
        return true;
    }
    for (const auto &x : coeffs) {
        if (!x.is_zero()) return false;
    }
    return true;
}

SectionSlot SectionSlot::scaled(const FieldElem &t) const
{
    SectionSlot s = *this;
    if (s.square) {
        s.square->scale *= t;
    } else {
        for (auto &x : s.coeffs) x *= t;
    }
    return s;
}

void SectionSlot::validate(const CurveCtx &ctx) const
{
    require_torsion(ctx, bundle.torsion, "SectionSlot bundle");
    if (square) return;
    if (h0_override && *h0_override < 0) fail(ErrorKind::InvalidArgument, "h0 override must be >= 0");
    const long expected = h0_override ? *h0_override : h0(ctx, bundle);
    if (static_cast<long>(coeffs.size()) != expected) {
        fail(ErrorKind::DimensionMismatch, "section of " + bundle.to_string() + " needs " +
                                               std::to_string(expected) + " coordinates, got " +
                                               std::to_string(coeffs.size()));
    }
}

LineBundleClass DiagonalShape::beta1_bundle(const CurveCtx &ctx, const LineBundleClass &n)
{
    return n.pow(2) * LineBundleClass::canonical(ctx);
}

LineBundleClass DiagonalShape::beta2_bundle(const CurveCtx &ctx, const LineBundleClass &n)
{
    return n.pow(-2) * LineBundleClass::canonical(ctx).pow(3);
}

LineBundleClass DiagonalShape::beta3_bundle(const CurveCtx &ctx)
{
    return LineBundleClass::canonical(ctx).pow(2);
}

DiagonalShape DiagonalShape::make(const CurveCtx &ctx, const LineBundleClass &n, SectionSlot beta1,
                                  SectionSlot beta2, SectionSlot beta3)
{
    DiagonalShape d{n, std::move(beta1), std::move(beta2), std::move(beta3)};
    validate(ctx, d);
    return d;
}

SL2RDatum SL2RDatum::make(const CurveCtx &ctx, const LineBundleClass &l, SectionSlot beta_t,
                          SectionSlot gamma_t)
{
    SL2RDatum d{l, std::move(beta_t), std::move(gamma_t)};
    validate(ctx, d);
    return d;
}

std::string HiggsDatum::shape_name() const
{
    switch (shape.index()) {
    case 0: return "diagonal";
    case 1: return "cover_orth";
    case 2: return "torsion_split";
    case 3: return "sl2r";
    case 4: return "irr_image";
    default: return "direct_sum";
    }
}

void validate(const CurveCtx &ctx, const HiggsDatum &datum)
{
    const LineBundleClass k = LineBundleClass::canonical(ctx);
    std::visit(
        [&](const auto &s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, DiagonalShape>) {
                require_torsion(ctx, s.N.torsion, "DiagonalShape N");
                require_bundle(s.beta1, DiagonalShape::beta1_bundle(ctx, s.N), "beta1");
                require_bundle(s.beta2, DiagonalShape::beta2_bundle(ctx, s.N), "beta2");
                require_bundle(s.beta3, DiagonalShape::beta3_bundle(ctx), "beta3");
                s.beta1.validate(ctx);
                s.beta2.validate(ctx);
                s.beta3.validate(ctx);
            } else if constexpr (std::is_same_v<S, CoverOrthShape>) {
                require_torsion(ctx, s.w1, "CoverOrthShape w1");
                if (s.w1.is_zero()) fail(ErrorKind::InvalidArgument, "CoverOrthShape needs w1 != 0");
                if (s.w2 != 0 && s.w2 != 1) fail(ErrorKind::InvalidArgument, "w2 must be 0 or 1");
                if (s.beta_q_multiple && !s.beta_present) {
                    fail(ErrorKind::InvalidArgument, "beta_q_multiple needs beta_present");
                }
            } else if constexpr (std::is_same_v<S, TorsionSplitShape>) {
                require_torsion(ctx, s.L1_torsion, "TorsionSplitShape L1");
                require_torsion(ctx, s.L2_torsion, "TorsionSplitShape L2");
                require_bundle(s.beta1, k.pow(2), "beta1");
                require_bundle(s.beta2, k.pow(2), "beta2");
                s.beta1.validate(ctx);
                s.beta2.validate(ctx);
            } else if constexpr (std::is_same_v<S, SL2RDatum> || std::is_same_v<S, IrrImageShape>) {
                require_torsion(ctx, s.L.torsion, "L");
                require_bundle(s.beta_t, s.L.pow(2) * k, "beta~");
                require_bundle(s.gamma_t, s.L.pow(-2) * k, "gamma~");
                s.beta_t.validate(ctx);
                s.gamma_t.validate(ctx);
            } else {
                for (const auto &x : s.summands) validate(ctx, x);
            }
        },
        datum.shape);
}

int rank(const HiggsDatum &datum)
{
    if (datum.is<SL2RDatum>()) return 1;
    if (datum.is<DirectSum>()) {
        int r = 0;
        for (const auto &s : datum.as<DirectSum>().summands) r += rank(s);
        return r;
    }
    return 2;
}

long toledo(const CurveCtx &ctx, const HiggsDatum &datum)
{
    const long g = ctx.genus;
    return std::visit(
        [&](const auto &s) -> long {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, DiagonalShape>) {
                return s.N.degree(ctx) + (s.N.dual() * LineBundleClass::canonical(ctx)).degree(ctx);
            } else if constexpr (std::is_same_v<S, SL2RDatum>) {
                return s.L.degree(ctx);
            } else if constexpr (std::is_same_v<S, IrrImageShape>) {
                return s.L.pow(3).degree(ctx) + s.L.dual().degree(ctx);
            } else if constexpr (std::is_same_v<S, DirectSum>) {
                long d = 0;
                for (const auto &x : s.summands) d += toledo(ctx, x);
                return d;
            } else {
                return 2 * g - 2;
            }
        },
        datum.shape);
}

bool milnor_wood(const CurveCtx &ctx, long d)
{
    const long bound = 2L * ctx.genus - 2;
    return d <= bound && d >= -bound;
}

bool is_maximal(const CurveCtx &ctx, const HiggsDatum &datum)
{
    return toledo(ctx, datum) == static_cast<long>(rank(datum)) * (ctx.genus - 1);
}

std::string to_string(Stability s)
{
    switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlyPolystable: return "StrictlyPolystable";
    case Stability::SemistableNotPoly: return "SemistableNotPoly";
    case Stability::Unstable: return "Unstable";
    }
    return "Unknown";
}

StabilityResult stability_sl2(const CurveCtx &ctx, const SL2RDatum &datum)
{
    const long d = datum.L.degree(ctx);
    const long g = ctx.genus;
    const bool b = !datum.beta_t.is_zero(), c = !datum.gamma_t.is_zero();
    if (d > 0) {
        const std::string clause = "Remark SL(2,R)-stability (1)";
        if (d > g - 1) return {Stability::Unstable, clause + ": deg L <= g-1 fails", false};
        return {c ? Stability::Stable : Stability::Unstable, clause, false};
    }
    if (d < 0) {
        const std::string clause = "Remark SL(2,R)-stability (2)";
        if (d < 1 - g) return {Stability::Unstable, clause + ": deg L >= 1-g fails", false};
        return {b ? Stability::Stable : Stability::Unstable, clause, false};
    }
    const std::string clause = "Remark SL(2,R)-stability (3)";
    if (b == c) return {Stability::StrictlyPolystable, clause, false};
    // The summand killed by φ has degree 0: semistable, not polystable.
    return {Stability::SemistableNotPoly, clause, false};
}

StabilityResult stability_sp4(const CurveCtx &ctx, const HiggsDatum &datum)
{
    const long g = ctx.genus;
    if (datum.is<DiagonalShape>()) {
        const auto &s = datum.as<DiagonalShape>();
        const long d = s.N.degree(ctx);
        const bool b1 = !s.beta1.is_zero(), b2 = !s.beta2.is_zero();
        if (d > g - 1 && d <= 3 * g - 3) {
            if (b2) return {Stability::Stable, "Prop. stability 1(a)i", false};
            return {Stability::Unstable, "Prop. stability 1(a)ii", false};
        }
        if (d == g - 1) {
            if (b1 && b2) return {Stability::Stable, "Prop. stability 1(b)i", false};
            if (b1 || b2) return {Stability::SemistableNotPoly, "Prop. stability 1(b)ii", false};
            return {Stability::StrictlyPolystable, "Prop. stability 1(b)iii", true};
        }
        fail(ErrorKind::OutOfClassifiedRange, "stability_sp4 pre: g-1 <= deg N <= 3g-3");
    }
    if (datum.is<CoverOrthShape>()) {
        if (datum.as<CoverOrthShape>().w1.is_zero()) {
            fail(ErrorKind::OutOfClassifiedRange, "stability_sp4 pre: cover_orth needs w1 != 0");
        }
        return {Stability::Stable, "Prop. stability 2", false};
    }
    if (datum.is<TorsionSplitShape>()) {
        const auto &s = datum.as<TorsionSplitShape>();
        if (s.L1_torsion == s.L2_torsion) return {Stability::StrictlyPolystable, "Prop. stability 3(a)", true};
        return {Stability::Stable, "Prop. stability 3(b)", true};
    }
    if (datum.is<SL2RDatum>()) return stability_sl2(ctx, datum.as<SL2RDatum>());
    if (datum.is<IrrImageShape>()) {
        const auto &s = datum.as<IrrImageShape>();
        const long d = s.L.degree(ctx);
        const bool b = !s.beta_t.is_zero(), c = !s.gamma_t.is_zero();
        const std::string clause = "irreducible image of SL(2,R)";
        if (d > 0 && d <= g - 1) {
            // With γ~ = 0 the summand L³ is φ-invariant of positive degree.
            return {c ? Stability::Stable : Stability::Unstable, clause + ", deg L > 0", false};
        }
        if (d == 0 && b == c) {
            return {b ? Stability::Stable : Stability::StrictlyPolystable, clause + ", deg L = 0", !b};
        }
        fail(ErrorKind::OutOfClassifiedRange, "stability_sp4 pre: irr_image needs 0 <= deg L <= g-1 "
                                              "and a polystable SL(2,R) datum at deg L = 0");
    }
    // Direct sums.
    std::vector<HiggsDatum> flat;
    flatten_into(datum, flat);
    if (flat.empty()) return {Stability::StrictlyPolystable, "empty direct sum", false};
    if (flat.size() == 1) return stability_sp4(ctx, flat[0]);
    if (flat.size() == 2 && is_max_theta_sl2r(ctx, flat[0]) && is_max_theta_sl2r(ctx, flat[1])) {
        return stability_sp4(ctx, torsion_split_from(ctx, flat[0].as<SL2RDatum>(), flat[1].as<SL2RDatum>()));
    }
    bool semistable_only = false;
    for (const auto &s : flat) {
        const Stability v = stability_sp4(ctx, s).verdict;
        if (v == Stability::Unstable) return {Stability::Unstable, "direct sum with an unstable summand", false};
        if (v == Stability::SemistableNotPoly) semistable_only = true;
    }
    if (semistable_only) {
        return {Stability::SemistableNotPoly, "direct sum with a non-polystable summand", false};
    }
    return {Stability::StrictlyPolystable, "direct sum of polystable summands", true};
}

CayleyPartner cayley_partner(const CurveCtx &ctx, const HiggsDatum &raw, const F2Vec &spin_choice)
{
    require_torsion(ctx, spin_choice, "cayley_partner spin_choice");
    require_sp4(raw, "cayley_partner");
    require_max_polystable(ctx, raw, "cayley_partner");
    const HiggsDatum d = normalize_impl(ctx, raw);
    const LineBundleClass l0 = LineBundleClass::sqrt_k(ctx, spin_choice);
    CayleyPartner p{CayleyPartner::Case::SplitSO2, std::nullopt, std::nullopt, std::nullopt, false};
    if (d.is<DiagonalShape>()) {
        const auto &s = d.as<DiagonalShape>();
        p.L = s.N * l0.dual();
        p.theta_present = !(s.beta1.is_zero() && s.beta2.is_zero() && s.beta3.is_zero());
    } else if (d.is<CoverOrthShape>()) {
        const auto &s = d.as<CoverOrthShape>();
        p.kind = CayleyPartner::Case::ConnectedCover;
        p.w1 = s.w1;
        p.theta_present = s.beta_present;
    } else if (d.is<TorsionSplitShape>()) {
        const auto &s = d.as<TorsionSplitShape>();
        p.theta_present = !(s.beta1.is_zero() && s.beta2.is_zero());
        if (s.L1_torsion == s.L2_torsion) {
            p.L = LineBundleClass::torsion_bundle(ctx, s.L1_torsion + spin_choice);
        } else {
            p.kind = CayleyPartner::Case::TorsionPair;
            p.torsion_pair = std::make_pair(s.L1_torsion + spin_choice, s.L2_torsion + spin_choice);
        }
    } else {
        fail(ErrorKind::OutOfClassifiedRange, "cayley_partner: no Cayley description for " + raw.shape_name());
    }
    return p;
}

SWInvariants sw_invariants(const CurveCtx &ctx, const HiggsDatum &datum)
{
    require_max_polystable(ctx, datum, "sw_invariants");
    SWInvariants inv;
    inv.toledo = toledo(ctx, datum);
    auto [w1, w2] = sw_pair(ctx, datum);
    inv.w1 = w1;
    if (rank(datum) == 2 && w1.is_zero()) {
        const HiggsDatum d = normalize_impl(ctx, datum);
        inv.c = d.is<DiagonalShape>() ? c_of(ctx, d.as<DiagonalShape>()) : 0;
    } else {
        inv.w2 = w2;
    }
    return inv;
}

bool gdelta_reduction_check(const CurveCtx &ctx, const HiggsDatum &raw)
{
    require_sp4(raw, "gdelta_reduction_check");
    require_max_polystable(ctx, raw, "gdelta_reduction_check");
    const HiggsDatum d = normalize_impl(ctx, raw);
    if (d.is<DiagonalShape>()) {
        const auto &s = d.as<DiagonalShape>();
        return c_of(ctx, s) == 0 && s.beta1.is_zero() && s.beta2.is_zero();
    }
    if (d.is<CoverOrthShape>()) {
        const auto &s = d.as<CoverOrthShape>();
        return !s.beta_present || s.beta_q_multiple;
    }
    if (d.is<TorsionSplitShape>()) {
        const auto &s = d.as<TorsionSplitShape>();
        return same_section(s.beta1, s.beta2);
    }
    return false;
}

bool sl2xsl2_reduction_check(const CurveCtx &ctx, const HiggsDatum &raw)
{
    require_sp4(raw, "sl2xsl2_reduction_check");
    require_max_polystable(ctx, raw, "sl2xsl2_reduction_check");
    const HiggsDatum d = normalize_impl(ctx, raw);
    if (d.is<DiagonalShape>()) {
        // N = N⁻¹K; β is diagonal in the basis (1, ±1) iff β1 = β2.
        const auto &s = d.as<DiagonalShape>();
        return s.N.is_theta_characteristic() && same_section(s.beta1, s.beta2);
    }
    return d.is<TorsionSplitShape>();
}

bool gp_reduction_check(const CurveCtx &ctx, const HiggsDatum &raw)
{
    require_sp4(raw, "gp_reduction_check");
    require_max_polystable(ctx, raw, "gp_reduction_check");
    const HiggsDatum d = normalize_impl(ctx, raw);
    const int g_cover = double_cover_genus(ctx.genus);
    if (d.is<DiagonalShape>()) {
        // The pulled back summands must be square roots of K on the cover.
        const auto &s = d.as<DiagonalShape>();
        if (pullback_degree(s.N.degree(ctx)) != g_cover - 1) return false;
        return sl2xsl2_reduction_check(ctx, d);
    }
    if (d.is<CoverOrthShape>()) {
        const auto &s = d.as<CoverOrthShape>();
        if (pullback_degree(toledo(ctx, d)) != 2L * (g_cover - 1)) return false;
        return !s.beta_present || s.beta_q_multiple;
    }
    return d.is<TorsionSplitShape>();
}

bool gi_reduction_check(const CurveCtx &ctx, const HiggsDatum &raw)
{
    require_sp4(raw, "gi_reduction_check");
    require_max_polystable(ctx, raw, "gi_reduction_check");
    const HiggsDatum d = normalize_impl(ctx, raw);
    if (!d.is<DiagonalShape>()) return false;
    const auto &s = d.as<DiagonalShape>();
    if (s.N.k_half != 3 || s.N.extra_degree != 0 || s.beta2.is_zero()) return false;
    // β1 β2 = (16/25) β3².
    if (s.beta3.is_zero()) return s.beta1.is_zero();
    if (!s.beta1.square || s.beta3.square) return false;
    const auto &base = s.beta1.square->base;
    const auto &b3 = s.beta3.coeffs;
    if (base.size() != b3.size()) return false;
    std::size_t k = 0;
    while (b3[k].is_zero()) ++k;
    const FieldElem lambda = base[k] / b3[k];
    for (std::size_t j = 0; j < b3.size(); ++j) {
        if (base[j] != lambda * b3[j]) return false;
    }
    return s.beta1.square->scale * lambda * lambda * scalar_of(s.beta2) == FieldElem::fraction(16, 25);
}

HiggsDatum irr_embed(const CurveCtx &ctx, const SL2RDatum &datum)
{
    const long d = datum.L.degree(ctx);
    if (d < 0 || d > ctx.genus - 1) fail(ErrorKind::OutOfClassifiedRange, "irr_embed pre: 0 <= deg L <= g-1");
    if (!is_polystable(stability_sl2(ctx, datum).verdict)) {
        fail(ErrorKind::NotPolystable, "irr_embed pre: polystable SL(2,R) datum");
    }
    if (d == ctx.genus - 1) {
        if (!datum.L.is_theta_characteristic()) {
            fail(ErrorKind::UndeterminedSpin, "irr_embed: deg L = g-1 needs L = K^{1/2} (x) T");
        }
        return irr_normal_form(ctx, datum.L, datum.beta_t, datum.gamma_t);
    }
    return IrrImageShape{datum.L, datum.beta_t, datum.gamma_t};
}

HiggsDatum direct_sum(const CurveCtx &ctx, const HiggsDatum &a, const HiggsDatum &b)
{
    std::vector<HiggsDatum> flat;
    flatten_into(a, flat);
    flatten_into(b, flat);
    if (flat.size() == 1) return flat[0];
    if (flat.size() == 2 && is_max_theta_sl2r(ctx, flat[0]) && is_max_theta_sl2r(ctx, flat[1])) {
        return torsion_split_from(ctx, flat[0].as<SL2RDatum>(), flat[1].as<SL2RDatum>());
    }
    return DirectSum{std::move(flat)};
}

bool is_hitchin_minimum(const CurveCtx &ctx, const HiggsDatum &raw)
{
    require_sp4(raw, "is_hitchin_minimum");
    require_max_polystable(ctx, raw, "is_hitchin_minimum");
    const HiggsDatum d = normalize_impl(ctx, raw);
    if (d.is<DiagonalShape>()) {
        const auto &s = d.as<DiagonalShape>();
        if (c_of(ctx, s) > 0) return s.beta1.is_zero() && s.beta3.is_zero();
        return s.beta1.is_zero() && s.beta2.is_zero() && s.beta3.is_zero();
    }
    if (d.is<CoverOrthShape>()) return !d.as<CoverOrthShape>().beta_present;
    if (d.is<TorsionSplitShape>()) {
        const auto &s = d.as<TorsionSplitShape>();
        return s.beta1.is_zero() && s.beta2.is_zero();
    }
    fail(ErrorKind::OutOfClassifiedRange, "is_hitchin_minimum: unclassified shape " + raw.shape_name());
}

DiagonalShape iso_normal_form(const CurveCtx &ctx, const DiagonalShape &datum)
{
    const long c = c_of(ctx, datum);
    if (c <= 0 || c > 2L * ctx.genus - 2) {
        fail(ErrorKind::OutOfClassifiedRange, "iso_normal_form pre: 0 < c <= 2g-2");
    }
    if (c == 2L * ctx.genus - 2) return datum;
    if (datum.beta2.is_zero()) fail(ErrorKind::UnstableInput, "iso_normal_form pre: beta2 != 0 for 0 < c < 2g-2");
    if (datum.beta2.square) fail(ErrorKind::InvalidArgument, "iso_normal_form: beta2 must be given by coordinates");
    std::size_t k = 0;
    while (datum.beta2.coeffs[k].is_zero()) ++k;
    const FieldElem t2 = datum.beta2.coeffs[k];
    DiagonalShape out = datum;
    out.beta1 = datum.beta1.scaled(t2);
    out.beta2 = datum.beta2.scaled(t2.inv());
    return out;
}

long SplitHiggsPair::degree(const CurveCtx &ctx) const
{
    long d = 0;
    for (const auto &l : v) d += l.degree(ctx);
    return d;
}

SplitHiggsPair to_split_pair(const CurveCtx &ctx, const HiggsDatum &datum)
{
    const LineBundleClass k = LineBundleClass::canonical(ctx);
    auto nz = [](const SectionSlot &s) { return !s.is_zero(); };
    SplitHiggsPair p;
    if (datum.is<DiagonalShape>()) {
        const auto &s = datum.as<DiagonalShape>();
        p.v = {s.N, s.N.dual() * k};
        p.beta_nonzero = {{nz(s.beta1), nz(s.beta3)}, {nz(s.beta3), nz(s.beta2)}};
        p.gamma_nonzero = {{false, true}, {true, false}};
    } else if (datum.is<TorsionSplitShape>()) {
        const auto &s = datum.as<TorsionSplitShape>();
        p.v = {LineBundleClass::sqrt_k(ctx, s.L1_torsion), LineBundleClass::sqrt_k(ctx, s.L2_torsion)};
        p.beta_nonzero = {{nz(s.beta1), false}, {false, nz(s.beta2)}};
        p.gamma_nonzero = {{true, false}, {false, true}};
    } else if (datum.is<SL2RDatum>()) {
        const auto &s = datum.as<SL2RDatum>();
        p.v = {s.L};
        p.beta_nonzero = {{nz(s.beta_t)}};
        p.gamma_nonzero = {{nz(s.gamma_t)}};
    } else if (datum.is<IrrImageShape>()) {
        const auto &s = datum.as<IrrImageShape>();
        const bool b = nz(s.beta_t), c = nz(s.gamma_t);
        p.v = {s.L.pow(3), s.L.dual()};
        p.beta_nonzero = {{false, b}, {b, c}};
        p.gamma_nonzero = {{false, c}, {c, b}};
    } else if (datum.is<DirectSum>()) {
        std::vector<SplitHiggsPair> parts;
        std::size_t n = 0;
        for (const auto &x : datum.as<DirectSum>().summands) {
            parts.push_back(to_split_pair(ctx, x));
            n += parts.back().v.size();
        }
        p.beta_nonzero.assign(n, std::vector<bool>(n, false));
        p.gamma_nonzero.assign(n, std::vector<bool>(n, false));
        std::size_t off = 0;
        for (const auto &q : parts) {
            for (std::size_t i = 0; i < q.v.size(); ++i) {
                p.v.push_back(q.v[i]);
                for (std::size_t j = 0; j < q.v.size(); ++j) {
                    p.beta_nonzero[off + i][off + j] = q.beta_nonzero[i][j];
                    p.gamma_nonzero[off + i][off + j] = q.gamma_nonzero[i][j];
                }
            }
            off += q.v.size();
        }
    } else {
        fail(ErrorKind::InvalidArgument, "to_split_pair: cover_orth has no splitting into line bundles");
    }
    return p;
}

SplitHiggsPair dual(const SplitHiggsPair &pair)
{
    SplitHiggsPair d;
    for (const auto &l : pair.v) d.v.push_back(l.dual());
    d.beta_nonzero = pair.gamma_nonzero;
    d.gamma_nonzero = pair.beta_nonzero;
    return d;
}

} // namespace higgs_sp4
