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

#include "higgs_sp4/moduli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4 {

namespace {

constexpr int kMaxExhaustiveGenus = 4;
constexpr int kMaxSampledGenus = 10;
constexpr std::uint64_t kSampleChunk = 1U << 16;

std::size_t first_nonzero(const std::vector<FieldElem> &w)
{
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!w[k].is_zero()) return k;
    }
    return w.size();
}

std::uint64_t pow2(int e) { return std::uint64_t{1} << e; }

void require_count_genus(const CurveCtx &ctx)
{
    if (ctx.genus > 30) fail(ErrorKind::InvalidArgument, "count pre: genus <= 30 (64-bit counts)");
}

SL2RDatum maximal_sl2r(const CurveCtx &ctx, const F2Vec &t)
{
    const LineBundleClass l = LineBundleClass::sqrt_k(ctx, t);
    return SL2RDatum::make(ctx, l, SectionSlot::zero(ctx, l.pow(2) * LineBundleClass::canonical(ctx)),
                           SectionSlot::unit(ctx, l.pow(-2) * LineBundleClass::canonical(ctx)));
}

// Worker body: marks f2_sw_map images of pairs drawn by `next`.
template <class Fn>
std::vector<std::uint8_t> run_workers(unsigned workers, std::size_t table, Fn body)
{
    std::vector<std::vector<std::uint8_t>> local(workers, std::vector<std::uint8_t>(table, 0));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body, w, std::ref(local[w]));
    body(0U, std::ref(local[0]));
    for (auto &t : pool) t.join();
    std::vector<std::uint8_t> merged(table, 0);
    for (const auto &l : local) {
        for (std::size_t k = 0; k < table; ++k) merged[k] |= l[k];
    }
    return merged;
}

} // namespace

std::string ComponentLabel::kind() const
{
    switch (tag.index()) {
    case 0: return "Hitchin";
    case 1: return "ZeroSW";
    default: return "SW";
    }
}

std::string ComponentLabel::to_string() const
{
    if (const auto *h = std::get_if<HitchinLabel>(&tag)) return "Hitchin(" + h->spin.to_string() + ")";
    if (const auto *z = std::get_if<ZeroSWLabel>(&tag)) return "ZeroSW(" + std::to_string(z->c) + ")";
    const auto &s = std::get<SWLabel>(tag);
    return "SW(" + s.w1.to_string() + "," + std::to_string(s.w2) + ")";
}

std::string to_string(Subgroup s)
{
    switch (s) {
    case Subgroup::G_i: return "G_i";
    case Subgroup::G_p: return "G_p";
    case Subgroup::G_Delta: return "G_Delta";
    }
    return "?";
}

ComponentLabel classify(const CurveCtx &ctx, const HiggsDatum &datum)
{
    if (rank(datum) != 2) fail(ErrorKind::InvalidArgument, "classify pre: rank 2 (Sp(4,R)) datum");
    if (!is_maximal(ctx, datum)) fail(ErrorKind::NotMaximal, "classify pre: maximal, deg V = 2g-2");
    if (!is_polystable(stability_sp4(ctx, datum).verdict)) fail(ErrorKind::NotPolystable, "classify pre: polystable");
    const SWInvariants inv = sw_invariants(ctx, datum);
    if (!inv.w1.is_zero()) return {SWLabel{inv.w1, *inv.w2}};
    const long c = *inv.c;
    if (c < 2L * ctx.genus - 2) return {ZeroSWLabel{c}};
    const HiggsDatum d = normalize(ctx, datum);
    if (d.is<DiagonalShape>()) {
        const auto &n = d.as<DiagonalShape>().N;
        // N = K^{3/2} T, so N K^{-1} = K^{1/2} T.
        if (n.k_half == 3 && n.extra_degree == 0) return {HitchinLabel{ctx.spin_base + n.torsion}};
    }
    fail(ErrorKind::UndeterminedSpin, "classify: c = 2g-2 needs N = K^{3/2} (x) T to name the spin structure");
}

ReductionVerdict reduction_verdict(const ComponentLabel &label)
{
    ReductionVerdict v;
    if (std::holds_alternative<HitchinLabel>(label.tag)) {
        v.admits = {Subgroup::G_i};
    } else if (const auto *z = std::get_if<ZeroSWLabel>(&label.tag); z && z->c > 0) {
        v.zariski_dense_component = true;
    } else {
        v.admits = {Subgroup::G_Delta, Subgroup::G_p};
    }
    return v;
}

ComponentCount count_components(const CurveCtx &ctx)
{
    require_count_genus(ctx);
    const int g = ctx.genus;
    const std::uint64_t p = pow2(2 * g);
    ComponentCount n;
    n.sw = 2 * (p - 1);
    n.zero_sw = 2 * static_cast<std::uint64_t>(g) - 2;
    n.hitchin = p;
    n.total = n.sw + n.zero_sw + n.hitchin;
    n.rep_variety = 3 * pow2(2 * g + 1) + 8 * static_cast<std::uint64_t>(g) - 13;
    n.intro_hitchin = p;
    n.intro_sw_and_c0 = 2 * p - 1;
    n.intro_zariski_dense = 2 * static_cast<std::uint64_t>(g) - 3;
    return n;
}

std::uint64_t count_components_sp2n(const CurveCtx &ctx, int n)
{
    require_count_genus(ctx);
    if (n < 3) fail(ErrorKind::InvalidArgument, "count_components_sp2n pre: n >= 3");
    return 3 * pow2(2 * ctx.genus);
}

FiberGeometry fiber_geometry(const CurveCtx &ctx, long c)
{
    const long g = ctx.genus;
    if (c <= 0 || c >= g - 1) fail(ErrorKind::OutOfClassifiedRange, "fiber_geometry pre: 0 < c < g-1");
    const LineBundleClass n = LineBundleClass::make(ctx, 1, c);
    FiberGeometry f;
    f.c = c;
    f.r = h0(ctx, DiagonalShape::beta1_bundle(ctx, n));
    f.s = h0(ctx, DiagonalShape::beta2_bundle(ctx, n)) - 1;
    f.base_dim = g;
    f.extra = h0(ctx, DiagonalShape::beta3_bundle(ctx));
    return f;
}

QuotientPoint quotient_map(const std::vector<FieldElem> &z, const std::vector<FieldElem> &w)
{
    const std::size_t k = first_nonzero(w);
    if (k == w.size()) fail(ErrorKind::InvalidArgument, "quotient_map pre: w != 0");
    QuotientPoint p;
    const FieldElem inv = w[k].inv();
    for (const auto &x : w) p.line.push_back(x * inv);
    for (const auto &zi : z) {
        std::vector<FieldElem> v;
        for (const auto &x : w) v.push_back(zi * x);
        p.vectors.push_back(std::move(v));
    }
    return p;
}

std::pair<std::vector<FieldElem>, std::vector<FieldElem>> quotient_inverse(const QuotientPoint &p)
{
    const std::size_t k = first_nonzero(p.line);
    if (k == p.line.size()) fail(ErrorKind::InvalidArgument, "quotient_inverse pre: nonzero line");
    std::vector<FieldElem> z;
    for (const auto &v : p.vectors) {
        if (v.size() != p.line.size()) fail(ErrorKind::DimensionMismatch, "quotient_inverse: vector length");
        z.push_back(v[k] / p.line[k]);
    }
    return {z, p.line};
}

bool quotient_collinear(const QuotientPoint &p)
{
    const std::size_t k = first_nonzero(p.line);
    if (k == p.line.size()) return false;
    for (const auto &v : p.vectors) {
        if (v.size() != p.line.size()) return false;
        const FieldElem lambda = v[k] / p.line[k];
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] != lambda * p.line[j]) return false;
        }
    }
    return true;
}

bool quotient_roundtrip(const std::vector<FieldElem> &z, const std::vector<FieldElem> &w)
{
    const QuotientPoint p = quotient_map(z, w);
    if (!quotient_collinear(p)) return false;
    const auto [z2, w2] = quotient_inverse(p);
    const std::size_t k = first_nonzero(w);
    const FieldElem t2 = w2[k] / w[k];
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w2[j] != t2 * w[j]) return false;
    }
    if (z2.size() != z.size()) return false;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z2[i] * t2 != z[i]) return false;
    }
    return true;
}

bool F2Image::contains(const F2Vec &w1, int w2) const
{
    if (w1.size() != 2 * static_cast<std::size_t>(genus)) return false;
    return hit[(w1.bits() << 1) | static_cast<std::uint64_t>(w2 & 1)] != 0;
}

std::uint64_t F2Image::size() const
{
    return static_cast<std::uint64_t>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
}

std::vector<std::pair<F2Vec, int>> F2Image::missing() const
{
    std::vector<std::pair<F2Vec, int>> out;
    const std::size_t len = 2 * static_cast<std::size_t>(genus);
    for (std::uint64_t k = 0; k < hit.size(); ++k) {
        if (hit[k] == 0) out.emplace_back(F2Vec(len, k >> 1), static_cast<int>(k & 1));
    }
    return out;
}

unsigned scan_workers(unsigned requested)
{
    unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("HIGGS_SP4_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return std::max(1U, n);
}

F2Image f2_image_scan(int genus, const ScanOptions &opts)
{
    if (genus < 1) fail(ErrorKind::InvalidArgument, "f2_image_scan pre: genus >= 1");
    bool exhaustive = opts.mode == ScanOptions::Mode::Exhaustive ||
                      (opts.mode == ScanOptions::Mode::Auto && genus <= kMaxExhaustiveGenus);
    if (exhaustive && genus > kMaxExhaustiveGenus) {
        fail(ErrorKind::ScanBudgetExceeded, "f2_image_scan pre: exhaustive enumeration needs g <= 4");
    }
    if (!exhaustive && genus > kMaxSampledGenus) {
        fail(ErrorKind::ScanBudgetExceeded, "f2_image_scan pre: sampled scan needs g <= 10");
    }
    const std::size_t len = 2 * static_cast<std::size_t>(genus);
    const std::size_t table = std::size_t{1} << (len + 1);
    const std::uint64_t lo = (std::uint64_t{1} << len) - 1;
    auto mark = [&](std::vector<std::uint8_t> &out, std::uint64_t xb, std::uint64_t yb) {
        const auto [w1, w2] = f2_sw_map(F2Vec(len, xb), F2Vec(len, yb));
        out[(w1.bits() << 1) | static_cast<std::uint64_t>(w2)] = 1;
    };

    F2Image img;
    img.genus = genus;
    img.exhaustive = exhaustive;
    std::atomic<std::uint64_t> next{0};
    if (exhaustive) {
        const std::uint64_t pairs = std::uint64_t{1} << (2 * len);
        const unsigned workers = scan_workers(opts.threads);
        img.hit = run_workers(workers, table, [&](unsigned w, std::vector<std::uint8_t> &out) {
            for (std::uint64_t i = w; i < pairs; i += workers) mark(out, i & lo, i >> len);
        });
        img.pairs_examined = pairs;
    } else {
        // Fixed chunks with per-chunk seeds keep the result independent of the
        // worker count.
        const std::uint64_t chunks = (opts.samples + kSampleChunk - 1) / kSampleChunk;
        img.hit = run_workers(scan_workers(opts.threads), table, [&](unsigned, std::vector<std::uint8_t> &out) {
            for (std::uint64_t c = next++; c < chunks; c = next++) {
                std::seed_seq seq{opts.seed, c};
                std::mt19937_64 rng(seq);
                const std::uint64_t n = std::min(kSampleChunk, opts.samples - c * kSampleChunk);
                for (std::uint64_t j = 0; j < n; ++j) mark(out, rng() & lo, rng() & lo);
            }
        });
        img.pairs_examined = opts.samples;
    }
    return img;
}

HiggsDatum sp2n_reduction_witness(const CurveCtx &ctx, int n, const F2Vec &w1, int w2)
{
    if (n < 3) fail(ErrorKind::InvalidArgument, "sp2n_reduction_witness pre: n >= 3");
    if (w1.size() != ctx.f2_len()) fail(ErrorKind::DimensionMismatch, "sp2n_reduction_witness: w1 length 2g");
    if (w2 != 0 && w2 != 1) fail(ErrorKind::InvalidArgument, "sp2n_reduction_witness: w2 in {0,1}");
    DirectSum sum;
    int filled = 0;
    if (const auto pre = f2_preimage(w1, w2)) {
        sum.summands.emplace_back(maximal_sl2r(ctx, pre->first));
        sum.summands.emplace_back(maximal_sl2r(ctx, pre->second));
    } else {
        // (0, 1): an Sp(4,R) piece with c = 1.
        const LineBundleClass nb = LineBundleClass::make(ctx, 1, 1);
        const LineBundleClass b2 = DiagonalShape::beta2_bundle(ctx, nb);
        std::optional<long> b2_h0;
        // Degree 2g-2 but not K (only at g = 2): a generic such bundle has g-1 sections.
        if (b2.degree(ctx) == 2L * ctx.genus - 2) b2_h0 = ctx.genus - 1;
        sum.summands.emplace_back(DiagonalShape::make(
            ctx, nb, SectionSlot::zero(ctx, DiagonalShape::beta1_bundle(ctx, nb)), SectionSlot::unit(ctx, b2, b2_h0),
            SectionSlot::zero(ctx, DiagonalShape::beta3_bundle(ctx))));
    }
    filled = 2;
    for (; filled < n; ++filled) sum.summands.emplace_back(maximal_sl2r(ctx, ctx.zero_torsion()));
    return sum;
}

} // namespace higgs_sp4
