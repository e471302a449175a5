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

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "higgs_sp4/f2.hpp"
#include "higgs_sp4/higgs.hpp"
#include "higgs_sp4/numfield.hpp"

namespace higgs_sp4 {

struct HitchinLabel {
    F2Vec spin;
    friend bool operator==(const HitchinLabel &, const HitchinLabel &) = default;
};
struct ZeroSWLabel {
    long c = 0;
    friend bool operator==(const ZeroSWLabel &, const ZeroSWLabel &) = default;
};
struct SWLabel {
    F2Vec w1;
    int w2 = 0;
    friend bool operator==(const SWLabel &, const SWLabel &) = default;
};

/// Connected component of the maximal Sp(4,R) moduli space.
struct ComponentLabel {
    std::variant<HitchinLabel, ZeroSWLabel, SWLabel> tag;

    std::string kind() const;
    std::string to_string() const;
    friend bool operator==(const ComponentLabel &, const ComponentLabel &) = default;
};

/// Proper subgroups a polystable representative of the component can reduce to.
enum class Subgroup { G_i, G_p, G_Delta };
std::string to_string(Subgroup s);

struct ReductionVerdict {
    std::set<Subgroup> admits;
    bool zariski_dense_component = false;
};

/// Throws NotMaximal / NotPolystable; UndeterminedSpin for a c = 2g-2 datum
/// whose N is not formally K^{3/2} ⊗ T.
ComponentLabel classify(const CurveCtx &ctx, const HiggsDatum &datum);

ReductionVerdict reduction_verdict(const ComponentLabel &label);

/// Maximal Sp(4,R) components by type; total = sw + zero_sw + hitchin.
struct ComponentCount {
    std::uint64_t sw = 0;
    std::uint64_t zero_sw = 0;
    std::uint64_t hitchin = 0;
    std::uint64_t total = 0;
    /// All Toledo invariants together.
    std::uint64_t rep_variety = 0;
    /// Alternative grouping: (Hitchin, w1 != 0 or c = 0, 0 < c < 2g-2).
    std::uint64_t intro_hitchin = 0;
    std::uint64_t intro_sw_and_c0 = 0;
    std::uint64_t intro_zariski_dense = 0;
};

/// genus in [2, 30].
ComponentCount count_components(const CurveCtx &ctx);
/// Maximal Sp(2n,R), n >= 3: 3 * 2^{2g}.
std::uint64_t count_components_sp2n(const CurveCtx &ctx, int n);

struct FiberGeometry {
    long c = 0;
    long r = 0;
    long s = 0;
    long base_dim = 0;
    long extra = 0;
    long total() const { return base_dim + r + s + extra; }
};

/// Fibre of the c-component over the Jacobian, 0 < c < g-1.
FiberGeometry fiber_geometry(const CurveCtx &ctx, long c);

/// ([w], z_1 w, ..., z_r w), w normalised so its first nonzero coordinate is 1.
struct QuotientPoint {
    std::vector<FieldElem> line;
    std::vector<std::vector<FieldElem>> vectors;
    friend bool operator==(const QuotientPoint &, const QuotientPoint &) = default;
};

QuotientPoint quotient_map(const std::vector<FieldElem> &z, const std::vector<FieldElem> &w);
/// Representative (z', w') with w' = line.
std::pair<std::vector<FieldElem>, std::vector<FieldElem>> quotient_inverse(const QuotientPoint &p);
/// True iff every vector lies on the line.
bool quotient_collinear(const QuotientPoint &p);
/// Map then invert; true iff the result is (t^-2 z, t^2 w) for some t^2.
bool quotient_roundtrip(const std::vector<FieldElem> &z, const std::vector<FieldElem> &w);

struct ScanOptions {
    enum class Mode { Auto, Exhaustive, Sampled };
    Mode mode = Mode::Auto;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0x5eedf21ULL;
    /// 0: hardware concurrency, further capped by HIGGS_SP4_THREADS.
    unsigned threads = 0;
};

/// Image of f2_sw_map inside F2^{2g} x F2.
struct F2Image {
    int genus = 0;
    bool exhaustive = true;
    std::uint64_t pairs_examined = 0;
    std::vector<std::uint8_t> hit;  // index (w1.bits << 1) | w2

    bool contains(const F2Vec &w1, int w2) const;
    std::uint64_t size() const;
    std::vector<std::pair<F2Vec, int>> missing() const;
};

/// Exhaustive up to genus 4, sampled up to genus 10 (Auto picks); genus >= 1.
/// Throws ScanBudgetExceeded outside those bounds.
F2Image f2_image_scan(int genus, const ScanOptions &opts = {});

/// Worker count after applying HIGGS_SP4_THREADS.
unsigned scan_workers(unsigned requested);

/// Maximal strictly polystable Sp(2n,R) datum with invariants (w1, w2) that
/// reduces to a product of smaller groups.
HiggsDatum sp2n_reduction_witness(const CurveCtx &ctx, int n, const F2Vec &w1, int w2);

} // namespace higgs_sp4
