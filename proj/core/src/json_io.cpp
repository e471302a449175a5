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

#include "higgs_sp4/json_io.hpp"

#include <algorithm>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4::json_io {

namespace {

[[noreturn]] void malformed(const std::string &what) { fail(ErrorKind::MalformedInput, what); }

const Json &field(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

long as_long(const Json &j, const char *what)
{
    if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
    return j.get<long>();
}

Rational rational_from(const Json &j)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) malformed("rational must be a string \"n/d\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error &e) {
        malformed(e.clause());
    }
}

F2Vec bits_from(const CurveCtx &ctx, const Json &j, const char *what)
{
    if (!j.is_string()) malformed(std::string(what) + " must be a bitstring");
    F2Vec v;
    try {
        v = F2Vec::parse(j.get<std::string>());
    } catch (const Error &e) {
        malformed(std::string(what) + ": " + e.clause());
    }
    if (v.size() != ctx.f2_len()) malformed(std::string(what) + " must have length 2g");
    return v;
}

std::vector<FieldElem> coeffs_from(const Json &j)
{
    if (!j.is_array()) malformed("coeffs must be an array");
    std::vector<FieldElem> out;
    for (const auto &x : j) out.push_back(field_elem_from_json(x));
    return out;
}

Json coeffs_to(const std::vector<FieldElem> &v)
{
    Json a = Json::array();
    for (const auto &x : v) a.push_back(to_json(x));
    return a;
}

} // namespace

Json to_json(const FieldElem &x)
{
    if (x.is_rational()) return to_fraction_string(x.coeffs()[0]);
    Json a = Json::array();
    for (const auto &q : x.coeffs()) a.push_back(to_fraction_string(q));
    return a;
}

FieldElem field_elem_from_json(const Json &j)
{
    if (j.is_string() || j.is_number_integer()) return FieldElem(rational_from(j));
    if (!j.is_array() || j.size() != FieldElem::kDim) malformed("field element must be \"n/d\" or 8 rationals");
    std::array<Rational, FieldElem::kDim> c;
    for (std::size_t k = 0; k < FieldElem::kDim; ++k) c[k] = rational_from(j[k]);
    return FieldElem(c);
}

Json to_json(const SqMatrix &m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", m.dim()}, {"entries", std::move(rows)}};
}

SqMatrix matrix_from_json(const Json &j)
{
    const long dim = as_long(field(j, "dim"), "dim");
    const Json &e = field(j, "entries");
    if (!e.is_array() || static_cast<long>(e.size()) != dim) malformed("entries must have dim rows");
    std::vector<std::vector<FieldElem>> rows;
    for (const auto &r : e) {
        if (!r.is_array() || static_cast<long>(r.size()) != dim) malformed("each row must have dim entries");
        rows.push_back(coeffs_from(r));
    }
    return SqMatrix::from_rows(rows);
}

Json to_json(const LineBundleClass &l)
{
    return Json{{"k_half", l.k_half}, {"extra_degree", l.extra_degree}, {"torsion", l.torsion.to_string()}};
}

LineBundleClass line_bundle_from_json(const CurveCtx &ctx, const Json &j)
{
    if (!j.is_object()) malformed("line bundle must be an object");
    const long k_half = as_long(field(j, "k_half"), "k_half");
    const long extra = j.contains("extra_degree") ? as_long(j.at("extra_degree"), "extra_degree") : 0;
    const F2Vec t = j.contains("torsion") ? bits_from(ctx, j.at("torsion"), "torsion") : ctx.zero_torsion();
    return LineBundleClass::make(ctx, static_cast<int>(k_half), extra, t);
}

Json to_json(const SectionSlot &s)
{
    if (s.square) return Json{{"square_of", {{"scale", to_json(s.square->scale)}, {"coeffs", coeffs_to(s.square->base)}}}};
    Json j{{"coeffs", coeffs_to(s.coeffs)}};
    if (s.h0_override) j["h0"] = *s.h0_override;
    return j;
}

SectionSlot slot_from_json(const CurveCtx &ctx, const Json &j, const LineBundleClass &bundle)
{
    if (j.is_null()) return SectionSlot::zero(ctx, bundle);
    if (!j.is_object()) malformed("section must be an object");
    if (j.contains("square_of")) {
        const Json &sq = j.at("square_of");
        return SectionSlot::square_of(bundle, field_elem_from_json(field(sq, "scale")),
                                      coeffs_from(field(sq, "coeffs")));
    }
    std::optional<long> h0_override;
    if (j.contains("h0")) h0_override = as_long(j.at("h0"), "h0");
    if (!j.contains("coeffs")) return SectionSlot::zero(ctx, bundle, h0_override);
    return SectionSlot::make(ctx, bundle, coeffs_from(j.at("coeffs")), h0_override);
}

Json to_json(const HiggsDatum &d)
{
    Json j{{"shape", d.shape_name()}};
    std::visit(
        [&](const auto &s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, DiagonalShape>) {
                j["N"] = to_json(s.N);
                j["beta1"] = to_json(s.beta1);
                j["beta2"] = to_json(s.beta2);
                j["beta3"] = to_json(s.beta3);
            } else if constexpr (std::is_same_v<S, CoverOrthShape>) {
                j["w1"] = s.w1.to_string();
                j["w2"] = s.w2;
                j["beta_present"] = s.beta_present;
                j["beta_q_multiple"] = s.beta_q_multiple;
            } else if constexpr (std::is_same_v<S, TorsionSplitShape>) {
                j["L1"] = s.L1_torsion.to_string();
                j["L2"] = s.L2_torsion.to_string();
                j["beta1"] = to_json(s.beta1);
                j["beta2"] = to_json(s.beta2);
            } else if constexpr (std::is_same_v<S, SL2RDatum> || std::is_same_v<S, IrrImageShape>) {
                j["L"] = to_json(s.L);
                j["beta"] = to_json(s.beta_t);
                j["gamma"] = to_json(s.gamma_t);
            } else {
                Json a = Json::array();
                for (const auto &x : s.summands) a.push_back(to_json(x));
                j["summands"] = std::move(a);
            }
        },
        d.shape);
    return j;
}

HiggsDatum datum_from_json(const CurveCtx &ctx, const Json &j)
{
    const Json &shape = field(j, "shape");
    if (!shape.is_string()) malformed("shape must be a string");
    const std::string name = shape.get<std::string>();
    const LineBundleClass k = LineBundleClass::canonical(ctx);
    auto opt = [&](const char *key) -> Json { return j.contains(key) ? j.at(key) : Json(); };
    HiggsDatum d = [&]() -> HiggsDatum {
        if (name == "diagonal") {
            const LineBundleClass n = line_bundle_from_json(ctx, field(j, "N"));
            return DiagonalShape{n, slot_from_json(ctx, opt("beta1"), DiagonalShape::beta1_bundle(ctx, n)),
                                 slot_from_json(ctx, opt("beta2"), DiagonalShape::beta2_bundle(ctx, n)),
                                 slot_from_json(ctx, opt("beta3"), DiagonalShape::beta3_bundle(ctx))};
        }
        if (name == "cover_orth") {
            CoverOrthShape s;
            s.w1 = bits_from(ctx, field(j, "w1"), "w1");
            s.w2 = static_cast<int>(as_long(field(j, "w2"), "w2"));
            s.beta_present = j.value("beta_present", false);
            s.beta_q_multiple = j.value("beta_q_multiple", false);
            return s;
        }
        if (name == "torsion_split") {
            return TorsionSplitShape{bits_from(ctx, field(j, "L1"), "L1"), bits_from(ctx, field(j, "L2"), "L2"),
                                     slot_from_json(ctx, opt("beta1"), k.pow(2)),
                                     slot_from_json(ctx, opt("beta2"), k.pow(2))};
        }
        if (name == "sl2r" || name == "irr_image") {
            const LineBundleClass l = line_bundle_from_json(ctx, field(j, "L"));
            SectionSlot b = slot_from_json(ctx, opt("beta"), l.pow(2) * k);
            SectionSlot c = slot_from_json(ctx, opt("gamma"), l.pow(-2) * k);
            if (name == "sl2r") return SL2RDatum{l, std::move(b), std::move(c)};
            return IrrImageShape{l, std::move(b), std::move(c)};
        }
        if (name == "direct_sum") {
            const Json &a = field(j, "summands");
            if (!a.is_array()) malformed("summands must be an array");
            DirectSum s;
            for (const auto &x : a) s.summands.push_back(datum_from_json(ctx, x));
            return s;
        }
        malformed("unknown shape '" + name + "'");
    }();
    validate(ctx, d);
    return d;
}

DatumDocument document_from_json(const Json &j, int genus_override)
{
    int genus = genus_override;
    if (genus <= 0) genus = static_cast<int>(as_long(field(j, "genus"), "genus"));
    CurveCtx ctx = CurveCtx::make(genus);
    if (j.contains("spin_base")) ctx.spin_base = bits_from(ctx, j.at("spin_base"), "spin_base");
    return {ctx, datum_from_json(ctx, field(j, "datum"))};
}

Json to_json(const DatumDocument &doc)
{
    Json j{{"genus", doc.ctx.genus}};
    if (!doc.ctx.spin_base.is_zero()) j["spin_base"] = doc.ctx.spin_base.to_string();
    j["datum"] = to_json(doc.datum);
    return j;
}

Json to_json(const StabilityResult &r)
{
    Json j{{"verdict", to_string(r.verdict)}, {"clause", r.clause}};
    if (r.non_simple) j["non_simple"] = true;
    return j;
}

Json to_json(const ComponentLabel &label, const ReductionVerdict &verdict)
{
    Json j{{"component", label.kind()}};
    if (const auto *h = std::get_if<HitchinLabel>(&label.tag)) {
        j["spin"] = h->spin.to_string();
    } else if (const auto *z = std::get_if<ZeroSWLabel>(&label.tag)) {
        j["c"] = z->c;
    } else {
        const auto &s = std::get<SWLabel>(label.tag);
        j["w1"] = s.w1.to_string();
        j["w2"] = s.w2;
    }
    std::vector<std::string> admits;
    for (auto g : verdict.admits) admits.push_back(to_string(g));
    std::sort(admits.begin(), admits.end());
    j["admits"] = admits;
    j["zariski_dense"] = verdict.zariski_dense_component;
    return j;
}

Json to_json(const ComponentCount &n)
{
    return Json{{"total", n.total},
                {"rep_variety", n.rep_variety},
                {"breakdown", {{"sw", n.sw}, {"zero_sw", n.zero_sw}, {"hitchin", n.hitchin}}},
                {"intro_breakdown",
                 {{"hitchin", n.intro_hitchin},
                  {"sw_and_c0", n.intro_sw_and_c0},
                  {"zariski_dense", n.intro_zariski_dense}}}};
}

Json to_json(const FiberGeometry &f)
{
    return Json{{"c", f.c}, {"r", f.r}, {"s", f.s}, {"base_dim", f.base_dim}, {"extra", f.extra}, {"total", f.total()}};
}

Json to_json(const F2Image &img)
{
    Json missing = Json::array();
    for (const auto &[w1, w2] : img.missing()) missing.push_back(Json{{"w1", w1.to_string()}, {"w2", w2}});
    const std::uint64_t full = std::uint64_t{2} << (2 * img.genus);
    return Json{{"genus", img.genus},
                {"mode", img.exhaustive ? "exhaustive" : "sampled"},
                {"pairs_examined", img.pairs_examined},
                {"image_size", img.size()},
                {"codomain_size", full},
                {"missing", std::move(missing)}};
}

} // namespace higgs_sp4::json_io
