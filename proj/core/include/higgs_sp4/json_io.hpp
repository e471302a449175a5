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

#include <nlohmann/json.hpp>

#include "higgs_sp4/higgs.hpp"
#include "higgs_sp4/matalg.hpp"
#include "higgs_sp4/moduli.hpp"
#include "higgs_sp4/numfield.hpp"

// JSON wire format. Structural problems raise Error(MalformedInput); a
// well-formed document describing an invalid datum raises the domain error.

namespace higgs_sp4::json_io {

using Json = nlohmann::ordered_json;

/// Rational elements serialise as "n/d", others as the 8 coordinates in the
/// basis 1, √2, √3, √6, i, i√2, i√3, i√6. Both forms are accepted.
Json to_json(const FieldElem &x);
FieldElem field_elem_from_json(const Json &j);

Json to_json(const SqMatrix &m);
SqMatrix matrix_from_json(const Json &j);

Json to_json(const LineBundleClass &l);
LineBundleClass line_bundle_from_json(const CurveCtx &ctx, const Json &j);

Json to_json(const SectionSlot &s);
/// A missing slot (null) is the zero section of `bundle`.
SectionSlot slot_from_json(const CurveCtx &ctx, const Json &j, const LineBundleClass &bundle);

Json to_json(const HiggsDatum &d);
HiggsDatum datum_from_json(const CurveCtx &ctx, const Json &j);

struct DatumDocument {
    CurveCtx ctx;
    HiggsDatum datum;
};

/// {"genus": g, "spin_base"?: bits, "datum": {...}}. `genus_override` wins
/// over the document when positive.
DatumDocument document_from_json(const Json &j, int genus_override = 0);
Json to_json(const DatumDocument &doc);

Json to_json(const StabilityResult &r);
/// {"component", label fields, "admits", "zariski_dense"}.
Json to_json(const ComponentLabel &label, const ReductionVerdict &verdict);
Json to_json(const ComponentCount &n);
Json to_json(const FiberGeometry &f);
Json to_json(const F2Image &img);

} // namespace higgs_sp4::json_io
