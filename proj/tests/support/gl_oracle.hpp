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

#include "higgs_sp4/higgs.hpp"

namespace oracle {

enum class GlVerdict { Polystable, SemistableNotPoly, Unstable };

/// Coordinate-subbundle test for the GL(2n) Higgs bundle V ⊕ V* with
/// φ = (0 β; γ 0). A subset of line summands is φ-invariant when no nonzero
/// entry of φ leaves it. Semistable iff every invariant subset has degree
/// <= 0; polystable iff moreover every degree 0 invariant subset has an
/// invariant complement.
GlVerdict gl_coordinate_verdict(const higgs_sp4::CurveCtx &ctx, const higgs_sp4::SplitHiggsPair &pair);

GlVerdict collapse(higgs_sp4::Stability s);

} // namespace oracle
