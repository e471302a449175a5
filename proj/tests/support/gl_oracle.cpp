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

#include "gl_oracle.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using namespace higgs_sp4;

GlVerdict gl_coordinate_verdict(const CurveCtx &ctx, const SplitHiggsPair &pair)
{
    const std::size_t n = pair.v.size();
    const std::size_t m = 2 * n; // 0..n-1: V_i, n..2n-1: V_i*
    std::vector<long> deg(m);
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = pair.v[i].degree(ctx);
        deg[n + i] = -deg[i];
    }
    // edge[s] = bitmask of summands reached from s.
    std::vector<std::uint32_t> edge(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (pair.beta_nonzero[i][j]) edge[n + j] |= 1U << i;  // β: V_j* -> V_i ⊗ K
            if (pair.gamma_nonzero[i][j]) edge[j] |= 1U << (n + i); // γ: V_j -> V_i* ⊗ K
        }
    }
    const std::uint32_t full = (1U << m) - 1;
    auto invariant = [&](std::uint32_t s) {
        for (std::size_t k = 0; k < m; ++k) {
            if ((s >> k & 1U) && (edge[k] & ~s)) return false;
        }
        return true;
    };
    auto degree = [&](std::uint32_t s) {
        long d = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (s >> k & 1U) d += deg[k];
        }
        return d;
    };
    bool poly = true;
    for (std::uint32_t s = 1; s < full; ++s) {
        if (!invariant(s)) continue;
        const long d = degree(s);
        if (d > 0) return GlVerdict::Unstable;
        if (d == 0 && !invariant(full & ~s)) poly = false;
    }
    return poly ? GlVerdict::Polystable : GlVerdict::SemistableNotPoly;
}

GlVerdict collapse(Stability s)
{
    switch (s) {
    case Stability::Stable:
    case Stability::StrictlyPolystable: return GlVerdict::Polystable;
    case Stability::SemistableNotPoly: return GlVerdict::SemistableNotPoly;
    case Stability::Unstable: break;
    }
    return GlVerdict::Unstable;
}

} // namespace oracle
