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

#include "sampling.hpp"

namespace higgs_sp4::cli {

long RationalSampler::in_range(long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational RationalSampler::rational() { return make_rational(in_range(-bound_, bound_), in_range(1, bound_)); }

Rational RationalSampler::nonzero_rational()
{
    Rational q;
    do {
        q = rational();
    } while (q == 0);
    return q;
}

SL2Elem RationalSampler::sl2()
{
    const FieldElem a(nonzero_rational());
    const FieldElem b = element();
    const FieldElem c = element();
    return SL2Elem::make(a, b, c, (FieldElem(1) + b * c) / a);
}

SqMatrix RationalSampler::matrix2()
{
    return SqMatrix{{element(), element()}, {element(), element()}};
}

} // namespace higgs_sp4::cli
