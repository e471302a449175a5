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
#include <random>

#include "higgs_sp4/liegroup.hpp"
#include "higgs_sp4/matalg.hpp"
#include "higgs_sp4/numfield.hpp"

namespace higgs_sp4::cli {

/// Deterministic rational samples. Uses raw engine output so the stream is
/// identical across standard libraries.
class RationalSampler {
  public:
    explicit RationalSampler(std::uint64_t seed, long bound = 1000) : rng_(seed), bound_(bound) {}

    /// Numerator in [-bound, bound], denominator in [1, bound].
    Rational rational();
    Rational nonzero_rational();
    FieldElem element() { return FieldElem(rational()); }
    /// Entries rational() with d solved from ad - bc = 1.
    SL2Elem sl2();
    SqMatrix matrix2();

  private:
    long in_range(long lo, long hi);

    std::mt19937_64 rng_;
    long bound_;
};

} // namespace higgs_sp4::cli
