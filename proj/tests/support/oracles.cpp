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

#include "oracles.hpp"

#include <cmath>

namespace oracle {

using higgs_sp4::make_rational;

double u_float() { return -4.0 * std::sqrt(6.0 + 3.0 * std::sqrt(3.0)); }
double v_float() { return 2.0 / std::sqrt(2.0 + std::sqrt(3.0)); }

std::array<std::array<std::complex<double>, 4>, 4> h_tilde_float()
{
    const double s = std::sqrt(3.0), u = u_float(), v = v_float();
    return {{
        {0, 0, (s - 1) / 8 * u, (s - 3) / 8 * u},
        {0, 0, -(s + 3) / 8 * v, -(s + 1) / 8 * v},
        {(s + 1) / u, -(s + 3) / u, 0, 0},
        {(s - 3) / v, -(s - 1) / v, 0, 0},
    }};
}

SqMatrix sym3(const SqMatrix &m)
{
    // Column j holds the coefficients of (a x + c y)^{3-j} (b x + d y)^j.
    const FieldElem &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
    using Poly = std::array<FieldElem, 4>; // coefficient of x^{3-k} y^k
    auto mul = [](const Poly &p, const FieldElem &px, const FieldElem &py) {
        Poly out{};
        for (int k = 0; k < 3; ++k) {
            out[k] += p[k] * px;
            out[k + 1] += p[k] * py;
        }
        return out;
    };
    SqMatrix s(4);
    for (int j = 0; j < 4; ++j) {
        Poly p{};
        p[0] = FieldElem(1);
        for (int k = 0; k < 3 - j; ++k) p = mul(p, a, c);
        for (int k = 0; k < j; ++k) p = mul(p, b, d);
        for (int i = 0; i < 4; ++i) s(i, j) = p[i];
    }
    return s;
}

SqMatrix sym3_intertwiner()
{
    const FieldElem r3 = FieldElem::sqrt3();
    return SqMatrix{{r3, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, r3}, {0, 1, 0, 0}};
}

SqMatrix sym3_derivative(const SqMatrix &x)
{
    const SqMatrix id = SqMatrix::identity(2);
    SqMatrix p[4];
    for (int t = 0; t < 4; ++t) p[t] = sym3(id + FieldElem(t) * x);
    return FieldElem::fraction(1, 6) *
           (FieldElem(-11) * p[0] + FieldElem(18) * p[1] + FieldElem(-9) * p[2] + FieldElem(2) * p[3]);
}

long Sampler::integer(long lo, long hi)
{
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Sampler::rational() { return make_rational(integer(-bound_, bound_), integer(1, bound_)); }

Rational Sampler::nonzero_rational()
{
    Rational q;
    do {
        q = rational();
    } while (q == 0);
    return q;
}

FieldElem Sampler::field_element()
{
    std::array<Rational, FieldElem::kDim> c;
    for (auto &q : c) q = make_rational(integer(-20, 20), integer(1, 20));
    return FieldElem(c);
}

FieldElem Sampler::nonzero_field_element()
{
    FieldElem x;
    do {
        x = field_element();
    } while (x.is_zero());
    return x;
}

SqMatrix Sampler::matrix(std::size_t dim)
{
    SqMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = element();
    }
    return m;
}

higgs_sp4::SL2Elem Sampler::sl2()
{
    const FieldElem a(nonzero_rational()), b = element(), c = element();
    return higgs_sp4::SL2Elem::make(a, b, c, (FieldElem(1) + b * c) / a);
}

higgs_sp4::F2Vec Sampler::bits(std::size_t len)
{
    const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    return higgs_sp4::F2Vec(len, rng_() & mask);
}

} // namespace oracle
