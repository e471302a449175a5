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

#include "higgs_sp4/numfield.hpp"

#include <ostream>
#include <sstream>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4 {

namespace {

struct Term {
    std::size_t index;
    int coef;
};

// Basis index k = p + 2q + 4s for sqrt2^p sqrt3^q i^s.
constexpr std::array<std::array<Term, 8>, 8> make_table()
{
    std::array<std::array<Term, 8>, 8> t{};
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
            const std::size_t pa = a & 1U, qa = (a >> 1) & 1U, sa = (a >> 2) & 1U;
            const std::size_t pb = b & 1U, qb = (b >> 1) & 1U, sb = (b >> 2) & 1U;
            int coef = 1;
            if (pa && pb) coef *= 2;
            if (qa && qb) coef *= 3;
            if (sa && sb) coef = -coef;
            t[a][b] = Term{(pa ^ pb) | ((qa ^ qb) << 1) | ((sa ^ sb) << 2), coef};
        }
    }
    return t;
}

constexpr auto kTable = make_table();

constexpr std::array<const char *, 8> kNames = {"",     "sqrt2",   "sqrt3",   "sqrt6",
                                               "i",    "i*sqrt2", "i*sqrt3", "i*sqrt6"};

FieldElem negate_where(const FieldElem &a, unsigned mask)
{
    std::array<Rational, FieldElem::kDim> c = a.coeffs();
    for (std::size_t k = 0; k < FieldElem::kDim; ++k) {
        if (k & mask) c[k] = -c[k];
    }
    return FieldElem(c);
}

} // namespace

Rational make_rational(long num, long den)
{
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    auto parse_int = [&](std::string_view s) {
        mpz_class z;
        std::string buf(s);
        if (buf.empty() || z.set_str(buf, 10) != 0) {
            fail(ErrorKind::InvalidArgument, "rational literal must be num/den: '" +
                                                 std::string(text) + "'");
        }
        return z;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

FieldElem::FieldElem(long n) { c_[kOne] = n; }

FieldElem::FieldElem(const Rational &q) { c_[kOne] = q; }

FieldElem::FieldElem(const std::array<Rational, kDim> &coeffs) : c_(coeffs)
{
    for (auto &q : c_) q.canonicalize();
}

FieldElem FieldElem::basis(std::size_t index)
{
    FieldElem e;
    e.c_.at(index) = 1;
    return e;
}

bool FieldElem::is_zero() const
{
    for (const auto &q : c_) {
        if (q != 0) return false;
    }
    return true;
}

bool FieldElem::is_one() const { return *this == FieldElem(1); }

bool FieldElem::is_rational() const
{
    for (std::size_t k = 1; k < kDim; ++k) {
        if (c_[k] != 0) return false;
    }
    return true;
}

bool FieldElem::is_real() const
{
    for (std::size_t k = 4; k < kDim; ++k) {
        if (c_[k] != 0) return false;
    }
    return true;
}

FieldElem FieldElem::real_part() const
{
    FieldElem r = *this;
    for (std::size_t k = 4; k < kDim; ++k) r.c_[k] = 0;
    return r;
}

FieldElem FieldElem::imag_part() const
{
    FieldElem r;
    for (std::size_t k = 0; k < 4; ++k) r.c_[k] = c_[k + 4];
    return r;
}

FieldElem FieldElem::conj() const { return negate_where(*this, 4U); }
FieldElem FieldElem::flip_sqrt2() const { return negate_where(*this, 1U); }
FieldElem FieldElem::flip_sqrt3() const { return negate_where(*this, 2U); }

FieldElem FieldElem::inv() const
{
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero field element");
    // Norm tower: each product lands in a smaller subfield.
    const FieldElem c1 = conj();
    const FieldElem n1 = *this * c1; // in Q(sqrt2, sqrt3)
    const FieldElem c2 = n1.flip_sqrt3();
    const FieldElem n2 = n1 * c2; // in Q(sqrt2)
    const FieldElem c3 = n2.flip_sqrt2();
    const FieldElem n3 = n2 * c3; // in Q
    Rational scale = 1 / n3.c_[kOne];
    FieldElem r = c1 * c2 * c3;
    for (auto &q : r.c_) q *= scale;
    return r;
}

FieldElem FieldElem::operator-() const
{
    FieldElem r = *this;
    for (auto &q : r.c_) q = -q;
    return r;
}

FieldElem &FieldElem::operator+=(const FieldElem &o)
{
    for (std::size_t k = 0; k < kDim; ++k) c_[k] += o.c_[k];
    return *this;
}

FieldElem &FieldElem::operator-=(const FieldElem &o)
{
    for (std::size_t k = 0; k < kDim; ++k) c_[k] -= o.c_[k];
    return *this;
}

FieldElem operator*(const FieldElem &a, const FieldElem &b)
{
    FieldElem r;
    for (std::size_t i = 0; i < FieldElem::kDim; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < FieldElem::kDim; ++j) {
            if (b.c_[j] == 0) continue;
            const Term &t = kTable[i][j];
            Rational p = a.c_[i] * b.c_[j];
            if (t.coef != 1) p *= t.coef;
            r.c_[t.index] += p;
        }
    }
    return r;
}

FieldElem &FieldElem::operator*=(const FieldElem &o)
{
    *this = *this * o;
    return *this;
}

FieldElem &FieldElem::operator/=(const FieldElem &o)
{
    *this = *this * o.inv();
    return *this;
}

FieldElem FieldElem::pow(int e) const
{
    FieldElem base = e < 0 ? inv() : *this;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    FieldElem r(1);
    while (n != 0) {
        if (n & 1U) r *= base;
        n >>= 1;
        if (n != 0) base *= base;
    }
    return r;
}

std::string FieldElem::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < kDim; ++k) {
        if (c_[k] == 0) continue;
        Rational q = c_[k];
        if (!first) {
            os << (q < 0 ? " - " : " + ");
            if (q < 0) q = -q;
        }
        first = false;
        if (k == kOne) {
            os << q.get_str();
        } else if (q == 1) {
            os << kNames[k];
        } else if (q == -1) {
            os << "-" << kNames[k];
        } else {
            os << q.get_str() << "*" << kNames[k];
        }
    }
    if (first) return "0";
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const FieldElem &a) { return os << a.to_string(); }

std::complex<double> numeric(const FieldElem &a)
{
    constexpr mp_bitcnt_t kBits = 256;
    const mpf_class s2 = sqrt(mpf_class(2, kBits));
    const mpf_class s3 = sqrt(mpf_class(3, kBits));
    const mpf_class s6 = sqrt(mpf_class(6, kBits));
    auto part = [&](std::size_t off) {
        mpf_class x(0, kBits);
        x += mpf_class(a[off], kBits);
        x += mpf_class(a[off + 1], kBits) * s2;
        x += mpf_class(a[off + 2], kBits) * s3;
        x += mpf_class(a[off + 3], kBits) * s6;
        return x.get_d();
    };
    return {part(0), part(4)};
}

std::pair<FieldElem, FieldElem> embed_u_v()
{
    // sqrt(2 + sqrt3) = (sqrt2 + sqrt6) / 2, sqrt(6 + 3 sqrt3) = sqrt3 * sqrt(2 + sqrt3).
    const FieldElem root = (FieldElem::sqrt2() + FieldElem::sqrt6()) / FieldElem(2);
    const FieldElem u = FieldElem(-4) * FieldElem::sqrt3() * root;
    const FieldElem v = FieldElem(2) / root;
    return {u, v};
}

} // namespace higgs_sp4
