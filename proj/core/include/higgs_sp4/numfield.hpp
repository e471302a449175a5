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

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace higgs_sp4 {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DivisionByZero when den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const mpz_class &num, const mpz_class &den);

/// "num/den" with den always present ("0/1", "-3/1").
std::string to_fraction_string(const Rational &q);

/// Accepts "num/den" or a bare integer. Throws InvalidArgument otherwise.
Rational parse_rational(std::string_view text);

/// Element of Q(i, sqrt2, sqrt3).
///
/// Coordinates follow the basis 1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3,
/// i*sqrt6.
class FieldElem {
  public:
    static constexpr std::size_t kDim = 8;
    enum Basis : std::size_t {
        kOne = 0,
        kSqrt2 = 1,
        kSqrt3 = 2,
        kSqrt6 = 3,
        kI = 4,
        kISqrt2 = 5,
        kISqrt3 = 6,
        kISqrt6 = 7
    };

    FieldElem() = default;
    FieldElem(long n); // NOLINT(google-explicit-constructor)
    FieldElem(const Rational &q); // NOLINT(google-explicit-constructor)
    explicit FieldElem(const std::array<Rational, kDim> &coeffs);

    static FieldElem basis(std::size_t index);
    static FieldElem sqrt2() { return basis(kSqrt2); }
    static FieldElem sqrt3() { return basis(kSqrt3); }
    static FieldElem sqrt6() { return basis(kSqrt6); }
    static FieldElem i() { return basis(kI); }
    static FieldElem fraction(long num, long den) { return FieldElem(make_rational(num, den)); }

    const Rational &operator[](std::size_t k) const { return c_[k]; }
    const std::array<Rational, kDim> &coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_real() const;

    FieldElem real_part() const;
    FieldElem imag_part() const;

    /// Complex conjugation: negates the i-coordinates.
    FieldElem conj() const;
    /// Field automorphisms flipping the sign of sqrt2 (resp. sqrt3).
    FieldElem flip_sqrt2() const;
    FieldElem flip_sqrt3() const;

    /// Throws DivisionByZero for 0.
    FieldElem inv() const;

    FieldElem operator-() const;
    FieldElem &operator+=(const FieldElem &o);
    FieldElem &operator-=(const FieldElem &o);
    FieldElem &operator*=(const FieldElem &o);
    FieldElem &operator/=(const FieldElem &o);

    friend FieldElem operator+(FieldElem a, const FieldElem &b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem &b) { return a -= b; }
    friend FieldElem operator*(const FieldElem &a, const FieldElem &b);
    friend FieldElem operator/(FieldElem a, const FieldElem &b) { return a /= b; }

    friend bool operator==(const FieldElem &a, const FieldElem &b) { return a.c_ == b.c_; }
    friend bool operator!=(const FieldElem &a, const FieldElem &b) { return !(a == b); }

    FieldElem pow(int e) const;

    /// Human readable form, e.g. "-2*sqrt6 - 6*sqrt2" style; for diagnostics only.
    std::string to_string() const;

  private:
    std::array<Rational, kDim> c_{};
};

std::ostream &operator<<(std::ostream &os, const FieldElem &a);

/// Value as a complex double, evaluated with 256-bit intermediate precision.
std::complex<double> numeric(const FieldElem &a);

/// u = -4 sqrt(6 + 3 sqrt3) and v = 2 / sqrt(2 + sqrt3) in denested form.
std::pair<FieldElem, FieldElem> embed_u_v();

} // namespace higgs_sp4
