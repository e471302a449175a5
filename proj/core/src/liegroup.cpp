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

#include "higgs_sp4/liegroup.hpp"

#include <array>
#include <map>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4 {

namespace {

// Polynomial in a, b, c, d with field coefficients.
class Poly {
  public:
    using Monomial = std::array<int, 4>;

    Poly() = default;
    Poly(const FieldElem &k) // NOLINT(google-explicit-constructor)
    {
        if (!k.is_zero()) terms_[{0, 0, 0, 0}] = k;
    }
    static Poly var(std::size_t v)
    {
        Poly p;
        Monomial m{0, 0, 0, 0};
        m[v] = 1;
        p.terms_[m] = FieldElem(1);
        return p;
    }

    Poly &operator+=(const Poly &o)
    {
        for (const auto &[m, k] : o.terms_) add_term(m, k);
        return *this;
    }
    friend Poly operator+(Poly x, const Poly &y) { return x += y; }
    friend Poly operator*(const Poly &x, const Poly &y)
    {
        Poly r;
        for (const auto &[mx, kx] : x.terms_) {
            for (const auto &[my, ky] : y.terms_) {
                Monomial m;
                for (std::size_t v = 0; v < 4; ++v) m[v] = mx[v] + my[v];
                r.add_term(m, kx * ky);
            }
        }
        return r;
    }

    Poly partial(std::size_t v) const
    {
        Poly r;
        for (const auto &[m, k] : terms_) {
            if (m[v] == 0) continue;
            Monomial dm = m;
            dm[v] -= 1;
            r.add_term(dm, FieldElem(static_cast<long>(m[v])) * k);
        }
        return r;
    }

    FieldElem eval(const std::array<FieldElem, 4> &at) const
    {
        FieldElem acc;
        for (const auto &[m, k] : terms_) {
            FieldElem t = k;
            for (std::size_t v = 0; v < 4; ++v) {
                if (m[v] != 0) t *= at[v].pow(m[v]);
            }
            acc += t;
        }
        return acc;
    }

  private:
    void add_term(const Monomial &m, const FieldElem &k)
    {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!k.is_zero()) terms_.emplace(m, k);
            return;
        }
        it->second += k;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Monomial, FieldElem> terms_;
};

template <class R>
std::array<R, 16> rho13_entries(const R &a, const R &b, const R &c, const R &d)
{
    const R s3(FieldElem::sqrt3());
    const R two(FieldElem(2));
    return {
        a * a * a,          s3 * a * b * b,                 b * b * b,      s3 * a * a * b,
        s3 * a * c * c,     a * d * d + two * b * c * d,    s3 * b * d * d, b * c * c + two * a * c * d,
        c * c * c,          s3 * c * d * d,                 d * d * d,      s3 * c * c * d,
        s3 * a * a * c,     b * b * c + two * a * b * d,    s3 * b * b * d, a * a * d + two * a * b * c,
    };
}

SqMatrix to_matrix(const std::array<FieldElem, 16> &e)
{
    SqMatrix m(4);
    for (std::size_t k = 0; k < 16; ++k) m(k / 4, k % 4) = e[k];
    return m;
}

const std::array<Poly, 16> &rho13_polys()
{
    static const std::array<Poly, 16> polys =
        rho13_entries(Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3));
    return polys;
}

} // namespace

SL2Elem SL2Elem::make(const FieldElem &a, const FieldElem &b, const FieldElem &c,
                      const FieldElem &d)
{
    if (a * d - b * c != FieldElem(1)) fail(ErrorKind::InvalidArgument, "SL2 element needs ad - bc = 1");
    return SL2Elem(SqMatrix{{a, b}, {c, d}});
}

SL2Elem SL2Elem::from_matrix(const SqMatrix &m)
{
    if (m.dim() != 2) fail(ErrorKind::DimensionMismatch, "SL2 element must be 2x2");
    return make(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

SL2AlgElem SL2AlgElem::make(const SqMatrix &m)
{
    if (m.dim() != 2) fail(ErrorKind::DimensionMismatch, "sl2 element must be 2x2");
    if (!m.trace().is_zero()) fail(ErrorKind::NotInAlgebra, "sl2 element needs trace 0");
    return SL2AlgElem(m);
}

SL2AlgElem SL2AlgElem::e() { return SL2AlgElem(SqMatrix{{0, 1}, {0, 0}}); }
SL2AlgElem SL2AlgElem::f() { return SL2AlgElem(SqMatrix{{0, 0}, {1, 0}}); }
SL2AlgElem SL2AlgElem::h0() { return SL2AlgElem(SqMatrix{{1, 0}, {0, -1}}); }

SL2AlgElem SL2AlgElem::symmetric(const FieldElem &x, const FieldElem &y)
{
    return SL2AlgElem(SqMatrix{{x, y}, {y, -x}});
}

const EmbeddingFrame &EmbeddingFrame::standard()
{
    static const EmbeddingFrame frame = from(mat::H_tilde(), mat::T());
    return frame;
}

EmbeddingFrame EmbeddingFrame::from(const SqMatrix &h_tilde, const SqMatrix &t)
{
    SqMatrix p = h_tilde * t;
    SqMatrix p_inv = p.inverse();
    return EmbeddingFrame{std::move(p), std::move(p_inv)};
}

SqMatrix rho1(const SqMatrix &m)
{
    if (m.dim() != 2) fail(ErrorKind::DimensionMismatch, "rho1 takes a 2x2 matrix");
    const FieldElem det = m.det();
    if (det != FieldElem(1) && det != FieldElem(-1)) {
        fail(ErrorKind::InvalidArgument, "rho1 needs determinant 1 or -1");
    }
    const FieldElem &a = m(0, 0), &b = m(0, 1), &c = m(1, 0), &d = m(1, 1);
    const FieldElem two(2), three(3);
    return SqMatrix{
        {a * a * a, three * a * a * b, b * b * b, three * a * b * b},
        {a * a * c, a * a * d + two * a * b * c, b * b * d, b * b * c + two * a * b * d},
        {c * c * c, three * c * c * d, d * d * d, three * c * d * d},
        {a * c * c, b * c * c + two * a * c * d, b * d * d, a * d * d + two * b * c * d},
    };
}

SqMatrix rho13(const SL2Elem &x)
{
    return to_matrix(rho13_entries(x.a(), x.b(), x.c(), x.d()));
}

SqMatrix rho_p(const SL2Elem &a, const SL2Elem &b)
{
    const SqMatrix z(2);
    return SqMatrix::block(a.matrix(), z, z, b.matrix());
}

SqMatrix rho_p_j13(const SL2Elem &a, const SL2Elem &b)
{
    return kron(a.matrix(), mat::E11()) + kron(b.matrix(), mat::E22());
}

SqMatrix rho_delta(const SL2Elem &a) { return kron(a.matrix(), mat::I2()); }

SqMatrix phi(const SL2Elem &a, const EmbeddingFrame &frame)
{
    return frame.P * rho13(a) * frame.P_inv;
}

SL2Elem torus_element(const FieldElem &lambda)
{
    const FieldElem inv = lambda.inv();
    const FieldElem a = (lambda + inv) / FieldElem(2);
    const FieldElem c = (lambda - inv) / (FieldElem(2) * FieldElem::i());
    return SL2Elem::make(a, -c, c, a);
}

SqMatrix rho13_star(const SL2AlgElem &x)
{
    const SqMatrix &m = x.matrix();
    const std::array<FieldElem, 4> at_identity = {FieldElem(1), FieldElem(0), FieldElem(0),
                                                  FieldElem(1)};
    const std::array<FieldElem, 4> direction = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    std::array<FieldElem, 16> out;
    const auto &polys = rho13_polys();
    for (std::size_t k = 0; k < 16; ++k) {
        for (std::size_t v = 0; v < 4; ++v) {
            if (direction[v].is_zero()) continue;
            out[k] += polys[k].partial(v).eval(at_identity) * direction[v];
        }
    }
    return to_matrix(out);
}

SqMatrix phi_star(const SL2AlgElem &x, const EmbeddingFrame &frame)
{
    return frame.P * rho13_star(x) * frame.P_inv;
}

namespace golden {

SqMatrix phi_star_e_minus_f()
{
    return FieldElem::i() * SqMatrix::diag({-3, 1, 3, -1});
}

SqMatrix phi_star_e_plus_f()
{
    return FieldElem::i() * SqMatrix{{0, 0, 0, 3}, {0, 0, 3, -1}, {0, -1, 0, 0}, {-1, 4, 0, 0}};
}

SqMatrix phi_star_h0()
{
    return SqMatrix{{0, 0, 0, 3}, {0, 0, 3, 1}, {0, 1, 0, 0}, {1, 4, 0, 0}};
}

} // namespace golden

SqMatrix s_matrix(const FieldElem &r)
{
    const FieldElem two_r = FieldElem(2) * r;
    return SqMatrix{{1, two_r, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -two_r, 1}};
}

SqMatrix s_conjugate(const FieldElem &beta, const FieldElem &gamma, const EmbeddingFrame &frame)
{
    if (gamma.is_zero()) fail(ErrorKind::SingularNormalization, "s_conjugate pre: gamma != 0");
    const FieldElem two(2);
    const FieldElem x = (beta + gamma) / two;
    const FieldElem y = (beta - gamma) / (two * FieldElem::i());
    return conjugate(phi_star(SL2AlgElem::symmetric(x, y), frame), s_matrix(beta / gamma));
}

SqMatrix s_normal_form(const FieldElem &beta, const FieldElem &gamma)
{
    const FieldElem r = beta / gamma;
    return gamma * SqMatrix{{0, 0, FieldElem(16) * r * r, FieldElem(5) * r},
                            {0, 0, FieldElem(5) * r, 1},
                            {0, 1, 0, 0},
                            {1, 0, 0, 0}};
}

const SqMatrix &transported_form()
{
    static const SqMatrix form = [] {
        const SqMatrix &p_inv = EmbeddingFrame::standard().P_inv;
        return p_inv.transpose() * mat::J13() * p_inv;
    }();
    return form;
}

CartanSplit cartan_split(const SqMatrix &x)
{
    if (x.dim() != 4) fail(ErrorKind::DimensionMismatch, "cartan_split takes a 4x4 matrix");
    if (!in_symplectic_algebra(x, transported_form())) {
        fail(ErrorKind::NotInAlgebra, "cartan_split pre: X in sp(4,C) for the transported form");
    }
    const SqMatrix z2(2);
    CartanSplit s;
    s.Z = x.block_at(0, 0);
    s.beta = x.block_at(0, 1);
    s.gamma = x.block_at(1, 0);
    s.h_part = SqMatrix::block(s.Z, z2, z2, x.block_at(1, 1));
    s.m_part = SqMatrix::block(z2, s.beta, s.gamma, z2);
    return s;
}

std::optional<std::pair<FieldElem, FieldElem>> m_delta_membership(const SqMatrix &x)
{
    if (x.dim() != 4) return std::nullopt;
    if (!x.block_at(0, 0).is_zero() || !x.block_at(1, 1).is_zero()) return std::nullopt;
    const SqMatrix b = x.block_at(0, 1), g = x.block_at(1, 0);
    if (b != b(0, 0) * mat::I2() || g != g(0, 0) * mat::I2()) return std::nullopt;
    return std::make_pair(b(0, 0), g(0, 0));
}

SqMatrix m_delta_real_form(const FieldElem &a, const FieldElem &b)
{
    const SqMatrix i2 = mat::I2();
    return SqMatrix::block(a * i2, b * i2, b * i2, -(a * i2));
}

std::pair<FieldElem, FieldElem> m_delta_tilde_coordinates(const FieldElem &a, const FieldElem &b)
{
    const FieldElem ib = FieldElem::i() * b;
    return {FieldElem(2) * (a + ib), FieldElem(2) * (a - ib)};
}

SqMatrix m_delta_matrix(const FieldElem &beta_t, const FieldElem &gamma_t)
{
    const SqMatrix z2(2), i2 = mat::I2();
    return SqMatrix::block(z2, beta_t * i2, gamma_t * i2, z2);
}

bool in_u2(const SqMatrix &m)
{
    if (m.dim() != 4) return false;
    const SqMatrix a = m.block_at(0, 0), b = m.block_at(0, 1);
    if (m.block_at(1, 0) != -b || m.block_at(1, 1) != a) return false;
    if (a.transpose() * a + b.transpose() * b != mat::I2()) return false;
    return a.transpose() * b == b.transpose() * a;
}

NormalizerReport normalizer_witness_check()
{
    const SqMatrix swap{{0, 1}, {1, 0}};
    const SqMatrix w = rho1(swap);
    const SqMatrix w_inv = w.inverse();

    std::vector<SqMatrix> generators;
    for (long t : {1L, 2L, -3L}) {
        generators.push_back(SqMatrix{{1, t}, {0, 1}});
        generators.push_back(SqMatrix{{1, 0}, {t, 1}});
    }
    for (long l : {2L, 3L, -5L}) {
        generators.push_back(SqMatrix{{l, 0}, {0, FieldElem::fraction(1, l)}});
    }
    generators.push_back(SqMatrix{{FieldElem::fraction(3, 5), FieldElem::fraction(-4, 5)},
                                  {FieldElem::fraction(4, 5), FieldElem::fraction(3, 5)}});

    NormalizerReport r;
    r.normalizes = true;
    for (const auto &g : generators) {
        r.generators_checked++;
        if (w * rho1(g) * w_inv != rho1(swap * g * swap)) r.normalizes = false;
    }
    r.det_is_one = w.det() == FieldElem(1);
    r.symplectic_for_j0 = is_symplectic(w, mat::J0());
    return r;
}

} // namespace higgs_sp4
