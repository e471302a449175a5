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

#include "verify.hpp"

#include <functional>

#include "higgs_sp4/error.hpp"
#include "sampling.hpp"

namespace higgs_sp4::cli {

namespace {

constexpr std::uint64_t kSeed = 20260417;

// Runs `body` and turns domain errors into a failed check.
Check run_check(std::string id, std::string ref, const std::function<std::string(bool &)> &body)
{
    Check c{std::move(id), std::move(ref), false, {}};
    try {
        c.detail = body(c.pass);
    } catch (const Error &e) {
        c.pass = false;
        c.detail = std::string(to_string(e.kind())) + ": " + e.clause();
    }
    return c;
}

std::string count_detail(std::size_t ok, std::size_t n) { return std::to_string(ok) + "/" + std::to_string(n) + " samples"; }

void lie_suite(const EmbeddingFrame &frame, std::vector<Check> &out)
{
    out.push_back(run_check("lie.rho13_symplectic", "rho13(A)^T J13 rho13(A) = J13", [](bool &pass) {
        RationalSampler s(kSeed);
        std::size_t ok = 0;
        for (int k = 0; k < 100; ++k) ok += is_symplectic(rho13(s.sl2()), mat::J13()) ? 1 : 0;
        pass = ok == 100;
        return count_detail(ok, 100);
    }));
    struct Golden {
        const char *id;
        SL2AlgElem x;
        SqMatrix expected;
    };
    const Golden goldens[] = {
        {"lie.phi_star_e_minus_f", SL2AlgElem::e() - SL2AlgElem::f(), golden::phi_star_e_minus_f()},
        {"lie.phi_star_e_plus_f", SL2AlgElem::e() + SL2AlgElem::f(), golden::phi_star_e_plus_f()},
        {"lie.phi_star_h0", SL2AlgElem::h0(), golden::phi_star_h0()},
    };
    for (const auto &g : goldens) {
        out.push_back(run_check(g.id, "phi_* golden matrix", [&](bool &pass) {
            pass = phi_star(g.x, frame) == g.expected;
            return pass ? std::string("exact match") : "got " + phi_star(g.x, frame).to_string();
        }));
    }
    out.push_back(run_check("lie.s_conjugation", "S-conjugate of phi_*(beta, gamma) normal form", [&](bool &pass) {
        RationalSampler s(kSeed + 1);
        std::size_t ok = 0;
        for (int k = 0; k < 20; ++k) {
            const FieldElem beta = s.element();
            const FieldElem gamma(s.nonzero_rational());
            ok += s_conjugate(beta, gamma, frame) == s_normal_form(beta, gamma) ? 1 : 0;
        }
        pass = ok == 20;
        return count_detail(ok, 20);
    }));
    out.push_back(run_check("lie.phi_torus", "phi on the SO(2,C) torus is diag(l^3, 1/l, 1/l^3, l)", [&](bool &pass) {
        RationalSampler s(kSeed + 2);
        std::size_t ok = 0;
        for (int k = 0; k < 20; ++k) {
            const FieldElem l(s.nonzero_rational());
            const FieldElem li = l.inv();
            ok += phi(torus_element(l), frame) == SqMatrix::diag({l.pow(3), li, li.pow(3), l}) ? 1 : 0;
        }
        pass = ok == 20;
        return count_detail(ok, 20);
    }));
    out.push_back(run_check("lie.transported_form", "P^-T J13 P^-1 = -(i/2) J13", [&](bool &pass) {
        const SqMatrix form = frame.P_inv.transpose() * mat::J13() * frame.P_inv;
        pass = form == FieldElem::fraction(-1, 2) * FieldElem::i() * mat::J13();
        return pass ? std::string("exact match") : "got " + form.to_string();
    }));
    out.push_back(run_check("lie.normalizer_witness", "rho1(swap) normalizes rho1(SL2), det 1, not J0-symplectic",
                            [](bool &pass) {
                                const NormalizerReport r = normalizer_witness_check();
                                pass = r.as_expected();
                                return "normalizes=" + std::to_string(r.normalizes) +
                                       " det_one=" + std::to_string(r.det_is_one) +
                                       " j0_symplectic=" + std::to_string(r.symplectic_for_j0) +
                                       " generators=" + std::to_string(r.generators_checked);
                            }));
}

void matalg_suite(std::vector<Check> &out)
{
    out.push_back(run_check("matalg.kron_identities", "mixed product, transpose, exp additivity", [](bool &pass) {
        RationalSampler s(kSeed + 3);
        std::size_t ok = 0;
        for (int k = 0; k < 100; ++k) {
            const SqMatrix a = s.matrix2(), b = s.matrix2(), c = s.matrix2(), d = s.matrix2();
            ok += kron_identities_check(a, b, c, d) ? 1 : 0;
        }
        pass = ok == 100;
        return count_detail(ok, 100);
    }));
    out.push_back(run_check("matalg.h_conjugation", "A (x) B = h (B (x) A) h", [](bool &pass) {
        RationalSampler s(kSeed + 4);
        const SqMatrix h = mat::h_perm();
        std::size_t ok = 0;
        for (int k = 0; k < 100; ++k) {
            const SqMatrix a = s.matrix2(), b = s.matrix2();
            ok += kron(a, b) == h * kron(b, a) * h ? 1 : 0;
        }
        pass = ok == 100;
        return count_detail(ok, 100);
    }));
    out.push_back(run_check("matalg.h_j12", "h J12 = J13 h", [](bool &pass) {
        pass = mat::h_perm() * mat::J12() == mat::J13() * mat::h_perm();
        return std::string(pass ? "exact match" : "mismatch");
    }));
    out.push_back(run_check("matalg.h_sym3", "h_sym3^T J0 h_sym3 = J13", [](bool &pass) {
        const SqMatrix h = mat::h_sym3();
        pass = h.transpose() * mat::J0() * h == mat::J13();
        return std::string(pass ? "exact match" : "mismatch");
    }));
}

} // namespace

bool Report::pass() const { return passed() == checks.size(); }

std::size_t Report::passed() const
{
    std::size_t n = 0;
    for (const auto &c : checks) n += c.pass ? 1 : 0;
    return n;
}

Report run_verify(const std::string &scope, const EmbeddingFrame &frame)
{
    Report r;
    r.suite = scope;
    if (scope == "lie" || scope == "all") lie_suite(frame, r.checks);
    if (scope == "matalg" || scope == "all") matalg_suite(r.checks);
    if (r.checks.empty()) fail(ErrorKind::InvalidArgument, "verify: scope must be lie, matalg or all");
    return r;
}

json_io::Json to_json(const Report &r)
{
    json_io::Json checks = json_io::Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"id", c.id}, {"paper_ref", c.paper_ref}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"suite", r.suite},
            {"checks", std::move(checks)},
            {"summary", {{"passed", r.passed()}, {"failed", r.checks.size() - r.passed()}, {"pass", r.pass()}}}};
}

} // namespace higgs_sp4::cli
