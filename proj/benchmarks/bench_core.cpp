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

#include <benchmark/benchmark.h>

#include "higgs_sp4/liegroup.hpp"
#include "higgs_sp4/moduli.hpp"
#include "higgs_sp4/numfield.hpp"

using namespace higgs_sp4;

namespace {

FieldElem dense_element(long seed)
{
    std::array<Rational, FieldElem::kDim> c;
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = make_rational(seed * 7 + static_cast<long>(k) * 3 - 11, 13 + static_cast<long>(k));
    return FieldElem(c);
}

void BM_FieldMul(benchmark::State &state)
{
    const FieldElem a = dense_element(1), b = dense_element(2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMul);

void BM_FieldInv(benchmark::State &state)
{
    const FieldElem a = dense_element(3);
    for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_FieldInv);

void BM_Rho13(benchmark::State &state)
{
    const SL2Elem a = SL2Elem::make(make_rational(3, 7), make_rational(5, 11), make_rational(-2, 9),
                                    Rational((1 + make_rational(5, 11) * make_rational(-2, 9)) / make_rational(3, 7)));
    for (auto _ : state) benchmark::DoNotOptimize(rho13(a));
}
BENCHMARK(BM_Rho13);

void BM_PhiTorus(benchmark::State &state)
{
    const SL2Elem t = torus_element(FieldElem(make_rational(7, 5)));
    for (auto _ : state) benchmark::DoNotOptimize(phi(t));
}
BENCHMARK(BM_PhiTorus);

void BM_PhiStar(benchmark::State &state)
{
    const SL2AlgElem x = SL2AlgElem::symmetric(FieldElem(make_rational(2, 3)), FieldElem(make_rational(-5, 4)));
    for (auto _ : state) benchmark::DoNotOptimize(phi_star(x));
}
BENCHMARK(BM_PhiStar);

void BM_F2ScanExhaustive(benchmark::State &state)
{
    ScanOptions opts;
    opts.mode = ScanOptions::Mode::Exhaustive;
    opts.threads = 1;
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(f2_image_scan(g, opts).size());
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (4 * g)));
}
BENCHMARK(BM_F2ScanExhaustive)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_F2ScanSampled(benchmark::State &state)
{
    ScanOptions opts;
    opts.mode = ScanOptions::Mode::Sampled;
    opts.samples = 200000;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(f2_image_scan(8, opts).size());
    state.SetItemsProcessed(state.iterations() * 200000);
}
BENCHMARK(BM_F2ScanSampled)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
