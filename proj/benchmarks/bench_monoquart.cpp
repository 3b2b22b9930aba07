/*
   Copyright 2026 the monoquart authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "monoquart/bigint.hpp"
#include "monoquart/density.hpp"
#include "monoquart/families.hpp"
#include "monoquart/intpoly.hpp"
#include "monoquart/montes.hpp"
#include "monoquart/quartic.hpp"

using namespace monoquart;

namespace {

IntPoly quartic_from(long a, long b) {
    return IntPoly({BigInt(b), BigInt(a), BigInt(0), BigInt(0), BigInt(1)});
}

std::vector<IntPoly> random_quartics(std::size_t n, long bound) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<IntPoly> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(quartic_from(dist(rng), dist(rng)));
    return out;
}

void BM_squarefree_sieve(benchmark::State& state) {
    long hi = state.range(0);
    for (auto _ : state) {
        auto bits = squarefree_sieve({1, BigInt(hi + 1)});
        benchmark::DoNotOptimize(bits);
    }
    state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_squarefree_sieve)->Arg(100000)->Arg(1000000);

void BM_linear_sieve(benchmark::State& state) {
    long hi = state.range(0);
    for (auto _ : state) {
        auto bits = linear_squarefree_sieve({1, BigInt(hi + 1)}, -27, 256);
        benchmark::DoNotOptimize(bits);
    }
    state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_linear_sieve)->Arg(100000)->Arg(1000000);

void BM_factor_int(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(2, 100000000);
    std::vector<BigInt> values;
    for (int i = 0; i < 256; ++i) values.push_back(BigInt(dist(rng)));
    std::size_t k = 0;
    for (auto _ : state) {
        Factorization f = factor_int(values[k++ & 255]);
        benchmark::DoNotOptimize(f);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_factor_int);

void BM_index_report(benchmark::State& state) {
    auto polys = random_quartics(256, 60);
    long p = state.range(0);
    std::size_t k = 0;
    for (auto _ : state) {
        IndexReport rep = index_report(polys[k++ & 255], BigInt(p));
        benchmark::DoNotOptimize(rep);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_index_report)->Arg(2)->Arg(3)->Arg(7);

void BM_dedekind_test(benchmark::State& state) {
    auto polys = random_quartics(256, 60);
    long p = state.range(0);
    std::size_t k = 0;
    for (auto _ : state) {
        bool ok = dedekind_test(polys[k++ & 255], BigInt(p));
        benchmark::DoNotOptimize(ok);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_dedekind_test)->Arg(2)->Arg(7);

void BM_irreducibility(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-30, 30);
    std::vector<QuarticShape> shapes;
    for (int i = 0; i < 256; ++i)
        shapes.push_back(QuarticShape{BigInt(dist(rng)), BigInt(dist(rng)),
                                      BigInt(dist(rng)), BigInt(dist(rng))});
    std::size_t k = 0;
    for (auto _ : state) {
        bool ok = is_irreducible_quartic(shapes[k++ & 255]);
        benchmark::DoNotOptimize(ok);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_irreducibility);

void BM_certificate_f_bb(benchmark::State& state) {
    long b = 7;
    for (auto _ : state) {
        Certificate c = check_f_bb(BigInt(b));
        benchmark::DoNotOptimize(c);
        if (++b == 100000) b = 7;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_certificate_f_bb);

void BM_galois_group(benchmark::State& state) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> dist(-50, 50);
    std::vector<QuarticShape> shapes;
    for (int i = 0; i < 256; ++i)
        shapes.push_back(QuarticShape{BigInt(dist(rng)), BigInt(dist(rng)),
                                      BigInt(dist(rng)), BigInt(dist(rng))});
    std::size_t k = 0;
    for (auto _ : state) {
        GaloisReport rep = galois_group(shapes[k++ & 255]);
        benchmark::DoNotOptimize(rep);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_galois_group);

}  // namespace

BENCHMARK_MAIN();
