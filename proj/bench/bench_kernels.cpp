// Copyright 2026 The schurscope Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "schurscope/exceptio.hpp"
#include "schurscope/funfam.hpp"
#include "schurscope/named.hpp"
#include "schurscope/projmap.hpp"
#include "schurscope/ramgenus.hpp"
#include "schurscope/reduce.hpp"

using namespace schurscope;

namespace {

Backend backend_of(const benchmark::State& st) { return st.range(0) ? Backend::Parallel : Backend::Serial; }

void BM_ImageCodes(benchmark::State& st) {
  FqRatFunc f = reduce_mod_place(sporadic_degree5(), 100003);
  for (auto _ : st) benchmark::DoNotOptimize(image_codes(f, backend_of(st)));
}

void BM_Sweep(benchmark::State& st) {
  QRatFunc f = a4s4_function(0, 2);
  for (auto _ : st) benchmark::DoNotOptimize(schur_sweep(f, 5000, "", kDefaultPointCap, backend_of(st)));
}

void BM_CosetAverage(benchmark::State& st) {
  PermGroup G = psl2_group(32, Psl2Action::NonsplitPairs);
  Perm x = psl2_group(32, Psl2Action::NonsplitPairs, Psl2Ext::PGammaL).generators().back();
  for (auto _ : st) benchmark::DoNotOptimize(coset_average_fixed_points(G, x, backend_of(st)));
}

void BM_ArithExceptional(benchmark::State& st) {
  PermGroup A = psl2_group(9, Psl2Action::SplitPairs, Psl2Ext::PGammaL), G = psl2_group(9, Psl2Action::SplitPairs);
  for (auto _ : st) benchmark::DoNotOptimize(is_arithmetically_exceptional(A, G, kIndexCap, backend_of(st)));
}

void BM_Genus0(benchmark::State& st) {
  PermGroup G = psl2_group(8, Psl2Action::NonsplitPairs);
  for (auto _ : st) benchmark::DoNotOptimize(genus0_search(G, 5, backend_of(st)));
}

}  // namespace

// Arg 0 = serial, 1 = parallel.
BENCHMARK(BM_ImageCodes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CosetAverage)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ArithExceptional)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Genus0)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
