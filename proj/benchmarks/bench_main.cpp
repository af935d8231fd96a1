//
// Project qhl - Copyright 2026 The qhl Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <benchmark/benchmark.h>

#include "qhl/ar_quiver.hpp"
#include "qhl/bq_algebra.hpp"
#include "qhl/hl.hpp"
#include "qhl/lambda.hpp"
#include "qhl/quiver.hpp"
#include "qhl/rep.hpp"

namespace {

using namespace qhl;

Quiver quiver_of(benchmark::State& state) {
  auto type = static_cast<DynkinType>(state.range(0));
  return standard_quiver(DynkinClass{type, static_cast<int>(state.range(1))});
}

void BM_Knit(benchmark::State& state) {
  const Quiver q = quiver_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_ar(q));
}

void BM_HatQuiver(benchmark::State& state) {
  const ARData ar = build_ar(quiver_of(state));
  for (auto _ : state) benchmark::DoNotOptimize(build_hat_quiver(ar));
}

void BM_HlIsomorphism(benchmark::State& state) {
  const Quiver q = quiver_of(state);
  const ARData ar = build_ar(q);
  const BoundQuiver bq = build_hat_quiver(ar);
  for (auto _ : state) {
    const PhiTable t = phi_table(q, height_function(q));
    const BoundQuiver hl = hl_quiver(q, t);
    benchmark::DoNotOptimize(check_hl_iso(ar, bq, hl, t));
  }
}

// Lambda of the module with every indecomposable once, then res back.
void BM_LambdaRoundTrip(benchmark::State& state) {
  const Quiver q = quiver_of(state);
  const ARData ar = build_ar(q);
  const BoundQuiver bq = build_hat_quiver(ar);
  const Catalog catalog(ar);
  const LambdaContext ctx(ar, bq, catalog);
  MultVector m = zero_mult(ar);
  for (auto& x : m.mult) x = 1;
  const Rep rep = realize(ar, catalog, m);
  for (auto _ : state) {
    const BoundRep f = lambda_explicit(ctx, rep);
    benchmark::DoNotOptimize(res_explicit(bq, q, f));
  }
}

constexpr auto kA = static_cast<int64_t>(DynkinType::kA);
constexpr auto kD = static_cast<int64_t>(DynkinType::kD);
constexpr auto kE = static_cast<int64_t>(DynkinType::kE);

BENCHMARK(BM_Knit)->Args({kA, 8})->Args({kD, 8})->Args({kE, 8})->ArgNames({"type", "rank"})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HatQuiver)->Args({kA, 6})->Args({kE, 6})->Args({kE, 8})->ArgNames({"type", "rank"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HlIsomorphism)->Args({kA, 6})->Args({kE, 6})->Args({kE, 8})->ArgNames({"type", "rank"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LambdaRoundTrip)->Args({kA, 3})->Args({kA, 4})->Args({kD, 4})->ArgNames({"type", "rank"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
