/*
   Copyright 2026 the intersective-polynomials authors

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

#include "intersective/characterize.hpp"
#include "intersective/oracle.hpp"
#include "intersective/residues.hpp"
#include "intersective/sumsets.hpp"

namespace {

using intersective::arith::u64;

void BM_PowerResidues(benchmark::State& state) {
  const u64 m = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    auto set = intersective::residues::power_residues(5, m);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_PowerResidues)->Arg(97)->Arg(6552)->Arg(100003);

void BM_IteratedSumset(benchmark::State& state) {
  const u64 m = static_cast<u64>(state.range(0));
  auto set = intersective::residues::power_residues(5, m);
  for (auto _ : state) {
    auto acc = intersective::sumsets::iterated_sumset(set, 3);
    benchmark::DoNotOptimize(acc.size());
  }
}
BENCHMARK(BM_IteratedSumset)->Arg(97)->Arg(6552)->Arg(100003);

void BM_Decide(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    auto d = intersective::characterize::decide(n, 13);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Decide)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_OracleSweep(benchmark::State& state) {
  const u64 bound = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    auto r = intersective::oracle::exhaustive_check({3, 2, 4}, bound);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_OracleSweep)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
