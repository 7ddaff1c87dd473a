// Copyright 2026 The rsdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference scan against the OpenMP scan.

#include <benchmark/benchmark.h>

#include "rsdl/pipeline.hpp"

using namespace rsdl;

namespace {

const Instance& instance() {
  static const Instance inst = make_instance(FieldParams{7, 5, {4, 1, 0, 0, 0, 1}, Mode::hf, 2, 0});
  return inst;
}

void BM_ScanReference(benchmark::State& state) {
  const auto& inst = instance();
  for (auto _ : state) {
    auto rels = scan_incremental_reference(inst.code, inst.tower, 1, 16805);
    benchmark::DoNotOptimize(rels);
  }
}
BENCHMARK(BM_ScanReference)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  const auto& inst = instance();
  ScanOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rels = scan_incremental(inst.code, inst.tower, 1, 16805, opts);
    benchmark::DoNotOptimize(rels);
  }
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
