// Copyright 2026 The polybergman Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "polybergman/berezin.hpp"
#include "polybergman/qanalysis.hpp"
#include "polybergman/toeplitz.hpp"

namespace pb = polybergman;

namespace {

const pb::Integrand kPeak = [](pb::Complex w) {
  const pb::Complex k = 1.0 / ((1.0 - w * 0.6) * (1.0 - w * 0.6));
  return pb::Complex(std::norm(k));
};

void BM_Integrate(benchmark::State& state) {
  const pb::DiskQuadratureRule rule(static_cast<int>(state.range(0)), 4 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pb::integrate(kPeak, rule));
}

void BM_IntegrateSerial(benchmark::State& state) {
  const pb::DiskQuadratureRule rule(static_cast<int>(state.range(0)), 4 * static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pb::integrate_serial(kPeak, rule));
}

pb::Polynomial symbol() { return pb::Polynomial::monomial(2, 1) + pb::Polynomial::zbar() + pb::Polynomial::monomial(0, 0); }

void BM_Toeplitz(benchmark::State& state) {
  const auto basis = pb::make_basis(pb::SpaceOrder(2), static_cast<int>(state.range(0)));
  const auto f = symbol();
  for (auto _ : state) benchmark::DoNotOptimize(pb::toeplitz_matrix(basis, f));
}

void BM_ToeplitzSerial(benchmark::State& state) {
  const auto basis = pb::make_basis(pb::SpaceOrder(2), static_cast<int>(state.range(0)));
  const auto f = symbol();
  for (auto _ : state) benchmark::DoNotOptimize(pb::toeplitz_matrix_serial(basis, f));
}

void BM_ScanQ(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pb::scan_Q(2, static_cast<int>(state.range(0))));
}

void BM_ScanQSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pb::scan_Q_serial(2, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Integrate)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntegrateSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Toeplitz)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ToeplitzSerial)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanQ)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanQSerial)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
