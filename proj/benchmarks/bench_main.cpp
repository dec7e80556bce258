// Copyright 2026 The nhcd Authors.
// SPDX-License-Identifier: Apache-2.0

// Hot paths: eigensolve, CD assembly, a full propagation.

#include <benchmark/benchmark.h>

#include "nhcd/cd.hpp"
#include "nhcd/dynamics.hpp"
#include "nhcd/linalg.hpp"
#include "nhcd/models.hpp"
#include "nhcd/schedule.hpp"

namespace {

using namespace nhcd;

void BM_BiorthonormalEig3(benchmark::State& state) {
  const Matrix H = stirap_hamiltonian(pseudo_pattern(1.3, 0.6, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(biorthonormal_eigensystem(H));
}
BENCHMARK(BM_BiorthonormalEig3);

void BM_CdPseudoNumeric(benchmark::State& state) {
  const auto model = make_case_model(ModelCase::PseudoReal);
  double t = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cd_pseudo(*model, t));
    t = t > 1.0 ? -1.0 : t + 1e-3;
  }
}
BENCHMARK(BM_CdPseudoNumeric);

void BM_CdPseudoClosedForm(benchmark::State& state) {
  const auto model = make_case_model(ModelCase::PseudoReal);
  double t = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model->analytic_cd(t));
    t = t > 1.0 ? -1.0 : t + 1e-3;
  }
}
BENCHMARK(BM_CdPseudoClosedForm);

// range(0) = grid intervals over the pseudo-real window
void BM_IntegrateFullCd(benchmark::State& state) {
  const auto model = make_case_model(ModelCase::PseudoReal);
  const auto w = model->window();
  const auto grid = uniform_grid(w.t0, w.t1, static_cast<std::size_t>(state.range(0)));
  const HamiltonianFn h = [&](double t) { return model->analytic_cd(t).Htotal; };
  const Vector psi0 = model->analytic_rights(w.t0).col(0);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(h, psi0, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateFullCd)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
