#include <benchmark/benchmark.h>

#include "pframe/catalog.hpp"
#include "pframe/certify.hpp"
#include "pframe/energy.hpp"
#include "pframe/hermite.hpp"
#include "pframe/jacobi.hpp"
#include "pframe/lpbound.hpp"
#include "pframe/minimize.hpp"

namespace {

void BM_JacobiEval(benchmark::State& state) {
  pframe::JacobiParams params =
      pframe::space_params(pframe::Field::R, 4, pframe::SpaceKind::Projective);
  int n = static_cast<int>(state.range(0));
  double t = 0.31;
  for (auto _ : state)
    benchmark::DoNotOptimize(pframe::jacobi_eval(params, n, t));
}
BENCHMARK(BM_JacobiEval)->Arg(4)->Arg(8)->Arg(16);

void BM_Energy600Cell(benchmark::State& state) {
  auto config = pframe::catalog_get("600-cell");
  pframe::KernelSpec kernel = pframe::PFrameKernel{9.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(pframe::energy(config, kernel));
}
BENCHMARK(BM_Energy600Cell);

void BM_EnergyE8(benchmark::State& state) {
  auto config = pframe::catalog_get("e8-roots");
  pframe::KernelSpec kernel = pframe::PFrameKernel{5.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(pframe::energy(config, kernel));
}
BENCHMARK(BM_EnergyE8);

void BM_TightCertificateIcosahedron(benchmark::State& state) {
  auto config = pframe::catalog_get("icosahedron");
  for (auto _ : state) {
    auto cert = pframe::build_tight_certificate(
        config, pframe::PFrameKernel{3.0}, "icosahedron");
    benchmark::DoNotOptimize(cert.verdict);
  }
}
BENCHMARK(BM_TightCertificateIcosahedron);

void BM_RemainderSweep(benchmark::State& state) {
  auto config = pframe::catalog_get("icosahedron");
  pframe::KernelSpec kernel = pframe::PFrameKernel{3.0};
  auto cert = pframe::build_tight_certificate(config, kernel, "icosahedron");
  for (auto _ : state) {
    auto rep = pframe::remainder_nonneg(kernel, cert.h_power);
    benchmark::DoNotOptimize(rep.inf_bound);
  }
}
BENCHMARK(BM_RemainderSweep);

void BM_SimplexSolve(benchmark::State& state) {
  auto space =
      pframe::make_space(pframe::Field::R, 4, pframe::SpaceKind::Projective);
  auto prob = pframe::make_lp_problem(space, pframe::PFrameKernel{5.0}, 6);
  for (auto _ : state)
    benchmark::DoNotOptimize(pframe::simplex_solve(prob).objective);
}
BENCHMARK(BM_SimplexSolve);

void BM_MinimizeStep(benchmark::State& state) {
  auto space =
      pframe::make_space(pframe::Field::R, 3, pframe::SpaceKind::Projective);
  pframe::MinimizeOptions opts;
  opts.max_iters = 25;
  for (auto _ : state) {
    auto run = pframe::minimize_energy(space, pframe::PFrameKernel{3.0}, 20,
                                       7, opts);
    benchmark::DoNotOptimize(run.energy);
  }
}
BENCHMARK(BM_MinimizeStep);

}  // namespace

BENCHMARK_MAIN();
