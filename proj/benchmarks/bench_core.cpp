#include <benchmark/benchmark.h>

#include <complex>

#include "nlcs/analysis.hpp"
#include "nlcs/fock.hpp"
#include "nlcs/operators.hpp"
#include "nlcs/states.hpp"

namespace {

using nlcs::Complex;
using nlcs::RhoFamily;

void BM_MatrixExponential(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Complex z(0.8, 0.3);
  const nlcs::FockOperator x =
      z * nlcs::make_creator(dim) - std::conj(z) * nlcs::make_annihilator(dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcs::matrix_exponential(x));
  }
}
BENCHMARK(BM_MatrixExponential)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_SeriesConstruction(benchmark::State& state) {
  const RhoFamily family = RhoFamily::make("kps-da");
  nlcs::StateOptions options;
  options.dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcs::cs_series(family, Complex(0.8, 0.0), options));
  }
}
BENCHMARK(BM_SeriesConstruction)->Arg(128)->Arg(256)->Arg(512);

void BM_DisplacementRoute(benchmark::State& state) {
  const RhoFamily family = RhoFamily::make("bg", {{"kappa", 1.5}});
  nlcs::StateOptions options;
  options.dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nlcs::cs_displacement(family, Complex(1.0, 0.0), options));
  }
}
BENCHMARK(BM_DisplacementRoute)->Arg(64)->Arg(128);

void BM_H4Check(benchmark::State& state) {
  const RhoFamily family = RhoFamily::make("kps-g");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nlcs::h4_check(family, 50));
  }
}
BENCHMARK(BM_H4Check);

void BM_GkTemporal(benchmark::State& state) {
  const RhoFamily family = RhoFamily::make("bg", {{"kappa", 2.0}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        nlcs::temporal_stability(family, 0.8, 1.3, 2.7));
  }
}
BENCHMARK(BM_GkTemporal);

}  // namespace

BENCHMARK_MAIN();
