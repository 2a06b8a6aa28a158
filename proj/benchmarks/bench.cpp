#include <benchmark/benchmark.h>

#include "hh/equivhh.hpp"
#include "hh/io.hpp"
#include "hh/simplicial.hpp"
#include "oracle.hpp"

using namespace hh;

static void BM_HochschildExterior(benchmark::State& state) {
  auto A = exterior_algebra(Ring::Q(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hochschild_cohomology(A, regular_bimodule(A), 5, 0, 3));
}
BENCHMARK(BM_HochschildExterior);

static void BM_DenseOracle(benchmark::State& state) {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto M = regular_bimodule(A);
  for (auto _ : state) benchmark::DoNotOptimize(verify::naive_cochain_complex(A, M, 5, -1, 4));
}
BENCHMARK(BM_DenseOracle);

static void BM_GroupCohomologyS3(benchmark::State& state) {
  auto G = symmetric_group3();
  for (auto _ : state) benchmark::DoNotOptimize(ext_over_zg(trivial_module(G, Ring::Z()), 5, 0, 4));
}
BENCHMARK(BM_GroupCohomologyS3);

static void BM_SmashDoubleComplex(benchmark::State& state) {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto G = cyclic_group(2);
  auto act = trivial_action(G, A);
  for (auto _ : state) benchmark::DoNotOptimize(hh_smash(A, act, 3, 3, 0, 2));
}
BENCHMARK(BM_SmashDoubleComplex);

static void BM_ConjugacySplitS3(benchmark::State& state) {
  auto A = ground_algebra(Ring::Z());
  auto act = trivial_action(symmetric_group3(), A);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_split(A, act, 4, 0, 0, 3));
}
BENCHMARK(BM_ConjugacySplitS3);

static void BM_OctahedronCochains(benchmark::State& state) {
  auto K = io::parse_complex(io::read_file(HH_FIXTURE_DIR "/octahedron.json"));
  for (auto _ : state) benchmark::DoNotOptimize(cochain_algebra(K, Ring::Z()));
}
BENCHMARK(BM_OctahedronCochains);

BENCHMARK_MAIN();
