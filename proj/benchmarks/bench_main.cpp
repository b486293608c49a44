#include <benchmark/benchmark.h>

#include "polyring/ncalg.hpp"
#include "polyring/polytope.hpp"
#include "polyring/qsym.hpp"
#include "polyring/transforms.hpp"

using namespace polyring;

static void BM_CanonicalFormCube(benchmark::State& state) {
  const auto lattice = polytope::cube(static_cast<int>(state.range(0))).lattice();
  for (auto _ : state) benchmark::DoNotOptimize(poset::canonical_form(lattice));
}
BENCHMARK(BM_CanonicalFormCube)->DenseRange(2, 5);

static void BM_CanonicalForm24Cell(benchmark::State& state) {
  const auto lattice = polytope::cell24().lattice();
  for (auto _ : state) benchmark::DoNotOptimize(poset::canonical_form(lattice));
}
BENCHMARK(BM_CanonicalForm24Cell);

// flag_vector is cached on the polytope, so count chains on a fresh copy of the lattice
static void BM_FlagVectorCross(benchmark::State& state) {
  const auto lattice = polytope::cross(static_cast<int>(state.range(0))).lattice();
  for (auto _ : state) {
    auto p = polytope::make_polytope(poset::dual(poset::dual(lattice)));
    benchmark::DoNotOptimize(polytope::flag_vector(p));
  }
}
BENCHMARK(BM_FlagVectorCross)->DenseRange(2, 5);

static void BM_QuasiShuffle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qsym::Composition a(n, 1), b(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qsym::quasi_shuffle(a, b));
}
BENCHMARK(BM_QuasiShuffle)->DenseRange(2, 6);

static void BM_NormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nc::NCPolynomial all;
  for (auto& w : qsym::compositions(n)) all.add(w, 1);
  for (auto _ : state) benchmark::DoNotOptimize(nc::normal_form_U(all));
}
BENCHMARK(BM_NormalForm)->DenseRange(4, 12, 2);

static void BM_FPoly(benchmark::State& state) {
  const auto p = polytope::cell24();
  for (auto _ : state) benchmark::DoNotOptimize(transforms::f_poly(p.flag()));
}
BENCHMARK(BM_FPoly);
BENCHMARK_MAIN();
