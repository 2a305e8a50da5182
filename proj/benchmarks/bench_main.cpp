#include <benchmark/benchmark.h>

#include "ringlab/catalog.hpp"
#include "ringlab/config.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/free_algebra.hpp"
#include "ringlab/poly.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/spec_lang.hpp"

using namespace ringlab;

namespace {

RingPtr ring(const char* spec) { return build_ring(spec).finite; }

void BM_LnzsGeneratorReduced(benchmark::State& st) {
  const auto R = ring("T(2,Zmod(16))");
  for (auto _ : st) benchmark::DoNotOptimize(is_lnzs(*R).truth);
}
BENCHMARK(BM_LnzsGeneratorReduced)->Unit(benchmark::kMillisecond);

void BM_LnzsExhaustive(benchmark::State& st) {
  const auto R = ring("T(2,Zmod(4))");
  for (auto _ : st) benchmark::DoNotOptimize(is_lnzs_exhaustive(*R).truth);
}
BENCHMARK(BM_LnzsExhaustive)->Unit(benchmark::kMillisecond);

void BM_CongruenceSubring(benchmark::State& st) {
  const auto R = ring("CongrSubring(16)");
  st.counters["elements"] = static_cast<double>(R->size());
  for (auto _ : st) {
    benchmark::DoNotOptimize(is_quasi_normal(*R).truth);
    benchmark::DoNotOptimize(is_lnzs(*R).truth);
  }
}
BENCHMARK(BM_CongruenceSubring)->Unit(benchmark::kMillisecond);

void BM_WeaklySemicommutative(benchmark::State& st) {
  const auto R = ring("DiagConst(4,Fp(2))");
  for (auto _ : st) benchmark::DoNotOptimize(is_weakly_semicommutative(*R).truth);
}
BENCHMARK(BM_WeaklySemicommutative)->Unit(benchmark::kMillisecond);

void BM_Materialize(benchmark::State& st) {
  const auto R = ring("T(2,Zmod(12))");
  for (auto _ : st) benchmark::DoNotOptimize(materialize(R)->size());
}
BENCHMARK(BM_Materialize)->Unit(benchmark::kMillisecond);

void BM_Z2aTruncation(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(z2a_quotient()->ideal().truncated_dim());
}
BENCHMARK(BM_Z2aTruncation)->Unit(benchmark::kMillisecond);

void BM_NilradicalEquality(benchmark::State& st) {
  const SkewPolyRing P(Endomorphism::identity(ring("Product(Fp(2),Fp(3))")));
  BoundedOptions o;
  o.degree = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(nilradical_equality_check(P, o).holds);
}
BENCHMARK(BM_NilradicalEquality)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ThreadScaling(benchmark::State& st) {
  const auto R = ring("T(3,Zmod(4))");
  const unsigned saved = thread_count();
  set_thread_count(static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_lnzs(*R).truth);
  set_thread_count(saved);
}
BENCHMARK(BM_ThreadScaling)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ParseSpec(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(parse_spec("TrivExt(TrivExt(Product(Fp(2),T(2,Zmod(4)))))"));
}
BENCHMARK(BM_ParseSpec);

}  // namespace

BENCHMARK_MAIN();
