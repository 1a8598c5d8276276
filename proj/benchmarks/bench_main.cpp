#include <benchmark/benchmark.h>

#include <random>

#include "steinberg/k2.hpp"
#include "steinberg/vdk.hpp"

using namespace steinberg;

namespace {

void BM_SteinbergTable(benchmark::State& state, const char* system) {
  const auto sys = RootDatum::parse(system);
  const auto f2 = make_ring("f2");
  for (auto _ : state) {
    auto t = steinberg_table(sys, f2);
    benchmark::DoNotOptimize(t.table.size());
    state.counters["cosets"] = static_cast<double>(t.table.size());
    state.counters["defined"] = static_cast<double>(t.stats.defined);
  }
}
BENCHMARK_CAPTURE(BM_SteinbergTable, A2, "A2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SteinbergTable, A3, "A3")->Unit(benchmark::kMillisecond);

void BM_RelativeIndex(benchmark::State& state) {
  const auto D = make_ring("quo(poly(f2,X),X^2)");
  const auto I = Ideal::generated(D, {element(D, "[0,1]").value()});
  const auto sys = RootDatum::parse("A2");
  for (auto _ : state) benchmark::DoNotOptimize(relative_subgroup_index(sys, I).index);
}
BENCHMARK(BM_RelativeIndex)->Unit(benchmark::kMillisecond);

// Products of root unipotents applied in place, one root per step.
void BM_UnipotentProduct(benchmark::State& state, const char* system, const char* ring) {
  const auto sys = RootDatum::parse(system);
  const auto R = make_ring(ring);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> root(0, sys->size() - 1);
  const auto elems = R->elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<std::pair<std::size_t, Value>> steps;
  for (int k = 0; k < 256; ++k) steps.emplace_back(root(rng), elems[pick(rng)]);
  for (auto _ : state) {
    RMatrix m = RMatrix::identity(R, sys->matrix_size());
    for (const auto& [a, x] : steps) m.right_unipotent(*sys, a, x);
    benchmark::DoNotOptimize(m.data().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps.size()));
}
BENCHMARK_CAPTURE(BM_UnipotentProduct, A3_z6, "A3", "z/6");
BENCHMARK_CAPTURE(BM_UnipotentProduct, D5_z9, "D5", "z/9");
BENCHMARK_CAPTURE(BM_UnipotentProduct, A3_dual, "A3", "quo(poly(f2,X),X^2)");

// Full matrix products, for comparison with the in-place update.
void BM_MatrixMultiply(benchmark::State& state) {
  const auto sys = RootDatum::parse("D5");
  const auto R = make_ring("z/9");
  const RMatrix a = unipotent(*sys, 0, R->one(), R) * unipotent(*sys, 7, R->from_int(4), R);
  const RMatrix b = unipotent(*sys, 3, R->from_int(2), R) * unipotent(*sys, 11, R->one(), R);
  for (auto _ : state) benchmark::DoNotOptimize((a * b).data().data());
}
BENCHMARK(BM_MatrixMultiply);

void BM_ExactWordEquality(benchmark::State& state) {
  const auto f2 = make_ring("f2");
  const ExactEquality eq(std::make_shared<SteinbergTable>(steinberg_table(type_a(4), f2)));
  std::vector<Value> u{f2->one(), f2->one(), f2->zero(), f2->one()};
  std::vector<Value> v{f2->one(), f2->one(), f2->one(), f2->zero()};
  const RVector uu(f2, u), vv(f2, v);
  const StWord x = X_gen(uu, vv), y = Y_gen(uu, vv);
  for (auto _ : state) benchmark::DoNotOptimize(eq.equal(x, y));
}
BENCHMARK(BM_ExactWordEquality);

void BM_VanDerKallenWord(benchmark::State& state) {
  const auto R = make_ring("z/6");
  std::vector<Value> u{R->from_int(2), R->from_int(3), R->from_int(5), R->one()};
  std::vector<Value> v{R->from_int(3), R->from_int(0), R->from_int(1), R->from_int(1)};
  const RVector uu(R, u), vv(R, v);
  for (auto _ : state) benchmark::DoNotOptimize(phi(X_gen(uu, vv)).data().data());
}
BENCHMARK(BM_VanDerKallenWord);

}  // namespace
BENCHMARK_MAIN();
