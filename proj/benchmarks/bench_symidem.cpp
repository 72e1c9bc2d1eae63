#include <benchmark/benchmark.h>

#include "symidem/idempotents.hpp"
#include "symidem/symtensor.hpp"
#include "symidem/verify.hpp"

using namespace symidem;

namespace {

AlgebraKind kind_of(std::int64_t v) { return v == 8 ? AlgebraKind::Octonion : AlgebraKind::Quaternion; }

std::pair<SymTensor, SymTensor> operands(AlgebraKind kind, std::size_t n) {
  Sampler s(0xC0FFEE);
  return {s.tensor(kind, FieldTag::RationalReal, n, 6), s.tensor(kind, FieldTag::RationalReal, n, 6)};
}

void BM_SparseMul(benchmark::State& state) {
  const auto [x, y] = operands(kind_of(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
}

void BM_DenseOracle(benchmark::State& state) {
  const auto [x, y] = operands(kind_of(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(dense_mul_oracle(x, y, 1u << 16));
}

void BM_CentralIdempotentMul(benchmark::State& state) {
  const auto kind = kind_of(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto& e = central_idempotent(n, n, kind, FieldTag::RationalReal);
  for (auto _ : state) benchmark::DoNotOptimize(mul(e, e));
}

void BM_CentralProductRoute(benchmark::State& state) {
  const auto kind = kind_of(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(central_idempotent_product(n, n - 1, kind));
}

void BM_CentralRecursiveRoute(benchmark::State& state) {
  const auto kind = kind_of(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(central_idempotent_recursive(n, n - 1, kind));
}

void BM_Theorem1Set(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_set(n, n, FieldTag::GaussianComplex));
}

}  // namespace

BENCHMARK(BM_SparseMul)->ArgsProduct({{4, 8}, {2, 3, 4}});
BENCHMARK(BM_DenseOracle)->ArgsProduct({{4, 8}, {2, 3, 4}});
BENCHMARK(BM_CentralIdempotentMul)->ArgsProduct({{4}, {2, 4, 6}})->Args({8, 2})->Args({8, 4});
BENCHMARK(BM_CentralProductRoute)->ArgsProduct({{4, 8}, {2, 3, 4}});
BENCHMARK(BM_CentralRecursiveRoute)->ArgsProduct({{4, 8}, {2, 3, 4}});
BENCHMARK(BM_Theorem1Set)->DenseRange(1, 4);
BENCHMARK_MAIN();
