#include <benchmark/benchmark.h>

#include <random>

#include "kv4/census.hpp"
#include "kv4/classify.hpp"
#include "kv4/linalg.hpp"

using namespace kv4;

namespace {

Matrix random_matrix(Field f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (auto& e : m.entries()) e = static_cast<Elem>(rng() % f.order());
  return m;
}

Field field_of(std::int64_t degree) {
  return degree == 1 ? Field::gf2() : Field::standard(static_cast<unsigned>(degree));
}

void BM_rref(benchmark::State& state) {
  const Matrix m = random_matrix(field_of(state.range(1)), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_rref_serial(benchmark::State& state) {
  const Matrix m = random_matrix(field_of(state.range(1)), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref_serial(m));
}

void BM_decompose(benchmark::State& state) {
  const Field f = Field::gf2();
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::vector<KModule> parts{canonical(f, Label::syzygy_pos(n)), canonical(f, Label::syzygy_neg(n)),
                             canonical(f, Label::zero_band(n)), canonical(f, Label::band(Poly::x(f), n)),
                             canonical(f, Label::free_module())};
  const KModule sum = direct_sum(f, parts);
  Matrix p = random_matrix(f, sum.dim(), 3);
  for (std::uint64_t s = 4; !inverse(p); ++s) p = random_matrix(f, sum.dim(), s);
  const KModule m = change_basis(sum, p);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}

void BM_enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(Field::gf2(), static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_rref)->ArgsProduct({{64, 256, 512}, {1, 4}});
BENCHMARK(BM_rref_serial)->ArgsProduct({{64, 256, 512}, {1, 4}});
BENCHMARK(BM_decompose)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(BM_enumerate)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
