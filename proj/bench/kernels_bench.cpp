// Serial vs OpenMP kernels: Bareiss rank, Gauss-Jordan rref, CE assembly.

#include "kcontact/exterior/form.hpp"
#include "kcontact/linalg/elimination.hpp"
#include "kcontact/liealg/lie_algebra.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace kc;

namespace {

Matrix<Rational> random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> v(-9, 9), d(1, 4);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Rational(v(rng), d(rng));
      m(i, j).canonicalize();
    }
  return m;
}

// Heisenberg algebra of dimension 2k + 1.
LieAlgebra heisenberg(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    names.push_back("X" + std::to_string(i));
    names.push_back("Y" + std::to_string(i));
  }
  names.push_back("Z");
  const int n = 2 * k + 1;
  std::vector<BracketSpec> bs;
  for (int i = 0; i < k; ++i) {
    Vector z(static_cast<std::size_t>(n), Scalar(0));
    z.back() = 1;
    bs.push_back({2 * i, 2 * i + 1, z});
  }
  return LieAlgebra::build(names, bs);
}

void BM_rank_serial(benchmark::State& st) {
  const auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rank_serial(m));
}
void BM_rank_parallel(benchmark::State& st) {
  const auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(rank_parallel(m));
}
void BM_rref_serial(benchmark::State& st) {
  const auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(rref_serial(m));
}
void BM_rref_parallel(benchmark::State& st) {
  const auto m = random_matrix(static_cast<std::size_t>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(rref_parallel(m));
}
void BM_ce_serial(benchmark::State& st) {
  const LieAlgebra L = heisenberg(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ce_differential_serial(L));
}
void BM_ce_parallel(benchmark::State& st) {
  const LieAlgebra L = heisenberg(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ce_differential_parallel(L));
}

}  // namespace

BENCHMARK(BM_rank_serial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_parallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_rref_serial)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rref_parallel)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ce_serial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ce_parallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
