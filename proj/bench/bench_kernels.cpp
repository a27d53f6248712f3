// Serial reference vs OpenMP kernels, plus the frame-operator path that
// sits on top of them.

#include <benchmark/benchmark.h>

#include <vector>

#include "tensorframe/kernels.hpp"
#include "tensorframe/modframe.hpp"
#include "tensorframe/random.hpp"

namespace {

using tensorframe::Rng;
using tensorframe::kernels::Complex;

std::vector<Complex> entries(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

template <auto Gemm>
void BM_Gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = entries(n * n, 1), b = entries(n * n, 2);
  std::vector<Complex> c(n * n);
  for (auto _ : state) {
    Gemm(a, b, c, n, n, n);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <auto Kron>
void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = entries(n * n, 3), b = entries(n * n, 4);
  std::vector<Complex> out(n * n * n * n);
  for (auto _ : state) {
    Kron(a, n, n, b, n, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(out.size() * sizeof(Complex)));
}

void BM_TensorFrameOperator(benchmark::State& state) {
  Rng rng(5);
  const tensorframe::modframe::HilbertModule m(tensorframe::cstar::CStarAlgebra({2, 1}),
                                               static_cast<std::size_t>(state.range(0)));
  const auto f = tensorframe::modframe::random_frame(m, m.rank + 2, rng);
  const auto t = tensorframe::modframe::tensor_frame(f, f);
  for (auto _ : state) benchmark::DoNotOptimize(tensorframe::modframe::frame_bounds(t));
}

}  // namespace

BENCHMARK(BM_Gemm<tensorframe::kernels::serial::gemm>)->Name("gemm/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Gemm<tensorframe::kernels::parallel::gemm>)->Name("gemm/parallel")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Kron<tensorframe::kernels::serial::kron>)->Name("kron/serial")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Kron<tensorframe::kernels::parallel::kron>)->Name("kron/parallel")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_TensorFrameOperator)->DenseRange(2, 4);

BENCHMARK_MAIN();
