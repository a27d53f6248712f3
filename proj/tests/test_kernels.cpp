#include <doctest.h>

#include <vector>

#include "tensorframe/kernels.hpp"
#include "tensorframe/random.hpp"

using namespace tensorframe;

namespace {

std::vector<kernels::Complex> random_entries(Rng& rng, std::size_t n) {
  std::vector<kernels::Complex> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

}  // namespace

TEST_CASE("parallel kernels agree bit for bit with the serial reference") {
  Rng rng(1);
  for (std::size_t n : {3u, 40u, 90u}) {
    const std::size_t m = n, k = n + 1, p = n + 2;
    const auto a = random_entries(rng, m * k);
    const auto b = random_entries(rng, k * p);
    std::vector<kernels::Complex> c1(m * p), c2(m * p);
    kernels::serial::gemm(a, b, c1, m, k, p);
    kernels::parallel::gemm(a, b, c2, m, k, p);
    CHECK(c1 == c2);

    const auto at = random_entries(rng, k * m);
    std::vector<kernels::Complex> d1(m * p), d2(m * p);
    kernels::serial::adjoint_gemm(at, b, d1, m, k, p);
    kernels::parallel::adjoint_gemm(at, b, d2, m, k, p);
    CHECK(d1 == d2);
  }
  const auto a = random_entries(rng, 12 * 9);
  const auto b = random_entries(rng, 8 * 7);
  std::vector<kernels::Complex> k1(96 * 63), k2(96 * 63);
  kernels::serial::kron(a, 12, 9, b, 8, 7, k1);
  kernels::parallel::kron(a, 12, 9, b, 8, 7, k2);
  CHECK(k1 == k2);
}

TEST_CASE("adjoint gemm conjugates the left factor") {
  const std::vector<kernels::Complex> a{{0.0, 1.0}};
  const std::vector<kernels::Complex> b{{2.0, 0.0}};
  std::vector<kernels::Complex> c(1);
  kernels::serial::adjoint_gemm(a, b, c, 1, 1, 1);
  CHECK(c[0] == kernels::Complex{0.0, -2.0});
}
