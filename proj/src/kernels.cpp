#include "tensorframe/kernels.hpp"

#include <cstdint>

namespace tensorframe::kernels {

namespace {

// One output entry of a*b. Shared by both variants so the summation order
// is the same.
inline Complex gemm_entry(const Complex* a, const Complex* b, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t n) {
  Complex acc{0.0, 0.0};
  const Complex* arow = a + i * k;
  for (std::size_t l = 0; l < k; ++l) acc += arow[l] * b[l * n + j];
  return acc;
}

inline Complex adjoint_gemm_entry(const Complex* a, const Complex* b, std::size_t i,
                                  std::size_t j, std::size_t m, std::size_t k, std::size_t n) {
  Complex acc{0.0, 0.0};
  for (std::size_t l = 0; l < k; ++l) acc += std::conj(a[l * m + i]) * b[l * n + j];
  return acc;
}

}  // namespace

namespace serial {

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = gemm_entry(a.data(), b.data(), i, j, k, n);
}

void adjoint_gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                  std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i * n + j] = adjoint_gemm_entry(a.data(), b.data(), i, j, m, k, n);
}

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc, std::span<Complex> out) {
  const std::size_t oc = ac * bc;
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t p = 0; p < br; ++p)
      for (std::size_t j = 0; j < ac; ++j)
        for (std::size_t q = 0; q < bc; ++q)
          out[(i * br + p) * oc + j * bc + q] = a[i * ac + j] * b[p * bc + q];
}

}  // namespace serial

namespace parallel {

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t m, std::size_t k, std::size_t n) {
  const auto total = static_cast<std::int64_t>(m * n);
  const Complex* ap = a.data();
  const Complex* bp = b.data();
  Complex* cp = c.data();
#pragma omp parallel for schedule(static) if (m * n * k >= kParallelThreshold)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / n;
    const auto j = static_cast<std::size_t>(idx) % n;
    cp[idx] = gemm_entry(ap, bp, i, j, k, n);
  }
}

void adjoint_gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                  std::size_t m, std::size_t k, std::size_t n) {
  const auto total = static_cast<std::int64_t>(m * n);
  const Complex* ap = a.data();
  const Complex* bp = b.data();
  Complex* cp = c.data();
#pragma omp parallel for schedule(static) if (m * n * k >= kParallelThreshold)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const auto i = static_cast<std::size_t>(idx) / n;
    const auto j = static_cast<std::size_t>(idx) % n;
    cp[idx] = adjoint_gemm_entry(ap, bp, i, j, m, k, n);
  }
}

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc, std::span<Complex> out) {
  const std::size_t orows = ar * br;
  const std::size_t oc = ac * bc;
  const auto total = static_cast<std::int64_t>(orows);
#pragma omp parallel for schedule(static) if (orows * oc >= kParallelThreshold)
  for (std::int64_t r = 0; r < total; ++r) {
    const auto i = static_cast<std::size_t>(r) / br;
    const auto p = static_cast<std::size_t>(r) % br;
    Complex* orow = out.data() + static_cast<std::size_t>(r) * oc;
    for (std::size_t j = 0; j < ac; ++j) {
      const Complex aij = a[i * ac + j];
      for (std::size_t q = 0; q < bc; ++q) orow[j * bc + q] = aij * b[p * bc + q];
    }
  }
}

}  // namespace parallel

}  // namespace tensorframe::kernels
