#pragma once

// Dense inner loops behind linalg. Every kernel has a serial reference
// and an OpenMP variant with identical per-entry arithmetic, so the two
// agree bit for bit; tests and bench/ compare them.

#include <complex>
#include <cstddef>
#include <span>

namespace tensorframe::kernels {

using Complex = std::complex<double>;

/// Below this many output entries the parallel variants run serially.
inline constexpr std::size_t kParallelThreshold = 4096;

namespace serial {

// c (m x n) = a (m x k) * b (k x n), all row-major.
void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t m, std::size_t k, std::size_t n);

// c (m x n) = a^* b with a (k x m), b (k x n).
void adjoint_gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                  std::size_t m, std::size_t k, std::size_t n);

// out ((ar*br) x (ac*bc)) = kron(a, b).
void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc, std::span<Complex> out);

}  // namespace serial

namespace parallel {

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t m, std::size_t k, std::size_t n);

void adjoint_gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                  std::size_t m, std::size_t k, std::size_t n);

void kron(std::span<const Complex> a, std::size_t ar, std::size_t ac,
          std::span<const Complex> b, std::size_t br, std::size_t bc, std::span<Complex> out);

}  // namespace parallel

}  // namespace tensorframe::kernels
