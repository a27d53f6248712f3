#pragma once

#include <cstdint>
#include <random>

#include "tensorframe/linalg.hpp"

namespace tensorframe {

/// Seeded source for every random instance the library, tests and CLI
/// build. Deviates are derived from raw mt19937_64 output with fixed
/// formulas so a seed means the same numbers on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer on [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  double normal();
  /// Real and imaginary parts independent standard normals.
  linalg::Complex complex_normal();

  linalg::ComplexMatrix matrix(std::size_t rows, std::size_t cols);
  linalg::ComplexMatrix hermitian(std::size_t n);
  /// Haar-ish unitary from Gram-Schmidt of a Gaussian matrix.
  linalg::ComplexMatrix unitary(std::size_t n);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Orthonormalizes the columns of m (modified Gram-Schmidt, two passes).
/// Columns whose residual norm falls below drop_tol times their original
/// norm are dropped, so the result spans the column space of m.
linalg::ComplexMatrix orthonormal_columns(const linalg::ComplexMatrix& m, double drop_tol = 1e-12);

}  // namespace tensorframe
