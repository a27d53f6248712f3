#include "tensorframe/random.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tensorframe/error.hpp"

namespace tensorframe {

using linalg::Complex;
using linalg::ComplexMatrix;

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw InvalidParams("uniform_int: empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + x % span;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

ComplexMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.data()) z = complex_normal();
  return m;
}

ComplexMatrix Rng::hermitian(std::size_t n) {
  const ComplexMatrix x = matrix(n, n);
  return 0.5 * (x + x.adjoint());
}

ComplexMatrix Rng::unitary(std::size_t n) {
  ComplexMatrix u = orthonormal_columns(matrix(n, n));
  while (u.cols() != n) u = orthonormal_columns(matrix(n, n));
  return u;
}

ComplexMatrix orthonormal_columns(const ComplexMatrix& m, double drop_tol) {
  const std::size_t d = m.rows();
  std::vector<std::vector<Complex>> kept;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::vector<Complex> v(d);
    double original = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = m(i, c);
      original += std::norm(v[i]);
    }
    original = std::sqrt(original);
    if (original == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : kept) {
        Complex dot{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) dot += std::conj(q[i]) * v[i];
        for (std::size_t i = 0; i < d; ++i) v[i] -= dot * q[i];
      }
    }
    double norm = 0.0;
    for (const auto& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm <= drop_tol * original) continue;
    for (auto& z : v) z /= norm;
    kept.push_back(std::move(v));
  }
  ComplexMatrix q(d, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c)
    for (std::size_t i = 0; i < d; ++i) q(i, c) = kept[c][i];
  return q;
}

}  // namespace tensorframe
