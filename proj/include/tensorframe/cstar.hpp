#pragma once

#include <cstddef>
#include <vector>

#include "tensorframe/linalg.hpp"

namespace tensorframe {
class Rng;
}

namespace tensorframe::cstar {

using linalg::Complex;
using linalg::ComplexMatrix;

/// Finite-dimensional C*-algebra M_{k_1} + ... + M_{k_r}.
class CStarAlgebra {
 public:
  /// The scalars, M_1.
  CStarAlgebra() : block_dims_{1} {}
  explicit CStarAlgebra(std::vector<std::size_t> block_dims);

  const std::vector<std::size_t>& block_dims() const { return block_dims_; }
  std::size_t block_count() const { return block_dims_.size(); }
  /// Sum of k_b^2.
  std::size_t dimension() const;
  bool is_scalar() const { return block_dims_.size() == 1 && block_dims_[0] == 1; }

  friend bool operator==(const CStarAlgebra&, const CStarAlgebra&) = default;

 private:
  std::vector<std::size_t> block_dims_;
};

/// A tuple of square blocks, one per summand of the algebra.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(CStarAlgebra algebra, std::vector<ComplexMatrix> blocks);

  static AlgebraElement zero(const CStarAlgebra& algebra);
  static AlgebraElement unit(const CStarAlgebra& algebra);
  static AlgebraElement scalar(const CStarAlgebra& algebra, Complex s);
  /// Matrix unit e_{rs} of one block, zero elsewhere.
  static AlgebraElement matrix_unit(const CStarAlgebra& algebra, std::size_t block, std::size_t r,
                                    std::size_t s);
  static AlgebraElement random(const CStarAlgebra& algebra, Rng& rng);

  const CStarAlgebra& algebra() const { return algebra_; }
  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }
  const ComplexMatrix& block(std::size_t b) const { return blocks_[b]; }
  ComplexMatrix& block(std::size_t b) { return blocks_[b]; }

  AlgebraElement adjoint() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(Complex s);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  CStarAlgebra algebra_;
  std::vector<ComplexMatrix> blocks_;
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(Complex s, AlgebraElement a);

/// C*-norm: max over blocks of the largest singular value.
double norm(const AlgebraElement& a);
/// Max over blocks of the Frobenius norm, for residuals.
double max_block_frobenius(const AlgebraElement& a);
/// Sum of block traces.
Complex trace(const AlgebraElement& a);

bool is_hermitian(const AlgebraElement& a, double tol = linalg::kDefaultTol);

/// Every block PSD. Throws NotHermitian.
bool elem_positive(const AlgebraElement& a, double tol = linalg::kDefaultTol);

/// a <= b in the Loewner order. Throws AlgebraMismatch, NotHermitian.
bool loewner_leq(const AlgebraElement& a, const AlgebraElement& b,
                 double tol = linalg::kDefaultTol);

/// |a| = (a* a)^{1/2}.
AlgebraElement modulus(const AlgebraElement& a);

/// Hermitian, idempotent, and total rank 1 across blocks (eAe = Ce).
bool is_minimal_projection(const AlgebraElement& e, double tol = linalg::kDefaultTol);

/// Block dims k_a * k_b, a-block outer.
CStarAlgebra algebra_tensor(const CStarAlgebra& a, const CStarAlgebra& b);

/// Block (i, j) of the result is kron(a.block(i), b.block(j)).
AlgebraElement elem_tensor(const AlgebraElement& a, const AlgebraElement& b);

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace tensorframe::cstar
