#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tensorframe/cstar.hpp"

namespace tensorframe {
class Rng;
}

namespace tensorframe::modframe {

using cstar::AlgebraElement;
using cstar::CStarAlgebra;
using linalg::Complex;
using linalg::ComplexMatrix;

/// The standard left Hilbert A-module A^n.
struct HilbertModule {
  CStarAlgebra algebra;
  std::size_t rank = 1;

  HilbertModule() = default;
  HilbertModule(CStarAlgebra a, std::size_t n);

  /// Complex dimension of A^n, i.e. n * dim(A).
  std::size_t dimension() const { return rank * algebra.dimension(); }

  friend bool operator==(const HilbertModule&, const HilbertModule&) = default;
};

/// An n-tuple of algebra elements.
///
/// For block b of size k the coordinates line up into the k x (n k)
/// matrix [x_1^b ... x_n^b]; the inner product and adjointable operators
/// are products of these row blocks.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(HilbertModule module, std::vector<AlgebraElement> coords);

  static ModuleVector zero(const HilbertModule& module);
  static ModuleVector random(const HilbertModule& module, Rng& rng);
  /// Hilbert-space vector in C^n.
  static ModuleVector from_scalars(std::span<const Complex> v);
  /// Unit vector number idx of the flattened complex basis of E.
  static ModuleVector basis_vector(const HilbertModule& module, std::size_t idx);
  static ModuleVector from_row_blocks(const HilbertModule& module,
                                      const std::vector<ComplexMatrix>& rows);

  const HilbertModule& module() const { return module_; }
  const std::vector<AlgebraElement>& coords() const { return coords_; }
  const AlgebraElement& coord(std::size_t i) const { return coords_[i]; }

  ComplexMatrix row_block(std::size_t b) const;

  /// Coordinates, then blocks, then row-major entries. The trace inner
  /// product on E is the Euclidean inner product of this vector.
  std::vector<Complex> flatten() const;

  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector& operator-=(const ModuleVector& other);

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  HilbertModule module_;
  std::vector<AlgebraElement> coords_;
};

ModuleVector operator+(ModuleVector a, const ModuleVector& b);
ModuleVector operator-(ModuleVector a, const ModuleVector& b);
/// Left module action a.x.
ModuleVector operator*(const AlgebraElement& a, const ModuleVector& x);

/// <x, y> = sum_i x_i y_i^*. Throws ModuleMismatch.
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

/// Euclidean norm of the flattened vector, sqrt(trace <x,x>).
double trace_norm(const ModuleVector& x);

/// Adjointable A-linear map on A^n: (Tx)_j = sum_i x_i t_ij.
///
/// Stored as one (n k_b) x (n k_b) complex matrix per algebra block,
/// whose (i, j) sub-block is t_ij restricted to block b. Composition,
/// adjoints and inverses are then plain matrix algebra.
class AdjointableOperator {
 public:
  AdjointableOperator() = default;
  AdjointableOperator(HilbertModule module, std::vector<ComplexMatrix> blocks);

  static AdjointableOperator identity(const HilbertModule& module);
  static AdjointableOperator from_coeffs(const HilbertModule& module,
                                         const std::vector<std::vector<AlgebraElement>>& coeffs);
  /// Hilbert-space operator on C^n from its usual matrix M (x -> M x).
  static AdjointableOperator from_matrix(const ComplexMatrix& m);
  static AdjointableOperator random(const HilbertModule& module, Rng& rng);

  const HilbertModule& module() const { return module_; }
  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

  AlgebraElement coeff(std::size_t i, std::size_t j) const;
  /// For modules over C: the matrix M with Tx = Mx on column vectors.
  ComplexMatrix hilbert_matrix() const;

  ModuleVector apply(const ModuleVector& x) const;
  AdjointableOperator adjoint() const;

  /// Matrix of the operator on the flattened space E (column = image of
  /// basis vector). Built by brute force, for cross-checking.
  ComplexMatrix trace_representation() const;

  friend bool operator==(const AdjointableOperator&, const AdjointableOperator&) = default;

 private:
  HilbertModule module_;
  std::vector<ComplexMatrix> blocks_;
};

/// (S * T) x = S(T x).
AdjointableOperator operator*(const AdjointableOperator& s, const AdjointableOperator& t);
AdjointableOperator operator+(const AdjointableOperator& s, const AdjointableOperator& t);
AdjointableOperator operator-(const AdjointableOperator& s, const AdjointableOperator& t);
AdjointableOperator operator*(Complex c, const AdjointableOperator& t);

double operator_norm(const AdjointableOperator& t);
/// Max over blocks of the Frobenius norm, for residuals.
double residual_norm(const AdjointableOperator& t);
/// Throws SingularOperator.
AdjointableOperator inverse(const AdjointableOperator& t, double tol = linalg::kDefaultTol);
/// Sorted spectrum of a self-adjoint operator (each block's eigenvalues once).
std::vector<double> spectrum(const AdjointableOperator& t);

struct ModuleFrame {
  HilbertModule module;
  std::vector<ModuleVector> vectors;
  std::vector<std::string> labels;

  ModuleFrame() = default;
  ModuleFrame(HilbertModule m, std::vector<ModuleVector> v, std::vector<std::string> l = {});

  std::size_t size() const { return vectors.size(); }
};

/// Frame in C^d from its vectors.
ModuleFrame hilbert_frame(const std::vector<std::vector<Complex>>& vectors);
ModuleFrame random_frame(const HilbertModule& module, std::size_t count, Rng& rng);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Returned when the lower inequality fails; carries the spectrum ends so
/// callers still get the Bessel bound.
struct NotAFrame {
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

using BoundsResult = std::variant<FrameBounds, NotAFrame>;

inline bool is_frame(const BoundsResult& r) { return std::holds_alternative<FrameBounds>(r); }
/// Throws NotAFrameError when r holds NotAFrame.
FrameBounds expect_bounds(const BoundsResult& r);

/// Classifies extremal eigenvalues: NotAFrame when lo <= tol * max(1, hi).
BoundsResult classify_bounds(double lo, double hi, double tol);

/// S^ x = sum_i <x, x_i> x_i. Coefficients t_kj = sum_i (x_i)_k^* (x_i)_j.
AdjointableOperator frame_operator(const ModuleFrame& f);

/// The operator S with x = sum_i <x, S x_i> x_i, which is the inverse of
/// frame_operator. Throws NotAFrameError if S^ is singular.
AdjointableOperator reconstruction_operator(const ModuleFrame& f);

/// Optimal bounds from the extremal spectrum of S^.
BoundsResult frame_bounds(const ModuleFrame& f, double tol = linalg::kDefaultTol);

/// Independent check of A<x,x> <= sum_i <x,x_i><x_i,x> <= B<x,x> inside
/// the algebra, for `samples` random x.
bool verify_frame_pointwise(const ModuleFrame& f, const FrameBounds& bounds, std::size_t samples,
                            std::uint64_t seed, double tol = 1e-7);

/// sum_i <x, S^{-1} x_i> x_i. Throws NotAFrameError.
ModuleVector reconstruct(const ModuleFrame& f, const ModuleVector& x);

/// Basic elements, pairwise orthogonal, and x = sum <x,v>v on a basis of E.
bool is_orthonormal_basis(const std::vector<ModuleVector>& v, double tol = linalg::kDefaultTol);

/// Module over A (x) B of rank n m.
HilbertModule tensor_module(const HilbertModule& e, const HilbertModule& f);
/// Coordinates x_i (x) y_j, i outer.
ModuleVector tensor_vector(const ModuleVector& x, const ModuleVector& y);
/// {u_i (x) v_j}, i outer.
ModuleFrame tensor_frame(const ModuleFrame& fe, const ModuleFrame& ff);
/// (Q (x) R)(x (x) y) = Qx (x) Ry.
AdjointableOperator tensor_operator(const AdjointableOperator& q, const AdjointableOperator& r);

/// {Q x_i}. Its frame operator is Q S^ Q^*. Throws SingularOperator.
ModuleFrame transform_frame(const AdjointableOperator& q, const ModuleFrame& f,
                            double tol = linalg::kDefaultTol);

/// [A ||Q^{*-1}||^{-2}, B ||Q^*||^2], where the bounds of {Q x_i} must lie.
FrameBounds transformed_bound_interval(const AdjointableOperator& q, const FrameBounds& bounds);

}  // namespace tensorframe::modframe
