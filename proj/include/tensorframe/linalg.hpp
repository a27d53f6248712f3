#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tensorframe::linalg {

using Complex = std::complex<double>;

/// Default relative tolerance for Hermitian and positivity checks.
inline constexpr double kDefaultTol = 1e-9;

/// Dense complex matrix, row-major. Column vectors are d x 1 matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Complex> data() { return entries_; }
  std::span<const Complex> data() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

/// a* b without materializing a*.
ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& m);
/// Largest singular value.
double operator_norm(const ComplexMatrix& m);
double min_singular_value(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// Block (i,j) of the result equals m(i,j) * n.
ComplexMatrix kron(const ComplexMatrix& m, const ComplexMatrix& n);

bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, column k pairs with eigenvalues[k]
  int sweeps = 0;
};

/// Cyclic Jacobi on a Hermitian matrix.
/// Throws NotHermitian, NoConvergence (more than 100 sweeps).
EigenResult hermitian_eigen(const ComplexMatrix& m, double tol = kDefaultTol);

/// lambda_min(m) >= -tol * max(1, ||m||).
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// Applies f to the spectrum of a Hermitian matrix.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F f);

/// Principal square root of a PSD matrix (negative rounding noise is clamped).
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Gauss-Jordan with partial pivoting. Throws SingularMatrix.
ComplexMatrix inverse(const ComplexMatrix& m);

/// Row-major vec: the inverse of reshape_vec_to_matrix.
std::vector<Complex> vec(const ComplexMatrix& m);

/// M(i,j) = z[i*m + j]; kron(P,Q) z reshapes to P M Q^T.
ComplexMatrix reshape_vec_to_matrix(std::span<const Complex> z, std::size_t n, std::size_t m);

// ---------------------------------------------------------------------------

template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F f) {
  const EigenResult e = hermitian_eigen(m);
  const std::size_t n = m.rows();
  ComplexMatrix scaled = e.eigenvectors;
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(e.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, k) *= fk;
  }
  return scaled * e.eigenvectors.adjoint();
}

}  // namespace tensorframe::linalg
