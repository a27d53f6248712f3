#include "tensorframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tensorframe/error.hpp"
#include "tensorframe/kernels.hpp"

namespace tensorframe::linalg {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-12;

std::string shape_of(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch(std::string(op) + ": " + shape_of(a) + " vs " + shape_of(b));
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw ShapeMismatch("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " given " + std::to_string(entries_.size()) + " entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return {v.size(), 1, std::vector<Complex>(v.begin(), v.end())};
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix r = *this;
  for (auto& z : r.entries_) z = std::conj(z);
  return r;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
  ComplexMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("multiply: " + shape_of(a) + " * " + shape_of(b));
  ComplexMatrix c(a.rows(), b.cols());
  kernels::parallel::gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

ComplexMatrix adjoint_times(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows())
    throw ShapeMismatch("adjoint_times: " + shape_of(a) + "^* * " + shape_of(b));
  ComplexMatrix c(a.cols(), b.cols());
  kernels::parallel::adjoint_gemm(a.data(), b.data(), c.data(), a.cols(), a.rows(), b.cols());
  return c;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

double operator_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  const EigenResult e = hermitian_eigen(adjoint_times(m, m));
  return std::sqrt(std::max(0.0, e.eigenvalues.back()));
}

double min_singular_value(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  const EigenResult e = hermitian_eigen(adjoint_times(m, m));
  return std::sqrt(std::max(0.0, e.eigenvalues.front()));
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("trace of " + shape_of(m));
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& m, const ComplexMatrix& n) {
  ComplexMatrix out(m.rows() * n.rows(), m.cols() * n.cols());
  kernels::parallel::kron(m.data(), m.rows(), m.cols(), n.data(), n.rows(), n.cols(),
                          out.data());
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  double diff = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) diff += std::norm(m(i, j) - std::conj(m(j, i)));
  return std::sqrt(diff) <= tol * frobenius_norm(m);
}

EigenResult hermitian_eigen(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw NotHermitian("eigen: matrix is " + shape_of(m));
  if (!is_hermitian(m, tol)) throw NotHermitian("eigen: matrix is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffDiagonalTol * frobenius_norm(a);
  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == kMaxSweeps)
      throw NoConvergence("Jacobi exceeded " + std::to_string(kMaxSweeps) + " sweeps");
    ++sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase a_pq onto the real axis, then a real symmetric 2x2 rotation.
        const Complex phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenResult result;
  result.sweeps = sweeps;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v(i, order[k]);
  }
  return result;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (m.empty()) return true;
  const EigenResult e = hermitian_eigen(m, tol);
  const double scale = std::max({1.0, std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back())});
  return e.eigenvalues.front() >= -tol * scale;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  return hermitian_function(m, [](double x) { return std::sqrt(std::max(0.0, x)); });
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of " + shape_of(m));
  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(n);
  double scale = 0.0;
  for (const auto& z : m.data()) scale = std::max(scale, std::abs(z));
  const double pivot_floor = 1e-14 * scale * static_cast<double>(std::max<std::size_t>(n, 1));

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= pivot_floor || a(piv, col) == Complex{})
      throw SingularMatrix("inverse: matrix is singular to working precision");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const Complex d = 1.0 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a(r, col);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Complex> vec(const ComplexMatrix& m) {
  return {m.data().begin(), m.data().end()};
}

ComplexMatrix reshape_vec_to_matrix(std::span<const Complex> z, std::size_t n, std::size_t m) {
  if (z.size() != n * m)
    throw ShapeMismatch("reshape: length " + std::to_string(z.size()) + " is not " +
                        std::to_string(n) + "*" + std::to_string(m));
  return {n, m, std::vector<Complex>(z.begin(), z.end())};
}

}  // namespace tensorframe::linalg
