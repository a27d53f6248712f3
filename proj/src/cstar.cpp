#include "tensorframe/cstar.hpp"

#include <algorithm>
#include <string>

#include "tensorframe/error.hpp"
#include "tensorframe/random.hpp"

namespace tensorframe::cstar {

CStarAlgebra::CStarAlgebra(std::vector<std::size_t> block_dims)
    : block_dims_(std::move(block_dims)) {
  if (block_dims_.empty()) throw InvalidInput("algebra needs at least one block");
  for (auto k : block_dims_)
    if (k == 0) throw InvalidInput("algebra block dimension must be positive");
}

std::size_t CStarAlgebra::dimension() const {
  std::size_t d = 0;
  for (auto k : block_dims_) d += k * k;
  return d;
}

AlgebraElement::AlgebraElement(CStarAlgebra algebra, std::vector<ComplexMatrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  const auto& dims = algebra_.block_dims();
  if (blocks_.size() != dims.size())
    throw ShapeMismatch("element has " + std::to_string(blocks_.size()) + " blocks, algebra " +
                        std::to_string(dims.size()));
  for (std::size_t b = 0; b < dims.size(); ++b)
    if (blocks_[b].rows() != dims[b] || blocks_[b].cols() != dims[b])
      throw ShapeMismatch("block " + std::to_string(b) + " must be " + std::to_string(dims[b]) +
                          "x" + std::to_string(dims[b]));
}

AlgebraElement AlgebraElement::zero(const CStarAlgebra& algebra) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : algebra.block_dims()) blocks.emplace_back(k, k);
  return {algebra, std::move(blocks)};
}

AlgebraElement AlgebraElement::unit(const CStarAlgebra& algebra) {
  return scalar(algebra, 1.0);
}

AlgebraElement AlgebraElement::scalar(const CStarAlgebra& algebra, Complex s) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : algebra.block_dims()) blocks.push_back(s * ComplexMatrix::identity(k));
  return {algebra, std::move(blocks)};
}

AlgebraElement AlgebraElement::matrix_unit(const CStarAlgebra& algebra, std::size_t block,
                                           std::size_t r, std::size_t s) {
  AlgebraElement e = zero(algebra);
  if (block >= algebra.block_count() || r >= algebra.block_dims()[block] ||
      s >= algebra.block_dims()[block])
    throw InvalidInput("matrix unit index out of range");
  e.blocks_[block](r, s) = 1.0;
  return e;
}

AlgebraElement AlgebraElement::random(const CStarAlgebra& algebra, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : algebra.block_dims()) blocks.push_back(rng.matrix(k, k));
  return {algebra, std::move(blocks)};
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement r = *this;
  for (auto& b : r.blocks_) b = b.adjoint();
  return r;
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("elements live in different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_algebra(*this, other);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += other.blocks_[b];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_algebra(*this, other);
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= other.blocks_[b];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(Complex s, AlgebraElement a) { return a *= s; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.blocks().size());
  for (std::size_t k = 0; k < a.blocks().size(); ++k) blocks.push_back(a.block(k) * b.block(k));
  return {a.algebra(), std::move(blocks)};
}

double norm(const AlgebraElement& a) {
  double n = 0.0;
  for (const auto& b : a.blocks()) n = std::max(n, linalg::operator_norm(b));
  return n;
}

double max_block_frobenius(const AlgebraElement& a) {
  double n = 0.0;
  for (const auto& b : a.blocks()) n = std::max(n, linalg::frobenius_norm(b));
  return n;
}

Complex trace(const AlgebraElement& a) {
  Complex t{0.0, 0.0};
  for (const auto& b : a.blocks()) t += linalg::trace(b);
  return t;
}

bool is_hermitian(const AlgebraElement& a, double tol) {
  return std::all_of(a.blocks().begin(), a.blocks().end(),
                     [tol](const ComplexMatrix& b) { return linalg::is_hermitian(b, tol); });
}

bool elem_positive(const AlgebraElement& a, double tol) {
  for (std::size_t b = 0; b < a.blocks().size(); ++b) {
    if (!linalg::is_hermitian(a.block(b), tol))
      throw NotHermitian("block " + std::to_string(b) + " is not Hermitian");
    if (!linalg::is_psd(a.block(b), tol)) return false;
  }
  return true;
}

bool loewner_leq(const AlgebraElement& a, const AlgebraElement& b, double tol) {
  require_same_algebra(a, b);
  if (!is_hermitian(a, tol) || !is_hermitian(b, tol))
    throw NotHermitian("Loewner order needs Hermitian elements");
  return elem_positive(b - a, tol);
}

AlgebraElement modulus(const AlgebraElement& a) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& b : a.blocks()) blocks.push_back(linalg::psd_sqrt(linalg::adjoint_times(b, b)));
  return {a.algebra(), std::move(blocks)};
}

bool is_minimal_projection(const AlgebraElement& e, double tol) {
  if (!is_hermitian(e, tol)) return false;
  const AlgebraElement sq = e * e;
  const double scale = std::max(1.0, max_block_frobenius(e));
  if (max_block_frobenius(sq - e) > tol * scale) return false;
  std::size_t rank = 0;
  for (const auto& b : e.blocks()) {
    const auto eig = linalg::hermitian_eigen(b, tol);
    rank += static_cast<std::size_t>(
        std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(), [](double x) { return x > 0.5; }));
  }
  return rank == 1;
}

CStarAlgebra algebra_tensor(const CStarAlgebra& a, const CStarAlgebra& b) {
  std::vector<std::size_t> dims;
  dims.reserve(a.block_count() * b.block_count());
  for (auto ka : a.block_dims())
    for (auto kb : b.block_dims()) dims.push_back(ka * kb);
  return CStarAlgebra(std::move(dims));
}

AlgebraElement elem_tensor(const AlgebraElement& a, const AlgebraElement& b) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.blocks().size() * b.blocks().size());
  for (const auto& ba : a.blocks())
    for (const auto& bb : b.blocks()) blocks.push_back(linalg::kron(ba, bb));
  return {algebra_tensor(a.algebra(), b.algebra()), std::move(blocks)};
}

}  // namespace tensorframe::cstar
