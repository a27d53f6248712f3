#include "tensorframe/modframe.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tensorframe/error.hpp"
#include "tensorframe/random.hpp"

namespace tensorframe::modframe {

namespace {

void require_same_module(const HilbertModule& a, const HilbertModule& b, const char* what) {
  if (!(a == b)) throw ModuleMismatch(std::string(what) + ": vectors belong to different modules");
}

}  // namespace

HilbertModule::HilbertModule(CStarAlgebra a, std::size_t n) : algebra(std::move(a)), rank(n) {
  if (rank == 0) throw InvalidInput("module rank must be at least 1");
}

// --- ModuleVector ----------------------------------------------------------

ModuleVector::ModuleVector(HilbertModule module, std::vector<AlgebraElement> coords)
    : module_(std::move(module)), coords_(std::move(coords)) {
  if (coords_.size() != module_.rank)
    throw ShapeMismatch("vector has " + std::to_string(coords_.size()) + " coordinates, module rank " +
                        std::to_string(module_.rank));
  for (const auto& c : coords_)
    if (!(c.algebra() == module_.algebra))
      throw AlgebraMismatch("vector coordinate lives in a different algebra");
}

ModuleVector ModuleVector::zero(const HilbertModule& module) {
  return {module, std::vector<AlgebraElement>(module.rank, AlgebraElement::zero(module.algebra))};
}

ModuleVector ModuleVector::random(const HilbertModule& module, Rng& rng) {
  std::vector<AlgebraElement> coords;
  coords.reserve(module.rank);
  for (std::size_t i = 0; i < module.rank; ++i)
    coords.push_back(AlgebraElement::random(module.algebra, rng));
  return {module, std::move(coords)};
}

ModuleVector ModuleVector::from_scalars(std::span<const Complex> v) {
  const CStarAlgebra c;
  std::vector<AlgebraElement> coords;
  coords.reserve(v.size());
  for (const auto& z : v) coords.push_back(AlgebraElement::scalar(c, z));
  return {HilbertModule(c, v.size()), std::move(coords)};
}

ModuleVector ModuleVector::basis_vector(const HilbertModule& module, std::size_t idx) {
  const std::size_t dim_a = module.algebra.dimension();
  if (idx >= module.dimension()) throw InvalidInput("basis index out of range");
  std::vector<AlgebraElement> coords(module.rank, AlgebraElement::zero(module.algebra));
  std::size_t r = idx % dim_a;
  const auto& dims = module.algebra.block_dims();
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const std::size_t sz = dims[b] * dims[b];
    if (r < sz) {
      coords[idx / dim_a].block(b)(r / dims[b], r % dims[b]) = 1.0;
      break;
    }
    r -= sz;
  }
  return {module, std::move(coords)};
}

ModuleVector ModuleVector::from_row_blocks(const HilbertModule& module,
                                           const std::vector<ComplexMatrix>& rows) {
  const auto& dims = module.algebra.block_dims();
  if (rows.size() != dims.size()) throw ShapeMismatch("row blocks do not match algebra");
  std::vector<AlgebraElement> coords(module.rank, AlgebraElement::zero(module.algebra));
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const std::size_t k = dims[b];
    if (rows[b].rows() != k || rows[b].cols() != module.rank * k)
      throw ShapeMismatch("row block " + std::to_string(b) + " has wrong shape");
    for (std::size_t i = 0; i < module.rank; ++i) coords[i].block(b) = rows[b].block(0, i * k, k, k);
  }
  return {module, std::move(coords)};
}

ComplexMatrix ModuleVector::row_block(std::size_t b) const {
  const std::size_t k = module_.algebra.block_dims()[b];
  ComplexMatrix r(k, module_.rank * k);
  for (std::size_t i = 0; i < module_.rank; ++i) r.set_block(0, i * k, coords_[i].block(b));
  return r;
}

std::vector<Complex> ModuleVector::flatten() const {
  std::vector<Complex> out;
  out.reserve(module_.dimension());
  for (const auto& c : coords_)
    for (const auto& b : c.blocks()) out.insert(out.end(), b.data().begin(), b.data().end());
  return out;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  require_same_module(module_, other.module_, "add");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& other) {
  require_same_module(module_, other.module_, "subtract");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }

ModuleVector operator*(const AlgebraElement& a, const ModuleVector& x) {
  std::vector<AlgebraElement> coords;
  coords.reserve(x.coords().size());
  for (const auto& c : x.coords()) coords.push_back(a * c);
  return {x.module(), std::move(coords)};
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
  require_same_module(x.module(), y.module(), "inner_product");
  const auto& alg = x.module().algebra;
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(alg.block_count());
  for (std::size_t b = 0; b < alg.block_count(); ++b) {
    // X Y^* with X, Y the k x nk row blocks.
    blocks.push_back(x.row_block(b) * y.row_block(b).adjoint());
  }
  return {alg, std::move(blocks)};
}

double trace_norm(const ModuleVector& x) {
  double s = 0.0;
  for (const auto& z : x.flatten()) s += std::norm(z);
  return std::sqrt(s);
}

// --- AdjointableOperator ---------------------------------------------------

AdjointableOperator::AdjointableOperator(HilbertModule module, std::vector<ComplexMatrix> blocks)
    : module_(std::move(module)), blocks_(std::move(blocks)) {
  const auto& dims = module_.algebra.block_dims();
  if (blocks_.size() != dims.size()) throw ShapeMismatch("operator blocks do not match algebra");
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const std::size_t n = module_.rank * dims[b];
    if (blocks_[b].rows() != n || blocks_[b].cols() != n)
      throw ShapeMismatch("operator block " + std::to_string(b) + " must be " + std::to_string(n) +
                          " square");
  }
}

AdjointableOperator AdjointableOperator::identity(const HilbertModule& module) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : module.algebra.block_dims())
    blocks.push_back(ComplexMatrix::identity(module.rank * k));
  return {module, std::move(blocks)};
}

AdjointableOperator AdjointableOperator::from_coeffs(
    const HilbertModule& module, const std::vector<std::vector<AlgebraElement>>& coeffs) {
  const std::size_t n = module.rank;
  if (coeffs.size() != n) throw ShapeMismatch("coefficient array must be rank x rank");
  const auto& dims = module.algebra.block_dims();
  std::vector<ComplexMatrix> blocks;
  for (auto k : dims) blocks.emplace_back(n * k, n * k);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i].size() != n) throw ShapeMismatch("coefficient array must be rank x rank");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(coeffs[i][j].algebra() == module.algebra))
        throw AlgebraMismatch("coefficient lives in a different algebra");
      for (std::size_t b = 0; b < dims.size(); ++b)
        blocks[b].set_block(i * dims[b], j * dims[b], coeffs[i][j].block(b));
    }
  }
  return {module, std::move(blocks)};
}

AdjointableOperator AdjointableOperator::from_matrix(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("operator matrix must be square");
  // Row-vector convention: x -> x T, so T = M^T.
  return {HilbertModule(CStarAlgebra(), m.rows()), {m.transpose()}};
}

AdjointableOperator AdjointableOperator::random(const HilbertModule& module, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : module.algebra.block_dims()) blocks.push_back(rng.matrix(module.rank * k, module.rank * k));
  return {module, std::move(blocks)};
}

AlgebraElement AdjointableOperator::coeff(std::size_t i, std::size_t j) const {
  const auto& dims = module_.algebra.block_dims();
  std::vector<ComplexMatrix> blocks;
  for (std::size_t b = 0; b < dims.size(); ++b)
    blocks.push_back(blocks_[b].block(i * dims[b], j * dims[b], dims[b], dims[b]));
  return {module_.algebra, std::move(blocks)};
}

ComplexMatrix AdjointableOperator::hilbert_matrix() const {
  if (!module_.algebra.is_scalar()) throw InvalidInput("hilbert_matrix needs a module over C");
  return blocks_[0].transpose();
}

ModuleVector AdjointableOperator::apply(const ModuleVector& x) const {
  require_same_module(module_, x.module(), "apply");
  std::vector<ComplexMatrix> rows;
  rows.reserve(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) rows.push_back(x.row_block(b) * blocks_[b]);
  return ModuleVector::from_row_blocks(module_, rows);
}

AdjointableOperator AdjointableOperator::adjoint() const {
  std::vector<ComplexMatrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return {module_, std::move(blocks)};
}

ComplexMatrix AdjointableOperator::trace_representation() const {
  const std::size_t n = module_.dimension();
  ComplexMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto image = apply(ModuleVector::basis_vector(module_, c)).flatten();
    for (std::size_t r = 0; r < n; ++r) m(r, c) = image[r];
  }
  return m;
}

AdjointableOperator operator*(const AdjointableOperator& s, const AdjointableOperator& t) {
  require_same_module(s.module(), t.module(), "compose");
  // x -> (x T_t) T_s.
  std::vector<ComplexMatrix> blocks;
  for (std::size_t b = 0; b < s.blocks().size(); ++b) blocks.push_back(t.blocks()[b] * s.blocks()[b]);
  return {s.module(), std::move(blocks)};
}

AdjointableOperator operator+(const AdjointableOperator& s, const AdjointableOperator& t) {
  require_same_module(s.module(), t.module(), "add");
  std::vector<ComplexMatrix> blocks;
  for (std::size_t b = 0; b < s.blocks().size(); ++b) blocks.push_back(s.blocks()[b] + t.blocks()[b]);
  return {s.module(), std::move(blocks)};
}

AdjointableOperator operator-(const AdjointableOperator& s, const AdjointableOperator& t) {
  require_same_module(s.module(), t.module(), "subtract");
  std::vector<ComplexMatrix> blocks;
  for (std::size_t b = 0; b < s.blocks().size(); ++b) blocks.push_back(s.blocks()[b] - t.blocks()[b]);
  return {s.module(), std::move(blocks)};
}

AdjointableOperator operator*(Complex c, const AdjointableOperator& t) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& b : t.blocks()) blocks.push_back(c * b);
  return {t.module(), std::move(blocks)};
}

double operator_norm(const AdjointableOperator& t) {
  double n = 0.0;
  for (const auto& b : t.blocks()) n = std::max(n, linalg::operator_norm(b));
  return n;
}

double residual_norm(const AdjointableOperator& t) {
  double n = 0.0;
  for (const auto& b : t.blocks()) n = std::max(n, linalg::frobenius_norm(b));
  return n;
}

AdjointableOperator inverse(const AdjointableOperator& t, double tol) {
  std::vector<ComplexMatrix> blocks;
  for (const auto& b : t.blocks()) {
    const double smax = linalg::operator_norm(b);
    if (linalg::min_singular_value(b) <= tol * std::max(1.0, smax))
      throw SingularOperator("operator is not invertible");
    try {
      blocks.push_back(linalg::inverse(b));
    } catch (const SingularMatrix& e) {
      throw SingularOperator(e.what());
    }
  }
  return {t.module(), std::move(blocks)};
}

std::vector<double> spectrum(const AdjointableOperator& t) {
  std::vector<double> out;
  for (const auto& b : t.blocks()) {
    const auto e = linalg::hermitian_eigen(b);
    out.insert(out.end(), e.eigenvalues.begin(), e.eigenvalues.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- Frames ----------------------------------------------------------------

ModuleFrame::ModuleFrame(HilbertModule m, std::vector<ModuleVector> v, std::vector<std::string> l)
    : module(std::move(m)), vectors(std::move(v)), labels(std::move(l)) {
  if (vectors.empty()) throw InvalidInput("frame must contain at least one vector");
  for (const auto& x : vectors) require_same_module(module, x.module(), "frame");
  if (labels.empty())
    for (std::size_t i = 0; i < vectors.size(); ++i) labels.push_back(std::to_string(i));
  if (labels.size() != vectors.size()) throw InvalidInput("one label per frame vector");
}

ModuleFrame hilbert_frame(const std::vector<std::vector<Complex>>& vectors) {
  if (vectors.empty()) throw InvalidInput("frame must contain at least one vector");
  std::vector<ModuleVector> v;
  for (const auto& x : vectors) v.push_back(ModuleVector::from_scalars(x));
  const HilbertModule m = v.front().module();
  return {m, std::move(v)};
}

ModuleFrame random_frame(const HilbertModule& module, std::size_t count, Rng& rng) {
  std::vector<ModuleVector> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(ModuleVector::random(module, rng));
  return {module, std::move(v)};
}

FrameBounds expect_bounds(const BoundsResult& r) {
  if (const auto* b = std::get_if<FrameBounds>(&r)) return *b;
  const auto& n = std::get<NotAFrame>(r);
  throw NotAFrameError("not a frame: smallest eigenvalue " + std::to_string(n.min_eigenvalue));
}

BoundsResult classify_bounds(double lo, double hi, double tol) {
  if (lo <= tol * std::max(1.0, hi)) return NotAFrame{lo, hi};
  return FrameBounds{lo, hi};
}

AdjointableOperator frame_operator(const ModuleFrame& f) {
  const auto& dims = f.module.algebra.block_dims();
  std::vector<ComplexMatrix> blocks;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    const std::size_t n = f.module.rank * dims[b];
    ComplexMatrix s(n, n);
    for (const auto& x : f.vectors) {
      const ComplexMatrix row = x.row_block(b);
      s += linalg::adjoint_times(row, row);
    }
    blocks.push_back(std::move(s));
  }
  return {f.module, std::move(blocks)};
}

AdjointableOperator reconstruction_operator(const ModuleFrame& f) {
  try {
    return inverse(frame_operator(f));
  } catch (const SingularOperator&) {
    throw NotAFrameError("frame operator is singular");
  }
}

BoundsResult frame_bounds(const ModuleFrame& f, double tol) {
  const auto eig = spectrum(frame_operator(f));
  return classify_bounds(eig.front(), eig.back(), tol);
}

bool verify_frame_pointwise(const ModuleFrame& f, const FrameBounds& bounds, std::size_t samples,
                            std::uint64_t seed, double tol) {
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const ModuleVector x = ModuleVector::random(f.module, rng);
    const AlgebraElement xx = inner_product(x, x);
    AlgebraElement energy = AlgebraElement::zero(f.module.algebra);
    for (const auto& xi : f.vectors) {
      const AlgebraElement c = inner_product(x, xi);
      energy += c * c.adjoint();
    }
    if (!cstar::loewner_leq(bounds.lower * xx, energy, tol)) return false;
    if (!cstar::loewner_leq(energy, bounds.upper * xx, tol)) return false;
  }
  return true;
}

ModuleVector reconstruct(const ModuleFrame& f, const ModuleVector& x) {
  const AdjointableOperator s = reconstruction_operator(f);
  ModuleVector out = ModuleVector::zero(f.module);
  for (const auto& xi : f.vectors) out += inner_product(x, s.apply(xi)) * xi;
  return out;
}

bool is_orthonormal_basis(const std::vector<ModuleVector>& v, double tol) {
  if (v.empty()) return false;
  const HilbertModule& m = v.front().module();
  for (const auto& x : v)
    if (!(x.module() == m)) return false;
  for (const auto& x : v)
    if (!cstar::is_minimal_projection(inner_product(x, x), tol)) return false;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      if (a != b && cstar::max_block_frobenius(inner_product(v[a], v[b])) > tol) return false;
  for (std::size_t idx = 0; idx < m.dimension(); ++idx) {
    const ModuleVector e = ModuleVector::basis_vector(m, idx);
    ModuleVector r = ModuleVector::zero(m);
    for (const auto& x : v) r += inner_product(e, x) * x;
    if (trace_norm(r - e) > tol) return false;
  }
  return true;
}

// --- Tensor products -------------------------------------------------------

HilbertModule tensor_module(const HilbertModule& e, const HilbertModule& f) {
  return {cstar::algebra_tensor(e.algebra, f.algebra), e.rank * f.rank};
}

ModuleVector tensor_vector(const ModuleVector& x, const ModuleVector& y) {
  std::vector<AlgebraElement> coords;
  coords.reserve(x.coords().size() * y.coords().size());
  for (const auto& xi : x.coords())
    for (const auto& yj : y.coords()) coords.push_back(cstar::elem_tensor(xi, yj));
  return {tensor_module(x.module(), y.module()), std::move(coords)};
}

ModuleFrame tensor_frame(const ModuleFrame& fe, const ModuleFrame& ff) {
  std::vector<ModuleVector> v;
  std::vector<std::string> labels;
  v.reserve(fe.size() * ff.size());
  for (std::size_t i = 0; i < fe.size(); ++i)
    for (std::size_t j = 0; j < ff.size(); ++j) {
      v.push_back(tensor_vector(fe.vectors[i], ff.vectors[j]));
      labels.push_back(fe.labels[i] + "," + ff.labels[j]);
    }
  return {tensor_module(fe.module, ff.module), std::move(v), std::move(labels)};
}

AdjointableOperator tensor_operator(const AdjointableOperator& q, const AdjointableOperator& r) {
  const std::size_t n = q.module().rank;
  const std::size_t m = r.module().rank;
  std::vector<AlgebraElement> qc;
  std::vector<AlgebraElement> rc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) qc.push_back(q.coeff(i, k));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < m; ++l) rc.push_back(r.coeff(j, l));

  std::vector<std::vector<AlgebraElement>> coeffs(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto& row = coeffs[i * m + j];
      row.reserve(n * m);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l)
          row.push_back(cstar::elem_tensor(qc[i * n + k], rc[j * m + l]));
    }
  return AdjointableOperator::from_coeffs(tensor_module(q.module(), r.module()), coeffs);
}

ModuleFrame transform_frame(const AdjointableOperator& q, const ModuleFrame& f, double tol) {
  require_same_module(q.module(), f.module, "transform_frame");
  (void)inverse(q, tol);  // throws SingularOperator
  std::vector<ModuleVector> v;
  v.reserve(f.size());
  for (const auto& x : f.vectors) v.push_back(q.apply(x));
  return {f.module, std::move(v), f.labels};
}

FrameBounds transformed_bound_interval(const AdjointableOperator& q, const FrameBounds& bounds) {
  const AdjointableOperator qs = q.adjoint();
  const double inv_norm = operator_norm(inverse(qs));
  const double norm = operator_norm(qs);
  return {bounds.lower / (inv_norm * inv_norm), bounds.upper * norm * norm};
}

}  // namespace tensorframe::modframe
