#include "tensorframe/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tensorframe/error.hpp"

namespace tensorframe::instances {

using linalg::Complex;
using linalg::ComplexMatrix;
using modframe::AdjointableOperator;
using modframe::HilbertModule;

AdjointableOperator random_unitary_operator(const HilbertModule& m, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : m.algebra.block_dims()) blocks.push_back(rng.unitary(m.rank * k));
  return {m, std::move(blocks)};
}

AdjointableOperator random_invertible_operator(const HilbertModule& m, Rng& rng) {
  std::vector<ComplexMatrix> blocks;
  for (auto k : m.algebra.block_dims()) {
    const std::size_t n = m.rank * k;
    std::vector<Complex> sv(n);
    for (auto& s : sv) s = 0.5 + 1.5 * rng.uniform();
    blocks.push_back(rng.unitary(n) * ComplexMatrix::diagonal(sv) * rng.unitary(n));
  }
  return {m, std::move(blocks)};
}

std::vector<modframe::ModuleVector> standard_module_basis(const HilbertModule& m) {
  std::vector<modframe::ModuleVector> out;
  const auto& dims = m.algebra.block_dims();
  for (std::size_t i = 0; i < m.rank; ++i)
    for (std::size_t b = 0; b < dims.size(); ++b)
      for (std::size_t r = 0; r < dims[b]; ++r) {
        std::vector<cstar::AlgebraElement> coords(m.rank, cstar::AlgebraElement::zero(m.algebra));
        coords[i] = cstar::AlgebraElement::matrix_unit(m.algebra, b, r, r);
        out.emplace_back(m, std::move(coords));
      }
  return out;
}

modframe::ModuleFrame mercedes_benz_frame() {
  const double h = std::sqrt(3.0) / 2.0;
  return modframe::hilbert_frame({{0.0, 1.0}, {-h, -0.5}, {h, -0.5}});
}

fusion::FusionFrame random_fusion_frame(std::size_t dim, std::size_t count, Rng& rng) {
  if (dim == 0 || count == 0) throw InvalidParams("fusion frame needs dim >= 1 and count >= 1");
  const std::size_t min_k = (dim + count - 1) / count;
  std::vector<fusion::WeightedSubspace> members;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t k = std::min<std::size_t>(dim, min_k + rng.uniform_int(0, 1));
    members.emplace_back(rng.matrix(dim, k), 0.5 + 1.5 * rng.uniform());
  }
  return {dim, std::move(members)};
}

fusion::FusionFrame random_parseval_fusion_frame(std::size_t dim, std::size_t splits, Rng& rng) {
  std::vector<fusion::WeightedSubspace> members;
  const double w = 1.0 / std::sqrt(static_cast<double>(splits));
  for (std::size_t s = 0; s < splits; ++s) {
    const ComplexMatrix u = rng.unitary(dim);
    // Cut the columns of u into consecutive runs.
    std::size_t start = 0;
    while (start < dim) {
      const std::size_t len = std::min<std::size_t>(dim - start, 1 + rng.uniform_int(0, 1));
      members.emplace_back(u.block(0, start, dim, len), w);
      start += len;
    }
  }
  return {dim, std::move(members)};
}

fusion::FusionFrame coordinate_fusion_frame(const std::vector<double>& weights) {
  const std::size_t d = weights.size();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  std::vector<fusion::WeightedSubspace> members;
  for (std::size_t i = 0; i < d; ++i) members.emplace_back(id.block(0, i, d, 1), weights[i]);
  return {d, std::move(members)};
}

fusion::FusionFrame mercedes_benz_lines() {
  const auto f = mercedes_benz_frame();
  std::vector<fusion::WeightedSubspace> members;
  for (const auto& v : f.vectors) members.emplace_back(ComplexMatrix::column(v.flatten()), 1.0);
  return {2, std::move(members)};
}

fusion::OperatorFamily random_resolution(std::size_t dim, std::size_t count, Rng& rng) {
  if (count < 2) throw InvalidParams("random resolution needs at least two operators");
  std::vector<fusion::WeightedOperator> members;
  ComplexMatrix last = ComplexMatrix::identity(dim);
  for (std::size_t i = 0; i + 1 < count; ++i) {
    ComplexMatrix t = (1.0 / static_cast<double>(count)) * ComplexMatrix::identity(dim) +
                      (0.3 / static_cast<double>(count)) * rng.matrix(dim, dim);
    last -= t;
    members.push_back({std::move(t), 0.5 + 1.5 * rng.uniform()});
  }
  members.push_back({std::move(last), 0.5 + 1.5 * rng.uniform()});
  return {dim, std::move(members)};
}

groupframe::GroupRepresentation random_multiplicity_free_rep(const groupframe::FiniteAbelianGroup& group,
                                                             std::size_t dim, Rng& rng) {
  if (dim == 0 || dim > group.order())
    throw InvalidParams("multiplicity-free representation needs 1 <= dim <= |G|");
  std::vector<std::size_t> all(group.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  // Partial Fisher-Yates driven by our own generator.
  for (std::size_t i = 0; i < dim; ++i) std::swap(all[i], all[rng.uniform_int(i, all.size() - 1)]);
  std::vector<std::size_t> chosen(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(dim));
  std::sort(chosen.begin(), chosen.end());
  return groupframe::GroupRepresentation::from_characters(group, chosen, rng.unitary(dim));
}

groupframe::GroupRepresentation z4_diagonal_rep() {
  const groupframe::FiniteAbelianGroup z4({4});
  const ComplexMatrix gen{{1.0, 0.0}, {0.0, Complex{0.0, 1.0}}};
  return groupframe::GroupRepresentation::from_generators(z4, {gen});
}

std::vector<Complex> random_vector(std::size_t dim, Rng& rng) {
  std::vector<Complex> v(dim);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

}  // namespace tensorframe::instances
