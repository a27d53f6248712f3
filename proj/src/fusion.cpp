#include "tensorframe/fusion.hpp"

#include <cmath>
#include <string>

#include "tensorframe/error.hpp"
#include "tensorframe/random.hpp"

namespace tensorframe::fusion {

WeightedSubspace::WeightedSubspace(const ComplexMatrix& spanning, double weight)
    : basis_(orthonormal_columns(spanning)), weight_(weight) {
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw InvalidInput("subspace weight must be positive, got " + std::to_string(weight));
  if (basis_.cols() == 0) throw InvalidInput("subspace spanning set is zero");
}

ComplexMatrix WeightedSubspace::projection() const { return basis_ * basis_.adjoint(); }

FusionFrame::FusionFrame(std::size_t d, std::vector<WeightedSubspace> m)
    : ambient_dim(d), members(std::move(m)) {
  if (d == 0) throw InvalidInput("ambient dimension must be positive");
  for (const auto& w : members)
    if (w.ambient_dim() != d) throw ShapeMismatch("subspace basis has the wrong ambient dimension");
}

ComplexMatrix fusion_frame_operator(const FusionFrame& f) {
  ComplexMatrix s(f.ambient_dim, f.ambient_dim);
  for (const auto& w : f.members) s += (w.weight() * w.weight()) * w.projection();
  return s;
}

BoundsResult fusion_bounds(const FusionFrame& f, double tol) {
  const auto e = linalg::hermitian_eigen(fusion_frame_operator(f));
  return modframe::classify_bounds(e.eigenvalues.front(), e.eigenvalues.back(), tol);
}

FusionFrame tensor_fusion(const FusionFrame& f, const FusionFrame& g) {
  std::vector<WeightedSubspace> members;
  members.reserve(f.members.size() * g.members.size());
  for (const auto& w : f.members)
    for (const auto& z : g.members)
      members.emplace_back(linalg::kron(w.basis(), z.basis()), w.weight() * z.weight());
  return {f.ambient_dim * g.ambient_dim, std::move(members)};
}

OperatorFamily::OperatorFamily(std::size_t d, std::vector<WeightedOperator> m)
    : ambient_dim(d), members(std::move(m)) {
  if (d == 0) throw InvalidInput("ambient dimension must be positive");
  for (const auto& t : members) {
    if (t.op.rows() != d || t.op.cols() != d)
      throw ShapeMismatch("family operator must be " + std::to_string(d) + " square");
    if (!(t.weight > 0.0) || !std::isfinite(t.weight))
      throw InvalidInput("family weight must be positive");
  }
}

double resolution_sum_residual(const OperatorFamily& r) {
  ComplexMatrix sum = -ComplexMatrix::identity(r.ambient_dim);
  for (const auto& t : r.members) sum += t.op;
  return linalg::frobenius_norm(sum);
}

ComplexMatrix resolution_energy_operator(const OperatorFamily& r) {
  ComplexMatrix e(r.ambient_dim, r.ambient_dim);
  for (const auto& t : r.members)
    e += (1.0 / (t.weight * t.weight)) * linalg::adjoint_times(t.op, t.op);
  return e;
}

ResolutionResult check_resolution(const OperatorFamily& r, double tol) {
  const double residual = resolution_sum_residual(r);
  const auto e = linalg::hermitian_eigen(resolution_energy_operator(r));
  const double lo = e.eigenvalues.front();
  const double hi = e.eigenvalues.back();
  const bool sums = residual <= tol * std::sqrt(static_cast<double>(r.ambient_dim));
  if (!sums || lo <= tol * std::max(1.0, hi)) return NotAResolution{residual, lo, hi};
  return FrameBounds{lo, hi};
}

OperatorFamily tensor_resolution(const OperatorFamily& r, const OperatorFamily& s, double tol) {
  if (!is_resolution(check_resolution(r, tol)))
    throw InvalidInput("left factor is not a resolution of the identity");
  if (!is_resolution(check_resolution(s, tol)))
    throw InvalidInput("right factor is not a resolution of the identity");
  std::vector<WeightedOperator> members;
  members.reserve(r.members.size() * s.members.size());
  for (const auto& t : r.members)
    for (const auto& u : s.members) members.push_back({linalg::kron(t.op, u.op), t.weight * u.weight});
  return {r.ambient_dim * s.ambient_dim, std::move(members)};
}

OperatorFamily resolution_from_fusion(const FusionFrame& f, double tol) {
  if (!modframe::is_frame(fusion_bounds(f, tol)))
    throw NotAFrameError("subspaces do not form a fusion frame");
  const ComplexMatrix s_inv = linalg::inverse(fusion_frame_operator(f));
  std::vector<WeightedOperator> members;
  members.reserve(f.members.size());
  for (const auto& w : f.members) {
    const double v2 = w.weight() * w.weight();
    members.push_back({v2 * (w.projection() * s_inv), w.weight()});
  }
  return {f.ambient_dim, std::move(members)};
}

}  // namespace tensorframe::fusion
