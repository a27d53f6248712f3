#include "tensorframe/groupframe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tensorframe/error.hpp"

namespace tensorframe::groupframe {

namespace {

double vector_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

// --- groups and characters -------------------------------------------------

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::size_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw InvalidInput("group needs at least one cyclic factor");
  for (auto n : orders_) {
    if (n == 0) throw InvalidInput("cyclic order must be positive");
    order_ *= n;
  }
}

std::vector<std::size_t> FiniteAbelianGroup::element(std::size_t index) const {
  if (index >= order_) throw InvalidInput("group element index out of range");
  std::vector<std::size_t> e(orders_.size());
  for (std::size_t l = orders_.size(); l-- > 0;) {
    e[l] = index % orders_[l];
    index /= orders_[l];
  }
  return e;
}

std::size_t FiniteAbelianGroup::index(const std::vector<std::size_t>& element) const {
  if (element.size() != orders_.size()) throw InvalidInput("element has wrong number of components");
  std::size_t idx = 0;
  for (std::size_t l = 0; l < orders_.size(); ++l) {
    if (element[l] >= orders_[l]) throw InvalidInput("element component out of range");
    idx = idx * orders_[l] + element[l];
  }
  return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t g, std::size_t h) const {
  auto a = element(g);
  const auto b = element(h);
  for (std::size_t l = 0; l < a.size(); ++l) a[l] = (a[l] + b[l]) % orders_[l];
  return index(a);
}

std::size_t FiniteAbelianGroup::negate(std::size_t g) const {
  auto a = element(g);
  for (std::size_t l = 0; l < a.size(); ++l) a[l] = (orders_[l] - a[l]) % orders_[l];
  return index(a);
}

FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  auto orders = a.cyclic_orders();
  orders.insert(orders.end(), b.cyclic_orders().begin(), b.cyclic_orders().end());
  return FiniteAbelianGroup(std::move(orders));
}

Character::Character(FiniteAbelianGroup group, std::vector<std::size_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  (void)group_.index(exponents_);  // validates range
}

Complex Character::operator()(std::size_t g) const {
  const auto k = group_.element(g);
  const auto& n = group_.cyclic_orders();
  // Accumulate the phase as an exact fraction per factor to keep roots of
  // unity sharp.
  double turns = 0.0;
  for (std::size_t l = 0; l < k.size(); ++l)
    turns += static_cast<double>((exponents_[l] * k[l]) % n[l]) / static_cast<double>(n[l]);
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

std::vector<Character> characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  out.reserve(g.order());
  for (std::size_t j = 0; j < g.order(); ++j) out.emplace_back(g, g.element(j));
  return out;
}

// --- representations -------------------------------------------------------

GroupRepresentation::GroupRepresentation(FiniteAbelianGroup group, std::vector<ComplexMatrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_.order())
    throw ShapeMismatch("representation needs one matrix per group element (" +
                        std::to_string(group_.order()) + "), got " + std::to_string(matrices_.size()));
  dim_ = matrices_.front().rows();
  if (dim_ == 0) throw InvalidInput("representation dimension must be positive");
  for (const auto& m : matrices_)
    if (m.rows() != dim_ || m.cols() != dim_) throw ShapeMismatch("representation matrices must share one square shape");
}

GroupRepresentation GroupRepresentation::from_generators(const FiniteAbelianGroup& group,
                                                         const std::vector<ComplexMatrix>& generators) {
  if (generators.size() != group.cyclic_orders().size())
    throw ShapeMismatch("one generator per cyclic factor required");
  const std::size_t d = generators.front().rows();
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto k = group.element(g);
    ComplexMatrix m = ComplexMatrix::identity(d);
    for (std::size_t l = 0; l < k.size(); ++l)
      for (std::size_t p = 0; p < k[l]; ++p) m = m * generators[l];
    matrices.push_back(std::move(m));
  }
  return {group, std::move(matrices)};
}

GroupRepresentation GroupRepresentation::from_characters(const FiniteAbelianGroup& group,
                                                         const std::vector<std::size_t>& character_indices,
                                                         const ComplexMatrix& change_of_basis) {
  const std::size_t d = character_indices.size();
  if (change_of_basis.rows() != d || change_of_basis.cols() != d)
    throw ShapeMismatch("change of basis must be d x d");
  const auto chars = characters(group);
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::vector<Complex> diag;
    for (auto j : character_indices) diag.push_back(chars.at(j)(g));
    matrices.push_back(change_of_basis * ComplexMatrix::diagonal(diag) * change_of_basis.adjoint());
  }
  return {group, std::move(matrices)};
}

GroupRepresentation GroupRepresentation::trivial(const FiniteAbelianGroup& group, std::size_t dim) {
  return {group, std::vector<ComplexMatrix>(group.order(), ComplexMatrix::identity(dim))};
}

double representation_residual(const GroupRepresentation& pi) {
  const auto& g = pi.group();
  const ComplexMatrix id = ComplexMatrix::identity(pi.dim());
  double worst = linalg::frobenius_norm(pi(0) - id);
  for (std::size_t a = 0; a < g.order(); ++a) {
    worst = std::max(worst, linalg::frobenius_norm(linalg::adjoint_times(pi(a), pi(a)) - id));
    for (std::size_t b = 0; b < g.order(); ++b)
      worst = std::max(worst, linalg::frobenius_norm(pi(g.add(a, b)) - pi(a) * pi(b)));
  }
  return worst;
}

bool verify_representation(const GroupRepresentation& pi, double tol) {
  return representation_residual(pi) <= tol * std::sqrt(static_cast<double>(pi.dim()));
}

modframe::ModuleFrame orbit_frame(const GroupRepresentation& pi, const std::vector<Complex>& v) {
  if (v.size() != pi.dim()) throw ShapeMismatch("vector dimension does not match representation");
  const ComplexMatrix col = ComplexMatrix::column(v);
  std::vector<std::vector<Complex>> orbit;
  orbit.reserve(pi.group().order());
  for (const auto& m : pi.matrices()) orbit.push_back(linalg::vec(m * col));
  return modframe::hilbert_frame(orbit);
}

AnalysisMatrix analysis_operator(const GroupRepresentation& pi, const std::vector<Complex>& v) {
  if (v.size() != pi.dim()) throw ShapeMismatch("vector dimension does not match representation");
  const ComplexMatrix col = ComplexMatrix::column(v);
  ComplexMatrix theta(pi.group().order(), pi.dim());
  for (std::size_t g = 0; g < pi.group().order(); ++g) {
    const ComplexMatrix orbit = pi(g) * col;
    for (std::size_t j = 0; j < pi.dim(); ++j) theta(g, j) = std::conj(orbit(j, 0));
  }
  return {std::move(theta)};
}

ComplexMatrix translation(const FiniteAbelianGroup& group, std::size_t g) {
  const std::size_t n = group.order();
  ComplexMatrix l(n, n);
  const std::size_t minus_g = group.negate(g);
  for (std::size_t h = 0; h < n; ++h) l(h, group.add(h, minus_g)) = 1.0;
  return l;
}

double analysis_intertwining_residual(const GroupRepresentation& pi, const AnalysisMatrix& a) {
  double worst = 0.0;
  for (std::size_t g = 0; g < pi.group().order(); ++g)
    worst = std::max(worst, linalg::frobenius_norm(a.theta * pi(g) - translation(pi.group(), g) * a.theta));
  return worst;
}

// --- spectral decomposition ------------------------------------------------

SpectralData spectral_data(const GroupRepresentation& pi, const std::vector<Complex>& v, double tol) {
  if (v.size() != pi.dim()) throw ShapeMismatch("vector dimension does not match representation");
  const auto& g = pi.group();
  const double inv_order = 1.0 / static_cast<double>(g.order());
  const ComplexMatrix col = ComplexMatrix::column(v);
  const double vnorm = vector_norm(v);

  SpectralData sd;
  sd.group_order = g.order();
  for (const auto& chi : characters(g)) {
    ComplexMatrix p(pi.dim(), pi.dim());
    for (std::size_t h = 0; h < g.order(); ++h) p += std::conj(chi(h)) * pi(h);
    p *= inv_order;
    if (linalg::frobenius_norm(p) <= tol) continue;
    const auto eig = linalg::hermitian_eigen(p);
    const auto rank = std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                    [](double x) { return x > 0.5; });
    if (rank >= 2)
      throw MultiplicityTooHigh("character carries multiplicity " + std::to_string(rank) +
                                "; no frame vector exists");
    sd.support.push_back(chi);
    sd.projections.push_back(std::move(p));
  }
  for (const auto& p : sd.projections) {
    auto pv = linalg::vec(p * col);
    const double n = vector_norm(pv);
    if (n <= tol * std::max(vnorm, 1e-300))
      throw NotAFrameVector("vector has no component in a spectral subspace");
    for (auto& z : pv) z /= n;
    sd.basis_vectors.push_back(std::move(pv));
  }
  return sd;
}

double spectral_resolution_residual(const GroupRepresentation& pi, const SpectralData& sd) {
  double worst = 0.0;
  for (std::size_t g = 0; g < pi.group().order(); ++g) {
    ComplexMatrix r = pi(g);
    for (std::size_t c = 0; c < sd.support.size(); ++c) r -= sd.support[c](g) * sd.projections[c];
    worst = std::max(worst, linalg::frobenius_norm(r));
  }
  return worst;
}

DecompositionOperator decomposition_operator(const SpectralData& sd) {
  const std::size_t d = sd.basis_vectors.empty() ? 0 : sd.basis_vectors.front().size();
  const double root = std::sqrt(static_cast<double>(sd.group_order));
  ComplexMatrix u(sd.basis_vectors.size(), d);
  for (std::size_t c = 0; c < sd.basis_vectors.size(); ++c)
    for (std::size_t j = 0; j < d; ++j) u(c, j) = root * std::conj(sd.basis_vectors[c][j]);
  return {std::move(u), 1.0 / static_cast<double>(sd.group_order)};
}

double decomposition_intertwining_residual(const GroupRepresentation& pi, const SpectralData& sd,
                                           const DecompositionOperator& u) {
  double worst = 0.0;
  for (std::size_t g = 0; g < pi.group().order(); ++g) {
    std::vector<Complex> symbol;
    for (const auto& chi : sd.support) symbol.push_back(chi(g));
    const ComplexMatrix mg = ComplexMatrix::diagonal(symbol);
    worst = std::max(worst, linalg::frobenius_norm(u.u * pi(g) - mg * u.u));
  }
  return worst;
}

double decomposition_unitarity_residual(const DecompositionOperator& u) {
  const ComplexMatrix gram = u.weight * linalg::adjoint_times(u.u, u.u);
  const double r1 = linalg::frobenius_norm(gram - ComplexMatrix::identity(u.u.cols()));
  // Onto: U U^* weight = I on L^2(F).
  const ComplexMatrix co = u.weight * (u.u * u.u.adjoint());
  const double r2 = linalg::frobenius_norm(co - ComplexMatrix::identity(u.u.rows()));
  return std::max(r1, r2);
}

// --- tensor products -------------------------------------------------------

GroupRepresentation tensor_representation(const GroupRepresentation& pi, const GroupRepresentation& sigma) {
  const FiniteAbelianGroup g = direct_sum(pi.group(), sigma.group());
  std::vector<ComplexMatrix> matrices;
  matrices.reserve(g.order());
  for (const auto& a : pi.matrices())
    for (const auto& b : sigma.matrices()) matrices.push_back(linalg::kron(a, b));
  return {g, std::move(matrices)};
}

SpectralData tensor_spectral_data(const SpectralData& a, const SpectralData& b) {
  SpectralData out;
  out.group_order = a.group_order * b.group_order;
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    for (std::size_t j = 0; j < b.support.size(); ++j) {
      auto exps = a.support[i].exponents();
      exps.insert(exps.end(), b.support[j].exponents().begin(), b.support[j].exponents().end());
      out.support.emplace_back(direct_sum(a.support[i].group(), b.support[j].group()), std::move(exps));
      out.projections.push_back(linalg::kron(a.projections[i], b.projections[j]));
      out.basis_vectors.push_back(tensor_vector(a.basis_vectors[i], b.basis_vectors[j]));
    }
  }
  return out;
}

DecompositionOperator tensor_decomposition(const SpectralData& a, const SpectralData& b) {
  const auto u = decomposition_operator(a);
  const auto v = decomposition_operator(b);
  return {linalg::kron(u.u, v.u), u.weight * v.weight};
}

double bessel_bound(const GroupRepresentation& pi, const std::vector<Complex>& v) {
  if (v.size() != pi.dim()) throw ShapeMismatch("vector dimension does not match representation");
  const ComplexMatrix col = ComplexMatrix::column(v);
  ComplexMatrix s(pi.dim(), pi.dim());
  for (const auto& m : pi.matrices()) {
    const ComplexMatrix o = m * col;
    s += o * o.adjoint();
  }
  return std::max(0.0, linalg::hermitian_eigen(s).eigenvalues.back());
}

std::vector<Complex> tensor_vector(const std::vector<Complex>& v, const std::vector<Complex>& w) {
  std::vector<Complex> out;
  out.reserve(v.size() * w.size());
  for (const auto& a : v)
    for (const auto& b : w) out.push_back(a * b);
  return out;
}

}  // namespace tensorframe::groupframe
