#pragma once

#include <cstddef>
#include <vector>

#include "tensorframe/linalg.hpp"
#include "tensorframe/modframe.hpp"

namespace tensorframe {
class Rng;
}

namespace tensorframe::groupframe {

using linalg::Complex;
using linalg::ComplexMatrix;

/// Z_{n_1} + ... + Z_{n_r}. Elements are enumerated lexicographically
/// (last factor fastest) and referred to by that index.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::size_t> cyclic_orders);

  const std::vector<std::size_t>& cyclic_orders() const { return orders_; }
  std::size_t order() const { return order_; }

  std::vector<std::size_t> element(std::size_t index) const;
  std::size_t index(const std::vector<std::size_t>& element) const;
  std::size_t add(std::size_t g, std::size_t h) const;
  std::size_t negate(std::size_t g) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::size_t> orders_;
  std::size_t order_ = 1;
};

/// G1 + G2 with concatenated cyclic orders; (g, h) has index g*|G2| + h.
FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

/// chi(k) = exp(2 pi i sum_l j_l k_l / n_l).
class Character {
 public:
  Character(FiniteAbelianGroup group, std::vector<std::size_t> exponents);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::size_t>& exponents() const { return exponents_; }
  Complex operator()(std::size_t g) const;

  friend bool operator==(const Character&, const Character&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<std::size_t> exponents_;
};

/// All |G| characters, in the same enumeration order as the elements.
std::vector<Character> characters(const FiniteAbelianGroup& g);

class GroupRepresentation {
 public:
  /// One d x d matrix per group element, in enumeration order.
  GroupRepresentation(FiniteAbelianGroup group, std::vector<ComplexMatrix> matrices);

  /// pi(k) = prod_l U_l^{k_l}, one generator per cyclic factor.
  static GroupRepresentation from_generators(const FiniteAbelianGroup& group,
                                             const std::vector<ComplexMatrix>& generators);
  /// W diag(chi_1(g), ..., chi_d(g)) W^*.
  static GroupRepresentation from_characters(const FiniteAbelianGroup& group,
                                             const std::vector<std::size_t>& character_indices,
                                             const ComplexMatrix& change_of_basis);
  static GroupRepresentation trivial(const FiniteAbelianGroup& group, std::size_t dim);

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const ComplexMatrix& operator()(std::size_t g) const { return matrices_[g]; }
  const std::vector<ComplexMatrix>& matrices() const { return matrices_; }

 private:
  FiniteAbelianGroup group_;
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> matrices_;
};

/// Unitarity, pi(0) = I, and pi(g+h) = pi(g) pi(h) for all pairs.
bool verify_representation(const GroupRepresentation& pi, double tol = linalg::kDefaultTol);
/// Largest residual behind verify_representation.
double representation_residual(const GroupRepresentation& pi);

/// {pi(g) v} in group enumeration order, as a frame over C.
modframe::ModuleFrame orbit_frame(const GroupRepresentation& pi, const std::vector<Complex>& v);

struct AnalysisMatrix {
  /// |G| x d; row g is (pi(g) v)^*, i.e. x -> <x, pi(g) v>.
  ComplexMatrix theta;
};

AnalysisMatrix analysis_operator(const GroupRepresentation& pi, const std::vector<Complex>& v);

/// Permutation matrix of (L_g x)(h) = x(h - g) on l^2(G).
ComplexMatrix translation(const FiniteAbelianGroup& group, std::size_t g);

/// max_g ||Theta pi(g) - L_g Theta||_F.
double analysis_intertwining_residual(const GroupRepresentation& pi, const AnalysisMatrix& a);

struct SpectralData {
  /// Characters with nonzero spectral projection, in enumeration order.
  std::vector<Character> support;
  std::vector<ComplexMatrix> projections;
  /// b_chi = P_chi v / ||P_chi v||, so <v, b_chi> > 0.
  std::vector<std::vector<Complex>> basis_vectors;
  std::size_t group_order = 0;
};

/// P_chi = (1/|G|) sum_g conj(chi(g)) pi(g), kept where ||P_chi|| > tol.
/// Throws MultiplicityTooHigh if some P_chi has rank >= 2, NotAFrameVector
/// if P_chi v vanishes on the support.
SpectralData spectral_data(const GroupRepresentation& pi, const std::vector<Complex>& v,
                           double tol = linalg::kDefaultTol);

/// max_g ||pi(g) - sum_chi chi(g) P_chi||_F.
double spectral_resolution_residual(const GroupRepresentation& pi, const SpectralData& sd);

struct DecompositionOperator {
  /// |F| x d; (U x)(chi) = sqrt(|G|) <x, b_chi>.
  ComplexMatrix u;
  /// Measure of each point of the dual group, 1/|G|.
  double weight = 1.0;
};

DecompositionOperator decomposition_operator(const SpectralData& sd);

/// max_g ||U pi(g) - M_g U||_F.
double decomposition_intertwining_residual(const GroupRepresentation& pi, const SpectralData& sd,
                                           const DecompositionOperator& u);
/// ||weight * U^* U - I||_F, zero when U is unitary onto L^2(F, lambda|F).
double decomposition_unitarity_residual(const DecompositionOperator& u);

/// (pi (x) sigma)(g, h) = kron(pi(g), sigma(h)) on G1 + G2.
GroupRepresentation tensor_representation(const GroupRepresentation& pi,
                                          const GroupRepresentation& sigma);

/// Spectral data of pi (x) sigma built from the factors: support pairs
/// (chi, psi), projections kron(P_chi, P_psi), vectors b_chi (x) b_psi.
SpectralData tensor_spectral_data(const SpectralData& a, const SpectralData& b);

/// kron(U, V) with weight 1/(|G1||G2|).
DecompositionOperator tensor_decomposition(const SpectralData& a, const SpectralData& b);

/// lambda_max(sum_g pi(g) v' v'^* pi(g)^*).
double bessel_bound(const GroupRepresentation& pi, const std::vector<Complex>& v);

std::vector<Complex> tensor_vector(const std::vector<Complex>& v, const std::vector<Complex>& w);

}  // namespace tensorframe::groupframe
