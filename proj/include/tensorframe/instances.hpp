#pragma once

// Random and canonical problem instances for tests, the verify suites and
// `tensorframe gen`.

#include <vector>

#include "tensorframe/fusion.hpp"
#include "tensorframe/groupframe.hpp"
#include "tensorframe/modframe.hpp"
#include "tensorframe/random.hpp"

namespace tensorframe::instances {

/// Block-diagonal unitary operator on A^n.
modframe::AdjointableOperator random_unitary_operator(const modframe::HilbertModule& m, Rng& rng);

/// Singular values drawn from [0.5, 2] in every block.
modframe::AdjointableOperator random_invertible_operator(const modframe::HilbertModule& m, Rng& rng);

/// {e_rr^b placed in coordinate i}: the standard module ONB of A^n.
std::vector<modframe::ModuleVector> standard_module_basis(const modframe::HilbertModule& m);

/// The three Mercedes-Benz vectors in C^2 (tight, bound 3/2).
modframe::ModuleFrame mercedes_benz_frame();

/// `count` subspaces of C^dim with random dimensions and weights in [0.5, 2].
fusion::FusionFrame random_fusion_frame(std::size_t dim, std::size_t count, Rng& rng);

/// Coordinate splits of C^dim under random unitaries, weights chosen so
/// that sum v_i^2 pi_i = I.
fusion::FusionFrame random_parseval_fusion_frame(std::size_t dim, std::size_t splits, Rng& rng);

/// The coordinate axes of C^dim with weights w.
fusion::FusionFrame coordinate_fusion_frame(const std::vector<double>& weights);

/// Lines through the Mercedes-Benz vectors, weight 1.
fusion::FusionFrame mercedes_benz_lines();

/// Random resolution of the identity: T_i = A_i with sum A_i = I, weights
/// in [0.5, 2].
fusion::OperatorFamily random_resolution(std::size_t dim, std::size_t count, Rng& rng);

/// Multiplicity-free representation: `dim` distinct characters of `group`
/// rotated by a random unitary.
groupframe::GroupRepresentation random_multiplicity_free_rep(const groupframe::FiniteAbelianGroup& group,
                                                             std::size_t dim, Rng& rng);

/// pi(k) = diag(1, i^k) on C^2 for Z_4.
groupframe::GroupRepresentation z4_diagonal_rep();

std::vector<linalg::Complex> random_vector(std::size_t dim, Rng& rng);

}  // namespace tensorframe::instances
