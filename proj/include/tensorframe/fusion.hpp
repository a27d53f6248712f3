#pragma once

#include <variant>
#include <vector>

#include "tensorframe/linalg.hpp"
#include "tensorframe/modframe.hpp"

namespace tensorframe::fusion {

using linalg::Complex;
using linalg::ComplexMatrix;
using modframe::BoundsResult;
using modframe::FrameBounds;

/// Closed subspace W of C^d with a positive weight.
class WeightedSubspace {
 public:
  /// Orthonormalizes the columns of `spanning`; dependent columns are
  /// dropped. Throws InvalidInput for a nonpositive weight or an empty span.
  WeightedSubspace(const ComplexMatrix& spanning, double weight);

  const ComplexMatrix& basis() const { return basis_; }
  double weight() const { return weight_; }
  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  /// pi_W = B B^*.
  ComplexMatrix projection() const;

 private:
  ComplexMatrix basis_;
  double weight_;
};

struct FusionFrame {
  std::size_t ambient_dim = 0;
  std::vector<WeightedSubspace> members;

  FusionFrame(std::size_t d, std::vector<WeightedSubspace> m);
};

/// S_{W,v} = sum_i v_i^2 pi_{W_i}.
ComplexMatrix fusion_frame_operator(const FusionFrame& f);

/// Extremal eigenvalues of the fusion frame operator.
BoundsResult fusion_bounds(const FusionFrame& f, double tol = linalg::kDefaultTol);

/// Members (W_i (x) Z_j, u_i v_j), i outer.
FusionFrame tensor_fusion(const FusionFrame& f, const FusionFrame& g);

struct WeightedOperator {
  ComplexMatrix op;
  double weight = 1.0;
};

/// A finite family {T_i} with weights, candidate resolution of the identity.
struct OperatorFamily {
  std::size_t ambient_dim = 0;
  std::vector<WeightedOperator> members;

  OperatorFamily(std::size_t d, std::vector<WeightedOperator> m);
};

struct NotAResolution {
  /// ||sum T_i - I||_F.
  double sum_residual = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

using ResolutionResult = std::variant<FrameBounds, NotAResolution>;

inline bool is_resolution(const ResolutionResult& r) {
  return std::holds_alternative<FrameBounds>(r);
}

/// ||sum_i T_i - I||_F.
double resolution_sum_residual(const OperatorFamily& r);
/// sum_i v_i^{-2} T_i^* T_i, whose extremal eigenvalues are the bounds.
ComplexMatrix resolution_energy_operator(const OperatorFamily& r);

/// Checks sum T_i = I (Frobenius residual <= tol * sqrt(d)) and the lower
/// bound (min eigenvalue > tol * max(1, max eigenvalue)).
ResolutionResult check_resolution(const OperatorFamily& r, double tol = linalg::kDefaultTol);

/// Members (T_i (x) S_j, v_i u_j). Throws InvalidInput if either factor fails
/// check_resolution.
OperatorFamily tensor_resolution(const OperatorFamily& r, const OperatorFamily& s,
                                 double tol = linalg::kDefaultTol);

/// Members (v_i^2 pi_{W_i} S^{-1}, v_i), which sum to the identity.
/// Throws NotAFrameError when S is singular.
OperatorFamily resolution_from_fusion(const FusionFrame& f, double tol = linalg::kDefaultTol);

}  // namespace tensorframe::fusion
