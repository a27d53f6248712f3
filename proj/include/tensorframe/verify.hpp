#pragma once

// Executable property checks for the tensor-product results, runnable on
// random instances or on parsed documents.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorframe/document.hpp"
#include "tensorframe/fusion.hpp"
#include "tensorframe/groupframe.hpp"
#include "tensorframe/modframe.hpp"
#include "tensorframe/random.hpp"

namespace tensorframe::verify {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

CheckResult make_check(std::string name, double residual, double tolerance, std::string detail = {});

enum class Suite { Tensor, Fusion, Resolution, Group, All };

std::optional<Suite> parse_suite(std::string_view s);
std::string_view to_string(Suite s);

/// Relative difference |a - b| / max(|b|, tiny).
double relative_error(double a, double b);

/// Bounds, frame operators, reconstruction operators, transforms and the
/// pointwise cross-check for one pair of frames.
std::vector<CheckResult> tensor_frame_checks(const modframe::ModuleFrame& fe,
                                             const modframe::ModuleFrame& ff, Rng& rng);

/// Tensor of the standard ONBs of both modules, each rotated by a random
/// unitary operator.
std::vector<CheckResult> orthonormal_basis_checks(const modframe::HilbertModule& e,
                                                  const modframe::HilbertModule& f, Rng& rng);

std::vector<CheckResult> fusion_checks(const fusion::FusionFrame& f, const fusion::FusionFrame& g,
                                       Rng& rng);

/// Tensor of two resolutions of the identity, plus the resolutions built
/// from fusion frames when given.
std::vector<CheckResult> resolution_checks(const fusion::OperatorFamily& r,
                                           const fusion::OperatorFamily& s);
std::vector<CheckResult> resolution_from_fusion_checks(const fusion::FusionFrame& f,
                                                       const fusion::FusionFrame& g);

/// Intertwining, unitarity and product identities for frame vectors v of
/// pi and w of sigma.
std::vector<CheckResult> group_checks(const groupframe::GroupRepresentation& pi,
                                      const std::vector<linalg::Complex>& v,
                                      const groupframe::GroupRepresentation& sigma,
                                      const std::vector<linalg::Complex>& w, Rng& rng);

/// Checks that only need one representation and vector.
std::vector<CheckResult> group_single_checks(const groupframe::GroupRepresentation& pi,
                                             const std::vector<linalg::Complex>& v);

/// Per check name: largest residual, passed only if every instance passed.
/// Order of first appearance is kept.
std::vector<CheckResult> summarize(const std::vector<CheckResult>& all);

struct VerifyOptions {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  /// Multiplies every pinned tolerance when set (1e-8 is the reference).
  std::optional<double> tolerance;
};

/// Random trials. Runs concurrently; the result depends only on options.
std::vector<CheckResult> run_random(const VerifyOptions& options);

/// Checks on each document paired with itself.
std::vector<CheckResult> run_on_documents(const VerifyOptions& options,
                                          const std::vector<io::FrameDocument>& docs);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace tensorframe::verify
