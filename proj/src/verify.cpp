#include "tensorframe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tensorframe/error.hpp"
#include "tensorframe/instances.hpp"

namespace tensorframe::verify {

using linalg::Complex;
using linalg::ComplexMatrix;
using modframe::AdjointableOperator;

namespace {

constexpr double kReferenceTol = 1e-8;

double rel_op(const AdjointableOperator& got, const AdjointableOperator& want) {
  return modframe::residual_norm(got - want) / std::max(modframe::residual_norm(got), 1e-300);
}

double interval_violation(const modframe::FrameBounds& got, const modframe::FrameBounds& interval) {
  const double v = std::max({0.0, interval.lower - got.lower, got.upper - interval.upper});
  return v / std::max(interval.upper, 1e-300);
}

double bounds_error(const modframe::FrameBounds& got, double lower, double upper) {
  return std::max(relative_error(got.lower, lower), relative_error(got.upper, upper));
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, Suite suite, std::size_t trial) {
  return splitmix(splitmix(seed) ^ (static_cast<std::uint64_t>(suite) << 56) ^ trial);
}

void rescale(std::vector<CheckResult>& checks, const std::optional<double>& tol) {
  if (!tol) return;
  const double factor = *tol / kReferenceTol;
  for (auto& c : checks) {
    c.tolerance *= factor;
    c.passed = c.residual <= c.tolerance;
  }
}

CheckResult failure(std::string name, const std::exception& e) {
  return make_check(std::move(name), std::numeric_limits<double>::infinity(), 0.0, e.what());
}

ComplexMatrix vector_column(const std::vector<Complex>& v) { return ComplexMatrix::column(v); }

bool includes(Suite selected, Suite s) { return selected == Suite::All || selected == s; }

}  // namespace

CheckResult make_check(std::string name, double residual, double tolerance, std::string detail) {
  const bool ok = residual <= tolerance;
  return {std::move(name), residual, tolerance, ok, std::move(detail)};
}

std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "tensor") return Suite::Tensor;
  if (s == "fusion") return Suite::Fusion;
  if (s == "resolution") return Suite::Resolution;
  if (s == "group") return Suite::Group;
  if (s == "all") return Suite::All;
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Tensor: return "tensor";
    case Suite::Fusion: return "fusion";
    case Suite::Resolution: return "resolution";
    case Suite::Group: return "group";
    case Suite::All: return "all";
  }
  return "all";
}

double relative_error(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<CheckResult> tensor_frame_checks(const modframe::ModuleFrame& fe,
                                             const modframe::ModuleFrame& ff, Rng& rng) {
  using namespace modframe;
  std::vector<CheckResult> out;
  const auto be = expect_bounds(frame_bounds(fe));
  const auto bf = expect_bounds(frame_bounds(ff));
  const auto t = tensor_frame(fe, ff);
  const auto bt = expect_bounds(frame_bounds(t));
  out.push_back(make_check("tensor-frame-bounds",
                           bounds_error(bt, be.lower * bf.lower, be.upper * bf.upper), 1e-8));

  const auto se = frame_operator(fe);
  const auto sf = frame_operator(ff);
  const auto st = frame_operator(t);
  out.push_back(make_check("tensor-frame-operator", rel_op(st, tensor_operator(se, sf)), 1e-9));
  out.push_back(make_check("tensor-reconstruction-operator",
                           rel_op(reconstruction_operator(t), tensor_operator(inverse(se), inverse(sf))),
                           1e-8));

  const auto q = instances::random_invertible_operator(fe.module, rng);
  const auto q_inv = inverse(q);
  const auto fq = transform_frame(q, fe);
  out.push_back(make_check("transformed-frame-operator", rel_op(frame_operator(fq), q * se * q.adjoint()),
                           1e-9));
  out.push_back(make_check("transformed-reconstruction-operator",
                           rel_op(reconstruction_operator(fq), q_inv.adjoint() * reconstruction_operator(fe) * q_inv),
                           1e-8));
  out.push_back(make_check("transformed-bounds-interval",
                           interval_violation(expect_bounds(frame_bounds(fq)), transformed_bound_interval(q, be)),
                           1e-9));

  const auto id_f = AdjointableOperator::identity(ff.module);
  const auto qt = tensor_operator(q, id_f);
  const auto qt_inv = tensor_operator(q_inv, id_f);
  const auto tq = transform_frame(qt, t);
  out.push_back(make_check("tensor-transform-frame-operator", rel_op(frame_operator(tq), qt * st * qt.adjoint()),
                           1e-9));
  out.push_back(make_check("tensor-transform-reconstruction-operator",
                           rel_op(reconstruction_operator(tq), qt_inv.adjoint() * reconstruction_operator(t) * qt_inv),
                           1e-8));

  std::size_t disagreements = 0;
  for (const auto* f : {&fe, &ff, &t}) {
    const auto b = expect_bounds(frame_bounds(*f));
    if (!verify_frame_pointwise(*f, b, 8, rng.next())) ++disagreements;
  }
  out.push_back(make_check("frame-bounds-pointwise", static_cast<double>(disagreements), 0.0));
  return out;
}

std::vector<CheckResult> orthonormal_basis_checks(const modframe::HilbertModule& e,
                                                  const modframe::HilbertModule& f, Rng& rng) {
  using namespace modframe;
  const auto ue = instances::random_unitary_operator(e, rng);
  const auto uf = instances::random_unitary_operator(f, rng);
  std::vector<ModuleVector> tensor_basis;
  for (const auto& x : instances::standard_module_basis(e))
    for (const auto& y : instances::standard_module_basis(f))
      tensor_basis.push_back(tensor_vector(ue.apply(x), uf.apply(y)));

  const auto tm = tensor_module(e, f);
  double residual = 0.0;
  for (std::size_t idx = 0; idx < tm.dimension(); ++idx) {
    const auto x = ModuleVector::basis_vector(tm, idx);
    auto r = ModuleVector::zero(tm);
    for (const auto& v : tensor_basis) r += inner_product(x, v) * v;
    residual = std::max(residual, trace_norm(r - x));
  }
  std::vector<CheckResult> out;
  out.push_back(make_check("tensor-orthonormal-basis", is_orthonormal_basis(tensor_basis) ? 0.0 : 1.0, 0.0));
  out.push_back(make_check("tensor-orthonormal-basis-reconstruction", residual, 1e-9));
  return out;
}

std::vector<CheckResult> fusion_checks(const fusion::FusionFrame& f, const fusion::FusionFrame& g, Rng& rng) {
  using namespace fusion;
  std::vector<CheckResult> out;
  const auto bf = modframe::expect_bounds(fusion_bounds(f));
  const auto bg = modframe::expect_bounds(fusion_bounds(g));
  const auto t = tensor_fusion(f, g);
  const auto bt = modframe::expect_bounds(fusion_bounds(t));
  out.push_back(make_check("fusion-tensor-bounds", bounds_error(bt, bf.lower * bg.lower, bf.upper * bg.upper),
                           1e-8));

  const auto st = fusion_frame_operator(t);
  const auto expected = linalg::kron(fusion_frame_operator(f), fusion_frame_operator(g));
  out.push_back(make_check("fusion-operator-factorization",
                           linalg::frobenius_norm(st - expected) / std::max(1.0, linalg::frobenius_norm(st)),
                           1e-10));

  const std::size_t d1 = f.ambient_dim;
  const std::size_t d2 = g.ambient_dim;
  const auto z = instances::random_vector(d1 * d2, rng);
  const double z_norm = linalg::frobenius_norm(vector_column(z));
  const auto m = linalg::reshape_vec_to_matrix(z, d1, d2);
  double compression = 0.0;
  for (const auto& w : f.members) {
    const auto pw = w.projection();
    for (const auto& u : g.members) {
      const auto pu = u.projection();
      const auto lhs_vec = linalg::vec(linalg::kron(pw, pu) * vector_column(z));
      const auto lhs = linalg::reshape_vec_to_matrix(lhs_vec, d1, d2);
      const auto rhs = pw * m * pu.transpose();
      compression = std::max(compression, linalg::frobenius_norm(lhs - rhs) / z_norm);
    }
  }
  out.push_back(make_check("reshape-compression", compression, 1e-10));

  double violation = 0.0;
  for (int s = 0; s < 8; ++s) {
    const auto x = vector_column(instances::random_vector(d1 * d2, rng));
    const double xx = std::pow(linalg::frobenius_norm(x), 2);
    double energy = 0.0;
    for (const auto& w : t.members)
      energy += w.weight() * w.weight() * std::pow(linalg::frobenius_norm(adjoint_times(w.basis(), x)), 2);
    const double q = energy / xx;
    violation = std::max({violation, (bt.lower - q) / bt.upper, (q - bt.upper) / bt.upper});
  }
  out.push_back(make_check("fusion-bounds-pointwise", violation, 1e-9));
  return out;
}

std::vector<CheckResult> resolution_checks(const fusion::OperatorFamily& r, const fusion::OperatorFamily& s) {
  using namespace fusion;
  std::vector<CheckResult> out;
  const auto cr = check_resolution(r);
  const auto cs = check_resolution(s);
  if (!is_resolution(cr) || !is_resolution(cs)) throw InvalidInput("factor is not a resolution of the identity");
  const auto br = std::get<FrameBounds>(cr);
  const auto bs = std::get<FrameBounds>(cs);
  const auto t = tensor_resolution(r, s);
  out.push_back(make_check("resolution-tensor-sum", resolution_sum_residual(t), 1e-9));
  const auto ct = check_resolution(t);
  const double violation =
      is_resolution(ct)
          ? interval_violation(std::get<FrameBounds>(ct), {br.lower * bs.lower, br.upper * bs.upper})
          : std::numeric_limits<double>::infinity();
  out.push_back(make_check("resolution-tensor-bounds", violation, 1e-9));
  return out;
}

std::vector<CheckResult> resolution_from_fusion_checks(const fusion::FusionFrame& f, const fusion::FusionFrame& g) {
  using namespace fusion;
  std::vector<CheckResult> out;
  const auto bf = modframe::expect_bounds(fusion_bounds(f));
  const auto bg = modframe::expect_bounds(fusion_bounds(g));
  const auto rf = resolution_from_fusion(f);
  const auto rg = resolution_from_fusion(g);
  const auto rt = resolution_from_fusion(tensor_fusion(f, g));
  const auto via_factors = tensor_resolution(rf, rg);

  out.push_back(make_check("resolution-from-fusion-sum",
                           std::max({resolution_sum_residual(rf), resolution_sum_residual(rg),
                                     resolution_sum_residual(rt)}),
                           1e-9));

  double diff = 0.0;
  for (std::size_t i = 0; i < rt.members.size(); ++i) {
    diff = std::max(diff, linalg::frobenius_norm(rt.members[i].op - via_factors.members[i].op));
    diff = std::max(diff, std::abs(rt.members[i].weight - via_factors.members[i].weight));
  }
  out.push_back(make_check("resolution-from-fusion-tensor", diff, 1e-9));

  const auto ct = check_resolution(rt);
  const double c = bf.lower * bg.lower;
  const double d = bf.upper * bg.upper;
  const double violation = is_resolution(ct)
                               ? interval_violation(std::get<FrameBounds>(ct), {c / (d * d), d / (c * c)})
                               : std::numeric_limits<double>::infinity();
  out.push_back(make_check("resolution-from-fusion-bounds", violation, 1e-9));
  return out;
}

std::vector<CheckResult> group_single_checks(const groupframe::GroupRepresentation& pi,
                                             const std::vector<Complex>& v) {
  using namespace groupframe;
  std::vector<CheckResult> out;
  out.push_back(make_check("group-representation", representation_residual(pi), 1e-9));
  const auto a = analysis_operator(pi, v);
  out.push_back(make_check("group-analysis-intertwining", analysis_intertwining_residual(pi, a), 1e-10));
  const auto sd = spectral_data(pi, v);
  out.push_back(make_check("group-spectral-resolution", spectral_resolution_residual(pi, sd), 1e-9));
  const auto u = decomposition_operator(sd);
  out.push_back(
      make_check("group-decomposition-intertwining", decomposition_intertwining_residual(pi, sd, u), 1e-10));
  out.push_back(make_check("group-decomposition-unitary", decomposition_unitarity_residual(u), 1e-10));
  return out;
}

std::vector<CheckResult> group_checks(const groupframe::GroupRepresentation& pi, const std::vector<Complex>& v,
                                      const groupframe::GroupRepresentation& sigma,
                                      const std::vector<Complex>& w, Rng& rng) {
  using namespace groupframe;
  const auto tr = tensor_representation(pi, sigma);
  const auto vw = tensor_vector(v, w);

  std::vector<CheckResult> out = group_single_checks(pi, v);
  for (auto&& c : group_single_checks(sigma, w)) out.push_back(std::move(c));
  for (auto&& c : group_single_checks(tr, vw)) out.push_back(std::move(c));

  const auto theta = analysis_operator(tr, vw).theta;
  const auto expected_theta = linalg::kron(analysis_operator(pi, v).theta, analysis_operator(sigma, w).theta);
  out.push_back(make_check("group-tensor-analysis", linalg::frobenius_norm(theta - expected_theta), 1e-10));

  const auto sv = spectral_data(pi, v);
  const auto sw = spectral_data(sigma, w);
  const auto direct = decomposition_operator(spectral_data(tr, vw));
  const auto factored = tensor_decomposition(sv, sw);
  double diff = std::abs(direct.weight - factored.weight);
  if (direct.u.rows() != factored.u.rows() || direct.u.cols() != factored.u.cols())
    diff = std::numeric_limits<double>::infinity();
  else
    diff = std::max(diff, linalg::frobenius_norm(direct.u - factored.u));
  out.push_back(make_check("group-tensor-decomposition", diff, 1e-10));

  const auto bv = modframe::expect_bounds(modframe::frame_bounds(orbit_frame(pi, v)));
  const auto bw = modframe::expect_bounds(modframe::frame_bounds(orbit_frame(sigma, w)));
  const auto bt = modframe::expect_bounds(modframe::frame_bounds(orbit_frame(tr, vw)));
  out.push_back(make_check("group-orbit-bounds", bounds_error(bt, bv.lower * bw.lower, bv.upper * bw.upper), 1e-8));

  const auto v2 = instances::random_vector(pi.dim(), rng);
  const auto w2 = instances::random_vector(sigma.dim(), rng);
  out.push_back(make_check("group-bessel-product",
                           relative_error(bessel_bound(tr, tensor_vector(v2, w2)),
                                          bessel_bound(pi, v2) * bessel_bound(sigma, w2)),
                           1e-8));
  return out;
}

std::vector<CheckResult> summarize(const std::vector<CheckResult>& all) {
  std::vector<CheckResult> out;
  std::map<std::string, std::size_t> position;
  for (const auto& c : all) {
    auto [it, inserted] = position.try_emplace(c.name, out.size());
    if (inserted) {
      out.push_back(c);
      continue;
    }
    auto& agg = out[it->second];
    if (c.residual > agg.residual || (!c.passed && agg.passed)) {
      agg.residual = std::max(agg.residual, c.residual);
      if (!c.detail.empty()) agg.detail = c.detail;
    }
    agg.tolerance = std::min(agg.tolerance, c.tolerance);
    agg.passed = agg.passed && c.passed;
  }
  return out;
}

namespace {

std::vector<CheckResult> tensor_trial(Rng& rng, std::size_t trial) {
  const auto algebra = trial % 2 == 0 ? cstar::CStarAlgebra{} : cstar::CStarAlgebra({2, 1});
  const modframe::HilbertModule e(algebra, 2 + rng.uniform_int(0, 2));
  const modframe::HilbertModule f(algebra, 2 + rng.uniform_int(0, 2));
  const auto fe = modframe::random_frame(e, e.rank + rng.uniform_int(0, 2), rng);
  const auto ff = modframe::random_frame(f, f.rank + rng.uniform_int(0, 2), rng);
  auto out = tensor_frame_checks(fe, ff, rng);
  const modframe::HilbertModule be(algebra, 1 + rng.uniform_int(0, 1));
  const modframe::HilbertModule bf(algebra, 1 + rng.uniform_int(0, 1));
  for (auto&& c : orthonormal_basis_checks(be, bf, rng)) out.push_back(std::move(c));
  return out;
}

std::vector<CheckResult> fusion_trial(Rng& rng) {
  const auto f = instances::random_fusion_frame(2 + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 2), rng);
  const auto g = instances::random_fusion_frame(2 + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 2), rng);
  return fusion_checks(f, g, rng);
}

std::vector<CheckResult> resolution_trial(Rng& rng) {
  const auto r = instances::random_resolution(2 + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 2), rng);
  const auto s = instances::random_resolution(2 + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 2), rng);
  auto out = resolution_checks(r, s);
  const auto f = instances::random_fusion_frame(2 + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 2), rng);
  const auto g = instances::random_fusion_frame(2 + rng.uniform_int(0, 2), 2 + rng.uniform_int(0, 2), rng);
  for (auto&& c : resolution_from_fusion_checks(f, g)) out.push_back(std::move(c));
  return out;
}

groupframe::FiniteAbelianGroup random_group(Rng& rng) {
  switch (rng.uniform_int(0, 3)) {
    case 0: return groupframe::FiniteAbelianGroup({2, 2});
    case 1: return groupframe::FiniteAbelianGroup({2, 3});
    default: return groupframe::FiniteAbelianGroup({2 + rng.uniform_int(0, 4)});
  }
}

std::vector<CheckResult> group_trial(Rng& rng) {
  const auto g1 = random_group(rng);
  const auto g2 = random_group(rng);
  const auto pi = instances::random_multiplicity_free_rep(g1, 1 + rng.uniform_int(0, std::min<std::size_t>(g1.order(), 3) - 1), rng);
  const auto sigma = instances::random_multiplicity_free_rep(g2, 1 + rng.uniform_int(0, std::min<std::size_t>(g2.order(), 3) - 1), rng);
  const auto v = instances::random_vector(pi.dim(), rng);
  const auto w = instances::random_vector(sigma.dim(), rng);
  return group_checks(pi, v, sigma, w, rng);
}

std::vector<CheckResult> run_trial(Suite suite, std::uint64_t seed, std::size_t trial) {
  std::vector<CheckResult> out;
  const auto append = [&](Suite s, const char* label, auto&& body) {
    if (!includes(suite, s)) return;
    Rng rng(trial_seed(seed, s, trial));
    try {
      for (auto&& c : body(rng)) out.push_back(std::move(c));
    } catch (const std::exception& e) {
      out.push_back(failure(std::string(label) + "-trial", e));
    }
  };
  append(Suite::Tensor, "tensor", [&](Rng& rng) { return tensor_trial(rng, trial); });
  append(Suite::Fusion, "fusion", [](Rng& rng) { return fusion_trial(rng); });
  append(Suite::Resolution, "resolution", [](Rng& rng) { return resolution_trial(rng); });
  append(Suite::Group, "group", [](Rng& rng) { return group_trial(rng); });
  return out;
}

}  // namespace

std::vector<CheckResult> run_random(const VerifyOptions& options) {
  const auto n = static_cast<std::ptrdiff_t>(options.trials);
  std::vector<std::vector<CheckResult>> per_trial(options.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < n; ++t)
    per_trial[static_cast<std::size_t>(t)] = run_trial(options.suite, options.seed, static_cast<std::size_t>(t));

  std::vector<CheckResult> all;
  for (auto& v : per_trial)
    for (auto& c : v) all.push_back(std::move(c));
  auto out = summarize(all);
  rescale(out, options.tolerance);
  return out;
}

std::vector<CheckResult> run_on_documents(const VerifyOptions& options, const std::vector<io::FrameDocument>& docs) {
  std::vector<CheckResult> all;
  Rng rng(splitmix(options.seed));
  const auto guarded = [&](const char* label, auto&& body) {
    try {
      for (auto&& c : body()) all.push_back(std::move(c));
    } catch (const std::exception& e) {
      all.push_back(failure(std::string(label) + "-input", e));
    }
  };
  for (const auto& doc : docs) {
    switch (doc.kind) {
      case io::DocumentKind::Frame:
        if (includes(options.suite, Suite::Tensor)) {
          guarded("tensor", [&] {
            const auto f = io::to_frame(doc);
            return tensor_frame_checks(f, f, rng);
          });
        }
        break;
      case io::DocumentKind::Fusion:
        if (includes(options.suite, Suite::Fusion)) {
          guarded("fusion", [&] {
            const auto f = io::to_fusion(doc);
            return fusion_checks(f, f, rng);
          });
        }
        if (includes(options.suite, Suite::Resolution)) {
          guarded("resolution", [&] {
            const auto f = io::to_fusion(doc);
            return resolution_from_fusion_checks(f, f);
          });
        }
        break;
      case io::DocumentKind::Resolution:
        if (includes(options.suite, Suite::Resolution)) {
          guarded("resolution", [&] {
            const auto r = io::to_resolution(doc);
            return resolution_checks(r, r);
          });
        }
        break;
      case io::DocumentKind::Group:
        if (includes(options.suite, Suite::Group)) {
          guarded("group", [&] {
            const auto pi = io::to_representation(doc);
            std::vector<CheckResult> out;
            if (doc.candidates.empty())
              out.push_back(make_check("group-representation", groupframe::representation_residual(pi), 1e-9));
            for (const auto& c : doc.candidates)
              for (auto&& r : group_checks(pi, c, pi, c, rng)) out.push_back(std::move(r));
            return out;
          });
        }
        break;
    }
  }
  auto out = summarize(all);
  rescale(out, options.tolerance);
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace tensorframe::verify
