#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tensorframe/error.hpp"
#include "tensorframe/instances.hpp"
#include "tensorframe/modframe.hpp"
#include "tensorframe/random.hpp"

using namespace tensorframe;
using namespace tensorframe::modframe;
using linalg::ComplexMatrix;

namespace {

const HilbertModule kBlockModule(CStarAlgebra({2, 1}), 3);

// Extremal eigenvalues of the frame operator acting on the flattened
// space, which in finite dimension are the optimal bounds.
std::pair<double, double> brute_force_bounds(const ModuleFrame& f) {
  const auto e = linalg::hermitian_eigen(frame_operator(f).trace_representation());
  return {e.eigenvalues.front(), e.eigenvalues.back()};
}

}  // namespace

TEST_CASE("inner product axioms") {
  Rng rng(1);
  const auto x = ModuleVector::random(kBlockModule, rng);
  const auto y = ModuleVector::random(kBlockModule, rng);
  const auto a = AlgebraElement::random(kBlockModule.algebra, rng);
  const auto lhs = inner_product(a * x, y);
  const auto rhs = a * inner_product(x, y);
  for (std::size_t b = 0; b < 2; ++b) CHECK(tftest::max_abs_diff(lhs.block(b), rhs.block(b)) < 1e-12);
  const auto xy = inner_product(x, y).adjoint();
  const auto yx = inner_product(y, x);
  for (std::size_t b = 0; b < 2; ++b) CHECK(tftest::max_abs_diff(xy.block(b), yx.block(b)) < 1e-12);
  CHECK(cstar::elem_positive(inner_product(x, x)));
  CHECK(std::abs(cstar::trace(inner_product(x, x)).real() - std::pow(trace_norm(x), 2)) < 1e-10);
  const HilbertModule other(CStarAlgebra({2, 1}), 2);
  CHECK_THROWS_AS(inner_product(x, ModuleVector::zero(other)), ModuleMismatch);
}

TEST_CASE("adjointable operators") {
  Rng rng(2);
  const auto t = AdjointableOperator::random(kBlockModule, rng);
  const auto s = AdjointableOperator::random(kBlockModule, rng);
  const auto x = ModuleVector::random(kBlockModule, rng);
  const auto y = ModuleVector::random(kBlockModule, rng);
  const auto lhs = inner_product(t.apply(x), y);
  const auto rhs = inner_product(x, t.adjoint().apply(y));
  for (std::size_t b = 0; b < 2; ++b) CHECK(tftest::max_abs_diff(lhs.block(b), rhs.block(b)) < 1e-11);
  CHECK(trace_norm((s * t).apply(x) - s.apply(t.apply(x))) < 1e-11);
  CHECK(residual_norm(t * inverse(t) - AdjointableOperator::identity(kBlockModule)) < 1e-10);

  const auto a = AlgebraElement::random(kBlockModule.algebra, rng);
  CHECK(trace_norm(t.apply(a * x) - a * t.apply(x)) < 1e-11);

  // Brute-force matrix on the flattened space agrees with apply.
  const auto big = t.trace_representation();
  const auto fx = x.flatten();
  const auto image = big * ComplexMatrix::column(fx);
  const auto want = t.apply(x).flatten();
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(image(i, 0) - want[i]) < 1e-11);
}

TEST_CASE("hilbert-space operators round trip") {
  Rng rng(3);
  const auto m = rng.matrix(3, 3);
  const auto op = AdjointableOperator::from_matrix(m);
  CHECK(op.hilbert_matrix() == m);
  const std::vector<linalg::Complex> v{1.0, 2.0, {0.0, 1.0}};
  const auto image = op.apply(ModuleVector::from_scalars(v)).flatten();
  const auto want = m * ComplexMatrix::column(v);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(image[i] - want(i, 0)) < 1e-13);
  CHECK_THROWS_AS(AdjointableOperator::identity(kBlockModule).hilbert_matrix(), InvalidInput);
}

TEST_CASE("Mercedes-Benz frame is tight with bound 3/2") {
  const auto f = instances::mercedes_benz_frame();
  const auto b = expect_bounds(frame_bounds(f));
  CHECK(b.lower == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(b.upper == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(verify_frame_pointwise(f, b, 50, 1));
  const auto t = expect_bounds(frame_bounds(tensor_frame(f, f)));
  CHECK(std::abs(t.lower - 2.25) < 1e-10);
  CHECK(std::abs(t.upper - 2.25) < 1e-10);
}

TEST_CASE("spectral bounds match the brute-force flattened operator") {
  Rng rng(4);
  for (const auto& alg : {CStarAlgebra(), CStarAlgebra({2}), CStarAlgebra({2, 1})}) {
    const HilbertModule m(alg, 2);
    const auto f = random_frame(m, 3, rng);
    const auto b = expect_bounds(frame_bounds(f));
    const auto [lo, hi] = brute_force_bounds(f);
    CHECK(b.lower == doctest::Approx(lo).epsilon(1e-10));
    CHECK(b.upper == doctest::Approx(hi).epsilon(1e-10));
    const auto t = tensor_frame(f, f);
    const auto [tlo, thi] = brute_force_bounds(t);
    CHECK(tlo == doctest::Approx(lo * lo).epsilon(1e-9));
    CHECK(thi == doctest::Approx(hi * hi).epsilon(1e-9));
  }
}

TEST_CASE("a single vector in C^2 is not a frame") {
  const auto f = hilbert_frame({{1.0, 1.0}});
  const auto r = frame_bounds(f);
  REQUIRE_FALSE(is_frame(r));
  CHECK(std::get<NotAFrame>(r).max_eigenvalue == doctest::Approx(2.0));
  CHECK_THROWS_AS(expect_bounds(r), NotAFrameError);
  CHECK_THROWS_AS(reconstruction_operator(f), NotAFrameError);
}

TEST_CASE("reconstruction recovers every vector") {
  Rng rng(5);
  const auto f = random_frame(kBlockModule, 5, rng);
  for (int i = 0; i < 5; ++i) {
    const auto x = ModuleVector::random(kBlockModule, rng);
    CHECK(trace_norm(reconstruct(f, x) - x) < 1e-9 * trace_norm(x));
  }
  const auto s = reconstruction_operator(f);
  CHECK(residual_norm(s * frame_operator(f) - AdjointableOperator::identity(kBlockModule)) < 1e-9);
}

TEST_CASE("orthonormal bases") {
  const CStarAlgebra m2({2});
  const HilbertModule m(m2, 1);
  const std::vector<ModuleVector> onb{ModuleVector(m, {AlgebraElement::matrix_unit(m2, 0, 0, 0)}),
                                      ModuleVector(m, {AlgebraElement::matrix_unit(m2, 0, 1, 1)})};
  CHECK(is_orthonormal_basis(onb));
  std::vector<ModuleVector> tensor;
  for (const auto& x : onb)
    for (const auto& y : onb) tensor.push_back(tensor_vector(x, y));
  CHECK(is_orthonormal_basis(tensor));
  CHECK_FALSE(is_orthonormal_basis({onb[0]}));
  CHECK_FALSE(is_orthonormal_basis({ModuleVector(m, {AlgebraElement::unit(m2)})}));
  CHECK(is_orthonormal_basis(instances::standard_module_basis(kBlockModule)));
}

TEST_CASE("tensor frames") {
  Rng rng(6);
  const auto fe = random_frame(HilbertModule(CStarAlgebra({2, 1}), 2), 3, rng);
  const auto ff = random_frame(HilbertModule(CStarAlgebra(), 2), 2, rng);
  const auto t = tensor_frame(fe, ff);
  CHECK(t.size() == 6);
  CHECK(t.labels[1] == "0,1");
  CHECK(t.module.rank == 4);
  CHECK(t.module.algebra == CStarAlgebra({2, 1}));
  const auto se = frame_operator(fe), sf = frame_operator(ff);
  const auto st = frame_operator(t);
  CHECK(residual_norm(st - tensor_operator(se, sf)) <= 1e-12 * residual_norm(st));

  // (Q (x) R)(x (x) y) = Qx (x) Ry
  const auto q = AdjointableOperator::random(fe.module, rng);
  const auto r = AdjointableOperator::random(ff.module, rng);
  const auto x = ModuleVector::random(fe.module, rng);
  const auto y = ModuleVector::random(ff.module, rng);
  CHECK(trace_norm(tensor_operator(q, r).apply(tensor_vector(x, y)) - tensor_vector(q.apply(x), r.apply(y))) < 1e-11);
}

TEST_CASE("transformed frames") {
  Rng rng(7);
  const auto f = random_frame(kBlockModule, 4, rng);
  const auto q = instances::random_invertible_operator(kBlockModule, rng);
  const auto g = transform_frame(q, f);
  const auto sg = frame_operator(g);
  CHECK(residual_norm(sg - q * frame_operator(f) * q.adjoint()) <= 1e-12 * residual_norm(sg));
  const auto b = expect_bounds(frame_bounds(f));
  const auto bg = expect_bounds(frame_bounds(g));
  const auto iv = transformed_bound_interval(q, b);
  CHECK(bg.lower >= iv.lower * (1 - 1e-12));
  CHECK(bg.upper <= iv.upper * (1 + 1e-12));

  std::vector<ComplexMatrix> zero_blocks;
  for (auto k : kBlockModule.algebra.block_dims()) zero_blocks.emplace_back(3 * k, 3 * k);
  CHECK_THROWS_AS(transform_frame(AdjointableOperator(kBlockModule, zero_blocks), f), SingularOperator);
}

TEST_CASE("pointwise check rejects bounds that are too tight") {
  const auto f = hilbert_frame({{1.0, 0.0}, {0.0, 2.0}});
  const auto b = expect_bounds(frame_bounds(f));
  CHECK(b.lower == doctest::Approx(1.0));
  CHECK(b.upper == doctest::Approx(4.0));
  CHECK(verify_frame_pointwise(f, b, 100, 3));
  CHECK_FALSE(verify_frame_pointwise(f, {1.5, 4.0}, 100, 3));
  CHECK_FALSE(verify_frame_pointwise(f, {1.0, 3.0}, 100, 3));
}
