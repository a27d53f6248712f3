#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tensorframe/error.hpp"
#include "tensorframe/fusion.hpp"
#include "tensorframe/instances.hpp"
#include "tensorframe/random.hpp"

using namespace tensorframe;
using namespace tensorframe::fusion;
using linalg::ComplexMatrix;

TEST_CASE("subspaces are orthonormalized on ingestion") {
  ComplexMatrix span(3, 3);
  span(0, 0) = 2.0;
  span(0, 1) = 4.0;
  span(1, 2) = 1.0;
  const WeightedSubspace w(span, 0.5);
  CHECK(w.dim() == 2);
  CHECK(w.ambient_dim() == 3);
  const auto p = w.projection();
  CHECK(tftest::max_abs_diff(p * p, p) < 1e-14);
  CHECK(linalg::is_hermitian(p));
  CHECK_THROWS_AS(WeightedSubspace(span, 0.0), InvalidInput);
  CHECK_THROWS_AS(WeightedSubspace(span, -1.0), InvalidInput);
  CHECK_THROWS_AS(WeightedSubspace(ComplexMatrix(3, 1), 1.0), InvalidInput);
}

TEST_CASE("coordinate fusion frame has bounds min and max squared weight") {
  const auto f = instances::coordinate_fusion_frame({1.0, 2.0, 0.5});
  const auto b = modframe::expect_bounds(fusion_bounds(f));
  CHECK(b.lower == doctest::Approx(0.25));
  CHECK(b.upper == doctest::Approx(4.0));
}

TEST_CASE("Mercedes-Benz lines give the tight bound 9/4 after tensoring") {
  const auto f = instances::mercedes_benz_lines();
  const auto b = modframe::expect_bounds(fusion_bounds(f));
  CHECK(std::abs(b.lower - 1.5) < 1e-12);
  const auto t = tensor_fusion(f, f);
  CHECK(t.members.size() == 9);
  CHECK(t.ambient_dim == 4);
  const auto bt = modframe::expect_bounds(fusion_bounds(t));
  CHECK(std::abs(bt.lower - 2.25) < 1e-10);
  CHECK(std::abs(bt.upper - 2.25) < 1e-10);
}

TEST_CASE("tensor fusion operator factorizes") {
  Rng rng(8);
  const auto f = instances::random_fusion_frame(3, 3, rng);
  const auto g = instances::random_fusion_frame(2, 2, rng);
  const auto t = tensor_fusion(f, g);
  CHECK(t.members[1].weight() == doctest::Approx(f.members[0].weight() * g.members[1].weight()));
  CHECK(t.members[1].dim() == f.members[0].dim() * g.members[1].dim());
  const auto st = fusion_frame_operator(t);
  const auto want = tftest::naive_kron(fusion_frame_operator(f), fusion_frame_operator(g));
  CHECK(linalg::frobenius_norm(st - want) < 1e-12);
}

TEST_CASE("too few subspaces do not cover") {
  const ComplexMatrix e1{{1.0}, {0.0}};
  const FusionFrame f(2, {WeightedSubspace(e1, 1.0)});
  CHECK_FALSE(modframe::is_frame(fusion_bounds(f)));
  CHECK_THROWS_AS(resolution_from_fusion(f), NotAFrameError);
}

TEST_CASE("resolution of the identity checks") {
  const auto id = ComplexMatrix::identity(2);
  const OperatorFamily halves(2, {{0.5 * id, 1.0}, {0.5 * id, 1.0}});
  const auto r = check_resolution(halves);
  REQUIRE(is_resolution(r));
  CHECK(std::get<FrameBounds>(r).lower == doctest::Approx(0.5));
  CHECK(resolution_sum_residual(halves) == 0.0);

  const OperatorFamily short_sum(2, {{0.5 * id, 1.0}});
  const auto bad = check_resolution(short_sum);
  REQUIRE_FALSE(is_resolution(bad));
  CHECK(std::get<NotAResolution>(bad).sum_residual == doctest::Approx(std::sqrt(0.5)));
  CHECK_THROWS_AS(tensor_resolution(short_sum, halves), InvalidInput);
}

TEST_CASE("tensor resolutions sum to the identity with product bounds") {
  Rng rng(9);
  const auto r = instances::random_resolution(3, 3, rng);
  const auto s = instances::random_resolution(2, 2, rng);
  const auto t = tensor_resolution(r, s);
  CHECK(t.members.size() == 6);
  CHECK(resolution_sum_residual(t) < 1e-12);
  const auto br = std::get<FrameBounds>(check_resolution(r));
  const auto bs = std::get<FrameBounds>(check_resolution(s));
  const auto bt = std::get<FrameBounds>(check_resolution(t));
  CHECK(bt.lower == doctest::Approx(br.lower * bs.lower).epsilon(1e-10));
  CHECK(bt.upper == doctest::Approx(br.upper * bs.upper).epsilon(1e-10));
  // Energy operator of the product is the Kronecker product of the factors'.
  const auto e = resolution_energy_operator(t);
  const auto want = tftest::naive_kron(resolution_energy_operator(r), resolution_energy_operator(s));
  CHECK(linalg::frobenius_norm(e - want) < 1e-10);
}

TEST_CASE("resolutions built from fusion frames") {
  Rng rng(10);
  const auto f = instances::random_fusion_frame(3, 4, rng);
  const auto b = modframe::expect_bounds(fusion_bounds(f));
  const auto r = resolution_from_fusion(f);
  CHECK(resolution_sum_residual(r) < 1e-12);
  const auto br = std::get<FrameBounds>(check_resolution(r));
  CHECK(br.lower >= b.lower / (b.upper * b.upper) * (1 - 1e-12));
  CHECK(br.upper <= b.upper / (b.lower * b.lower) * (1 + 1e-12));
  CHECK(br.lower == doctest::Approx(1.0 / b.upper).epsilon(1e-10));
  CHECK(br.upper == doctest::Approx(1.0 / b.lower).epsilon(1e-10));

  const auto p = instances::random_parseval_fusion_frame(3, 2, rng);
  const auto bp = modframe::expect_bounds(fusion_bounds(p));
  CHECK(std::abs(bp.lower - 1.0) < 1e-12);
  const auto rp = std::get<FrameBounds>(check_resolution(resolution_from_fusion(p)));
  CHECK(std::abs(rp.lower - 1.0) < 1e-10);
  CHECK(std::abs(rp.upper - 1.0) < 1e-10);
}
