#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "tensorframe/error.hpp"
#include "tensorframe/groupframe.hpp"
#include "tensorframe/instances.hpp"
#include "tensorframe/random.hpp"

using namespace tensorframe;
using namespace tensorframe::groupframe;
using linalg::Complex;
using linalg::ComplexMatrix;

namespace {

GroupRepresentation z4_diagonal_rep() {
  const ComplexMatrix gen{{1.0, 0.0}, {0.0, Complex{0.0, 1.0}}};
  return GroupRepresentation::from_generators(FiniteAbelianGroup({4}), {gen});
}

}  // namespace

TEST_CASE("enumeration and group law") {
  const FiniteAbelianGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.element(4) == std::vector<std::size_t>{1, 1});
  CHECK(g.index({1, 2}) == 5);
  CHECK(g.add(4, 5) == g.index({0, 0}));
  for (std::size_t x = 0; x < 6; ++x) CHECK(g.add(x, g.negate(x)) == 0);
  const auto s = direct_sum(FiniteAbelianGroup({4}), g);
  CHECK(s.cyclic_orders() == std::vector<std::size_t>{4, 2, 3});
  CHECK(s.index({3, 1, 2}) == 3 * 6 + 5);
  CHECK_THROWS_AS(FiniteAbelianGroup({2, 0}), InvalidInput);
}

TEST_CASE("characters are orthogonal") {
  const FiniteAbelianGroup g({2, 3});
  const auto chars = characters(g);
  REQUIRE(chars.size() == 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      Complex s = 0.0;
      for (std::size_t x = 0; x < 6; ++x) s += chars[a](x) * std::conj(chars[b](x));
      CHECK(std::abs(s - (a == b ? 6.0 : 0.0)) < 1e-12);
    }
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y)
      CHECK(std::abs(chars[4](g.add(x, y)) - chars[4](x) * chars[4](y)) < 1e-12);
  CHECK(std::abs(Character(FiniteAbelianGroup({4}), {1})(1) - Complex{0.0, 1.0}) < 1e-15);
}

TEST_CASE("Z4 diagonal example") {
  const auto pi = z4_diagonal_rep();
  CHECK(verify_representation(pi));
  CHECK(representation_residual(pi) == 0.0);
  const std::vector<Complex> v{1.0, 1.0};
  const auto a = analysis_operator(pi, v);
  const Complex minus_i{0.0, -1.0};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(a.theta(k, 0) == Complex{1.0, 0.0});
    CHECK(std::abs(a.theta(k, 1) - std::pow(minus_i, static_cast<int>(k))) < 1e-15);
  }
  CHECK(analysis_intertwining_residual(pi, a) == 0.0);

  const auto sd = spectral_data(pi, v);
  CHECK(sd.support.size() == 2);
  const auto u = decomposition_operator(sd);
  CHECK(u.weight == doctest::Approx(0.25));
  CHECK(tftest::max_abs_diff(u.u, 2.0 * ComplexMatrix::identity(2)) < 1e-14);
  CHECK(decomposition_unitarity_residual(u) < 1e-14);
  CHECK(decomposition_intertwining_residual(pi, sd, u) < 1e-14);

  const auto b = modframe::expect_bounds(modframe::frame_bounds(orbit_frame(pi, v)));
  CHECK(b.lower == doctest::Approx(4.0));
  CHECK(b.upper == doctest::Approx(4.0));
  CHECK(bessel_bound(pi, v) == doctest::Approx(4.0));
}

TEST_CASE("translations are permutations") {
  const FiniteAbelianGroup g({2, 3});
  for (std::size_t x = 0; x < 6; ++x) {
    const auto l = translation(g, x);
    CHECK(tftest::max_abs_diff(l * l.adjoint(), ComplexMatrix::identity(6)) == 0.0);
    for (std::size_t h = 0; h < 6; ++h) CHECK(l(g.add(h, x), h) == Complex{1.0, 0.0});
  }
}

TEST_CASE("multiplicity and frame-vector failures are detected") {
  const FiniteAbelianGroup z3({3});
  CHECK_THROWS_AS(spectral_data(GroupRepresentation::trivial(z3, 2), {1.0, 1.0}), MultiplicityTooHigh);
  const auto pi = z4_diagonal_rep();
  CHECK_THROWS_AS(spectral_data(pi, {1.0, 0.0}), NotAFrameVector);
  CHECK_FALSE(modframe::is_frame(modframe::frame_bounds(orbit_frame(pi, {1.0, 0.0}))));
}

TEST_CASE("invalid representations are rejected") {
  const FiniteAbelianGroup z2({2});
  const ComplexMatrix bad{{2.0, 0.0}, {0.0, 1.0}};
  const GroupRepresentation not_unitary(z2, {ComplexMatrix::identity(2), bad});
  CHECK_FALSE(verify_representation(not_unitary));
  const ComplexMatrix flip{{0.0, 1.0}, {1.0, 0.0}};
  const GroupRepresentation wrong_law(z2, {flip, flip});
  CHECK_FALSE(verify_representation(wrong_law));
}

TEST_CASE("tensor representations factor through Kronecker products") {
  Rng rng(12);
  const FiniteAbelianGroup g1({2, 2}), g2({3});
  const auto pi = instances::random_multiplicity_free_rep(g1, 3, rng);
  const auto sigma = instances::random_multiplicity_free_rep(g2, 2, rng);
  CHECK(verify_representation(pi));
  const auto tr = tensor_representation(pi, sigma);
  CHECK(tr.group().order() == 12);
  CHECK(tftest::max_abs_diff(tr(g1.index({1, 0}) * 3 + 2), tftest::naive_kron(pi(g1.index({1, 0})), sigma(2))) == 0.0);

  const auto v = instances::random_vector(3, rng);
  const auto w = instances::random_vector(2, rng);
  const auto vw = tensor_vector(v, w);
  CHECK(tftest::max_abs_diff(analysis_operator(tr, vw).theta,
                             tftest::naive_kron(analysis_operator(pi, v).theta, analysis_operator(sigma, w).theta)) < 1e-13);

  const auto sv = spectral_data(pi, v), sw = spectral_data(sigma, w);
  const auto direct = spectral_data(tr, vw);
  const auto via = tensor_spectral_data(sv, sw);
  REQUIRE(direct.support.size() == via.support.size());
  for (std::size_t i = 0; i < via.support.size(); ++i)
    CHECK(tftest::max_abs_diff(direct.projections[i], via.projections[i]) < 1e-12);
  const auto u = decomposition_operator(direct);
  const auto uv = tensor_decomposition(sv, sw);
  CHECK(tftest::max_abs_diff(u.u, uv.u) < 1e-12);
  CHECK(u.weight == doctest::Approx(uv.weight));

  const auto v2 = instances::random_vector(3, rng);
  const auto w2 = instances::random_vector(2, rng);
  CHECK(bessel_bound(tr, tensor_vector(v2, w2)) ==
        doctest::Approx(bessel_bound(pi, v2) * bessel_bound(sigma, w2)).epsilon(1e-10));
}
