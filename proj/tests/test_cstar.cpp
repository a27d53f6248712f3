#include <doctest.h>

#include "support.hpp"
#include "tensorframe/cstar.hpp"
#include "tensorframe/error.hpp"
#include "tensorframe/random.hpp"

using namespace tensorframe;
using namespace tensorframe::cstar;

namespace {

AlgebraElement positive(const CStarAlgebra& a, Rng& rng) {
  const auto x = AlgebraElement::random(a, rng);
  return x.adjoint() * x;
}

}  // namespace

TEST_CASE("algebra dimensions") {
  CHECK(CStarAlgebra().is_scalar());
  CHECK(CStarAlgebra().dimension() == 1);
  const CStarAlgebra a({2, 1});
  CHECK(a.dimension() == 5);
  CHECK(a.block_count() == 2);
  CHECK_THROWS_AS(CStarAlgebra(std::vector<std::size_t>{}), InvalidInput);
  CHECK_THROWS_AS(CStarAlgebra({2, 0}), InvalidInput);
}

TEST_CASE("tensor algebra blocks are ordered a-block outer") {
  const auto t = algebra_tensor(CStarAlgebra({2, 1}), CStarAlgebra({3, 1}));
  CHECK(t.block_dims() == std::vector<std::size_t>{6, 2, 3, 1});
  CHECK(algebra_tensor(CStarAlgebra(), CStarAlgebra({2})) == CStarAlgebra({2}));
}

TEST_CASE("elementary tensors are blockwise Kronecker products") {
  Rng rng(2);
  const CStarAlgebra a({2, 1}), b({1, 2});
  const auto x = AlgebraElement::random(a, rng);
  const auto y = AlgebraElement::random(b, rng);
  const auto t = elem_tensor(x, y);
  REQUIRE(t.blocks().size() == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(tftest::max_abs_diff(t.block(i * 2 + j), tftest::naive_kron(x.block(i), y.block(j))) == 0.0);
  CHECK(norm(t) == doctest::Approx(norm(x) * norm(y)).epsilon(1e-10));
  CHECK(elem_positive(elem_tensor(positive(a, rng), positive(b, rng))));
}

TEST_CASE("arithmetic and adjoints") {
  Rng rng(4);
  const CStarAlgebra a({2, 1});
  const auto x = AlgebraElement::random(a, rng);
  const auto y = AlgebraElement::random(a, rng);
  const auto lhs = (x * y).adjoint();
  const auto rhs = y.adjoint() * x.adjoint();
  for (std::size_t b = 0; b < 2; ++b) CHECK(tftest::max_abs_diff(lhs.block(b), rhs.block(b)) < 1e-13);
  CHECK(x * AlgebraElement::unit(a) == x);
  CHECK(trace(AlgebraElement::unit(a)) == linalg::Complex{3.0, 0.0});
  CHECK_THROWS_AS(x * AlgebraElement::unit(CStarAlgebra({2})), AlgebraMismatch);
}

TEST_CASE("positivity, order and modulus") {
  Rng rng(6);
  const CStarAlgebra a({2, 1});
  const auto p = positive(a, rng);
  CHECK(is_hermitian(p));
  CHECK(elem_positive(p));
  CHECK_FALSE(elem_positive(linalg::Complex{-1.0, 0.0} * p));
  CHECK(loewner_leq(AlgebraElement::zero(a), p));
  CHECK(loewner_leq(p, p + AlgebraElement::unit(a)));
  CHECK_FALSE(loewner_leq(p + AlgebraElement::unit(a), p));

  const auto x = AlgebraElement::random(a, rng);
  const auto m = modulus(x);
  CHECK(elem_positive(m));
  const auto diff = m * m - x.adjoint() * x;
  CHECK(max_block_frobenius(diff) < 1e-10 * max_block_frobenius(x.adjoint() * x));
  CHECK_THROWS_AS(loewner_leq(x, p), NotHermitian);
}

TEST_CASE("minimal projections") {
  const CStarAlgebra m2({2});
  CHECK(is_minimal_projection(AlgebraElement::matrix_unit(m2, 0, 0, 0)));
  CHECK(is_minimal_projection(AlgebraElement::matrix_unit(m2, 0, 1, 1)));
  CHECK_FALSE(is_minimal_projection(AlgebraElement::unit(m2)));
  CHECK_FALSE(is_minimal_projection(AlgebraElement::matrix_unit(m2, 0, 0, 1)));
  CHECK_FALSE(is_minimal_projection(AlgebraElement::zero(m2)));
  const CStarAlgebra a({2, 1});
  CHECK(is_minimal_projection(AlgebraElement::matrix_unit(a, 1, 0, 0)));
  CHECK_FALSE(is_minimal_projection(AlgebraElement::matrix_unit(a, 0, 0, 0) + AlgebraElement::matrix_unit(a, 1, 0, 0)));
  const auto half = linalg::Complex{0.5, 0.0} * AlgebraElement::unit(m2);
  CHECK_FALSE(is_minimal_projection(half));
}
