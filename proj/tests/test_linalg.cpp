#include <cmath>
#include <random>

#include "doctest.h"
#include "support.hpp"
#include "tropical/linalg.hpp"

using namespace tropical;

namespace {

const TropMatrix kA{{1, -1, 1}, {3, 1, 0}, {0, 0, 2}};
const TropVector kP = TropVector::column({3, 4, 4});

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tropical::Error");
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("mat_add") {
  CHECK(mat_add(kA, kA) == kA);
  CHECK(mat_add(kA, TropMatrix(3, 3)) == kA);
  const TropMatrix a{{1, -1}, {0, 2}}, b{{0, 3}, {-2, 2}};
  CHECK(mat_add(a, b) == TropMatrix{{1, 3}, {0, 2}});
  CHECK(code_of([&] { (void)mat_add(a, kA); }) == Errc::shape_mismatch);
}

TEST_CASE("mat_mul and vector products") {
  CHECK(conjugate(kP) * kA == TropVector::row({-1, -3, -2}));
  const auto x = TropVector::column({5, -2, 0.5});
  CHECK(TropMatrix::identity(3) * x == x);
  CHECK(mat_mul(TropMatrix::identity(3), kA) == kA);
  CHECK(mat_mul(kA, TropMatrix::identity(3)) == kA);
  CHECK(kA * TropVector::column({2, 2, 2}) == TropVector::column({3, 5, 4}));

  const TropMatrix q1{{0, -INFINITY}, {3, 2}}, q2{{-1, 11}, {1, -INFINITY}};
  CHECK(q1 * q2 == TropMatrix{{-1, 11}, {3, 14}});
  CHECK(code_of([&] { (void)mat_mul(kA, TropMatrix(2, 2)); }) == Errc::shape_mismatch);
}

TEST_CASE("orientation is enforced in products") {
  const auto col = TropVector::column({1, 2, 3});
  CHECK(code_of([&] { (void)(kA * col.transposed()); }) == Errc::shape_mismatch);
  CHECK(code_of([&] { (void)(col * kA); }) == Errc::shape_mismatch);
  CHECK(code_of([&] { (void)(col * col); }) == Errc::shape_mismatch);
  CHECK(code_of([&] { (void)(col + col.transposed()); }) == Errc::shape_mismatch);
  CHECK(conjugate(col) * col == Scalar::one());
}

TEST_CASE("scalar_mul") {
  CHECK(Scalar(1) * TropVector::column({1, 3, 2}) == TropVector::column({2, 4, 3}));
  CHECK(scalar_mul(Scalar::one(), kA) == kA);
  CHECK(scalar_mul(Scalar::zero(), kA) == TropMatrix(3, 3));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(kP) == TropVector::row({-3, -4, -4}));
  const auto v = TropVector::column({1, 3, 2});
  CHECK(conjugate(v) == TropVector::row({-1, -3, -2}));
  CHECK(conjugate(conjugate(v)) == v);
  CHECK(conjugate(TropVector::column({2, -INFINITY})) == TropVector::row({-2, -INFINITY}));
  CHECK(code_of([] { (void)conjugate(TropVector::zeros(3)); }) == Errc::zero_vector);
}

TEST_CASE("distance") {
  const auto x = TropVector::column({0.5, -7, 2});
  CHECK(distance(x, x) == Scalar::one());
  CHECK(distance(TropVector::column({0, 0, 0}), TropVector::column({1, 3, 1})) == Scalar(3));
  CHECK(distance(TropVector::column({-3, 1, 1}), TropVector::column({1, 3, -2})) == Scalar(4));
  CHECK(code_of([] {
          (void)distance(TropVector::column({1, -INFINITY}), TropVector::column({1, 2}));
        }) == Errc::not_regular);
  CHECK(code_of([] { (void)distance(TropVector::column({1}), TropVector::column({1, 2})); }) ==
        Errc::shape_mismatch);
}

TEST_CASE("regularity predicates") {
  CHECK(TropVector::column({1, 2}).is_regular());
  CHECK_FALSE(TropVector::column({1, -INFINITY}).is_regular());
  const TropMatrix m{{1, -INFINITY}, {-INFINITY, -INFINITY}};
  CHECK_FALSE(m.is_row_regular());
  CHECK_FALSE(m.is_column_regular());
  const TropMatrix n{{1, -INFINITY}, {-INFINITY, 2}};
  CHECK(n.is_regular());
}

TEST_CASE("max_solution_leq") {
  CHECK(max_solution_leq(kA, kP) == TropVector::column({1, 3, 2}));
  CHECK(max_solution_leq(TropMatrix::identity(3), kP) == kP);
  const TropMatrix not_col_regular{{1, -INFINITY}, {2, -INFINITY}};
  CHECK(code_of([&] { (void)max_solution_leq(not_col_regular, TropVector::column({1, 1})); }) ==
        Errc::not_column_regular);
  CHECK(code_of([&] { (void)max_solution_leq(kA, TropVector::column({1, -INFINITY, 1})); }) ==
        Errc::not_regular);
  CHECK(code_of([&] { (void)max_solution_leq(kA, TropVector::column({1, 1})); }) ==
        Errc::shape_mismatch);
}

TEST_CASE("max_solution_leq is feasible and dominates sampled solutions") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_int_matrix(rng, 4, 4, -5, 5, 0.25);
    const auto p = testing::random_int_vector(rng, 4, -5, 5);
    const auto best = max_solution_leq(a, p);
    CHECK(leq(a * best, p));
    int feasible = 0;
    for (int draw = 0; draw < 1000000 && feasible < 1000; ++draw) {
      // Integer box wide enough to contain the greatest solution.
      const auto x = testing::random_int_vector(rng, 4, -20, 12);
      if (!leq(a * x, p)) continue;
      ++feasible;
      CHECK(leq(x, best));
    }
    CHECK(feasible == 1000);
  }
}

TEST_CASE("antitone conjugation and the conjugate identities") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
    const auto x = testing::random_int_vector(rng, n, -10, 10);
    const auto y = testing::random_int_vector(rng, n, -10, 10);
    CHECK(leq(x, y) == leq(conjugate(y).transposed(), conjugate(x).transposed()));
    CHECK(conjugate(x) * x == Scalar::one());
    CHECK(leq(TropMatrix::identity(n), outer(x, conjugate(x))));
    CHECK(distance(x, y) == distance(y, x));
  }
}

TEST_CASE("distance equals the Chebyshev norm") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 1000; ++i) {
    const auto x = testing::random_real_vector(rng, 4, -50, 50);
    const auto y = testing::random_real_vector(rng, 4, -50, 50);
    double expected = 0;
    for (std::size_t k = 0; k < 4; ++k)
      expected = std::max(expected, std::abs(y[k].value() - x[k].value()));
    CHECK(std::abs(distance(x, y).value() - expected) <= 1e-12);
  }
}

TEST_CASE("matrix products are monotone") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 300; ++i) {
    const auto a = testing::random_int_matrix(rng, 3, 2, -5, 5, 0.3);
    const auto b = testing::random_int_matrix(rng, 2, 3, -5, 5, 0.3);
    const auto da = testing::random_int_matrix(rng, 3, 2, -5, 5, 0.3);
    const auto db = testing::random_int_matrix(rng, 2, 3, -5, 5, 0.3);
    const auto a2 = a + da, b2 = b + db;  // a <= a2, b <= b2
    CHECK(leq(a * b, a2 * b2));
  }
}

TEST_CASE("min-plus instance shares the algebra") {
  using V = BasicVector<MinPlus>;
  using M = BasicMatrix<MinPlus>;
  const M a{{0, 3}, {1, INFINITY}};
  const auto x = V::column({2, 0});
  CHECK(a * x == V::column({2, 3}));
  CHECK(distance(V::column({0, 0}), V::column({1, -3})) == Element<MinPlus>(-3));
}
