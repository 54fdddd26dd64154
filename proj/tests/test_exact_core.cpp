#include <doctest.h>

#include <Eigen/Dense>

#include "helpers.hpp"

using namespace testing;

TEST_SUITE("exact_core") {
  TEST_CASE("rationals stay in lowest terms") {
    CHECK(Q(4, 6) == Q(2, 3));
    CHECK(Q(3, -6).str() == "-1/2");
    CHECK(Rational::parse(" 4/6 ") == Q(2, 3));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK((Q(1, 3) + Q(1, 6)).str() == "1/2");
    CHECK((Q(2, 3) * Q(3, 4)).str() == "1/2");
    CHECK(Q(1, 2) < Q(2, 3));
    CHECK(-Q(5, 7) == Q(-5, 7));
    CHECK(sign_pow(3) == Q(-1));
  }

  TEST_CASE("rational errors") {
    CHECK_THROWS_KIND(Q(1, 0), DivisionByZero);
    CHECK_THROWS_KIND(Q(1) / Q(0), DivisionByZero);
    CHECK_THROWS_KIND(Rational::parse("1/0"), Parse);
    CHECK_THROWS_KIND(Rational::parse("x"), Parse);
    CHECK_THROWS_KIND(Rational::parse("1/-2"), Parse);
  }

  TEST_CASE("big values do not overflow") {
    Rational x(1);
    for (int i = 0; i < 40; ++i) x *= Rational(1000003);
    Rational y = x / Rational(1000003);
    CHECK(y * Rational(1000003) == x);
    CHECK(x.num().get_str().size() > 200);
  }

  TEST_CASE("mat_inverse") {
    CHECK(mat_inverse(I(3)) == I(3));
    CHECK(mat_inverse(M({{0, 1}, {1, 0}})) == M({{0, 1}, {1, 0}}));
    Mat m = M({{2, 0}, {0, Q(1, 2)}});
    Mat inv = mat_inverse(m);
    CHECK(inv == M({{Q(1, 2), 0}, {0, 2}}));
    CHECK(Mat(mul(m, inv)) == I(2));
    CHECK_THROWS_KIND(mat_inverse(M({{1, 2}, {2, 4}})), SingularMatrix);
    CHECK_THROWS_KIND(mat_inverse(Mat::Zero(2, 3)), ShapeMismatch);
  }

  TEST_CASE("mat_kernel") {
    CHECK(mat_kernel(Mat::Zero(2, 2)).size() == 2);
    CHECK(mat_kernel(I(2)).empty());
    Mat m = M({{1, 1}, {1, 1}});
    auto k = mat_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(is_zero(mul(m, k[0])));
    CHECK(k[0](0) == -k[0](1));
    CHECK(!k[0](0).is_zero());
  }

  TEST_CASE("mat_rank and det") {
    CHECK(mat_rank(I(4)) == 4);
    CHECK(mat_rank(Mat::Zero(3, 3)) == 0);
    CHECK(mat_rank(M({{1, 2}, {2, 4}})) == 1);
    CHECK(mat_det(M({{1, 2}, {3, 4}})) == Q(-2));
    CHECK(mat_det(M({{0, 1}, {1, 0}})) == Q(-1));
  }

  TEST_CASE("kernels are generic in the scalar") {
    Eigen::MatrixXd d(2, 2);
    d << 1, 2, 2, 4;
    CHECK(mat_rank(d) == 1);
    CHECK(mat_kernel(d).size() == 1);
  }

  TEST_CASE("subspace helpers") {
    Basis a{V({1, 0, 0}), V({0, 1, 0})};
    Basis b{V({0, 1, 0}), V({0, 0, 1})};
    auto meet = intersect(a, b, 3);
    REQUIRE(meet.size() == 1);
    CHECK(meet[0] == V({0, 1, 0}));
    CHECK(in_span(a, V({2, -3, 0})));
    CHECK(!in_span(a, V({0, 0, 1})));
    CHECK(same_span(a, Basis{V({1, 1, 0}), V({1, -1, 0})}, 3));
    CHECK(coordinates(Basis{V({1, 1}), V({1, -1})}, V({3, 1})) == V({2, 1}));
    CHECK_THROWS_KIND(coordinates(a, V({0, 0, 1})), ShapeMismatch);
  }
}
