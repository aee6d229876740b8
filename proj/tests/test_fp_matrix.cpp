#include <doctest.h>

#include "pqm/fp_matrix.hpp"

using namespace pqm;

TEST_CASE("primality checks") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_THROWS_AS(MatrixFp(6, 1, 1), Error);
}

TEST_CASE("rank and kernel over small fields") {
    MatrixFp m(5, 2, 3);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(0, 2, 3);
    m.set(1, 0, 2);
    m.set(1, 1, 4);
    m.set(1, 2, 6);  // row 1 = 2 * row 0
    CHECK(rank(m) == 1);
    const MatrixFp k = kernel_basis(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());
}

TEST_CASE("kernel of an empty-row matrix is everything") {
    const MatrixFp m(2, 0, 3);
    const MatrixFp k = kernel_basis(m);
    CHECK(k == MatrixFp::identity(2, 3));
}

TEST_CASE("independent columns pick the leftmost basis") {
    MatrixFp m(2, 2, 3);
    m.set(0, 0, 1);
    m.set(0, 1, 1);  // duplicate of column 0
    m.set(1, 2, 1);
    CHECK(independent_columns(m) == std::vector<Nat>{0, 2});
}

TEST_CASE("solve consistent and inconsistent systems") {
    MatrixFp a(3, 2, 2);
    a.set(0, 0, 1);
    a.set(1, 1, 2);
    MatrixFp b(3, 2, 1);
    b.set(0, 0, 2);
    b.set(1, 0, 1);
    MatrixFp x;
    REQUIRE(solve(a, b, x));
    CHECK(a * x == b);

    MatrixFp bad(3, 2, 1);
    bad.set(0, 0, 1);
    MatrixFp singular(3, 2, 1);
    singular.set(0, 0, 1);
    singular.set(1, 0, 1);  // columns span only the diagonal line
    MatrixFp y;
    CHECK_FALSE(solve(singular, bad, y));
}

TEST_CASE("span tracker") {
    SpanFp span(2, 3);
    CHECK(span.add_if_independent({1, 0, 0}));
    CHECK(span.add_if_independent({1, 1, 0}));
    CHECK_FALSE(span.add_if_independent({0, 1, 0}));
    CHECK(span.contains({1, 1, 0}));
    CHECK_FALSE(span.contains({0, 0, 1}));
    CHECK(span.dim() == 2);
}

TEST_CASE("matrix product mod p") {
    MatrixFp a(3, 2, 2);
    a.set(0, 0, 2);
    a.set(0, 1, 1);
    a.set(1, 0, 1);
    a.set(1, 1, 2);
    const MatrixFp sq = a * a;
    CHECK(sq.at(0, 0) == 2);  // (4 + 1) mod 3
    CHECK(sq.at(0, 1) == 1);  // (2 + 2) mod 3
}
