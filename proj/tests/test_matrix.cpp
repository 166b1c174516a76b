#include <doctest.h>

#include "oqho/errors.hpp"
#include "oqho/matrix.hpp"
#include "oqho/model.hpp"
#include "testutil.hpp"

using namespace oqho;

TEST_CASE("matrix product against hand-computed values") {
    const RealMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    const RealMatrix b{{0.0, 1.0}, {1.0, 0.0}};
    const RealMatrix c = a * b;
    CHECK(c(0, 0) == 2.0);
    CHECK(c(0, 1) == 1.0);
    CHECK(c(1, 0) == 4.0);
    CHECK(c(1, 1) == 3.0);
    CHECK_THROWS_AS(a * RealMatrix(3, 3), DimensionError);
}

TEST_CASE("kron builds the canonical field structure") {
    const RealMatrix j = kron(bj(), RealMatrix::identity(2));
    CHECK(j.rows() == 4);
    CHECK(j(0, 2) == 1.0);
    CHECK(j(1, 3) == 1.0);
    CHECK(j(2, 0) == -1.0);
    CHECK(j(3, 1) == -1.0);
    CHECK(max_abs(j * j + RealMatrix::identity(4)) == 0.0);
}

TEST_CASE("frobenius norm of half bj kron identity") {
    const RealMatrix theta = canonical_theta(4);
    CHECK(frobenius_norm(theta) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("block assembly round trips") {
    auto gen = test::rng(3);
    const RealMatrix a = test::random_matrix(gen, 2, 2);
    const RealMatrix b = test::random_matrix(gen, 2, 3);
    const RealMatrix c = test::random_matrix(gen, 4, 2);
    const RealMatrix d = test::random_matrix(gen, 4, 3);
    const RealMatrix m = block2x2(a, b, c, d);
    CHECK(max_abs(subblock(m, 0, 0, 2, 2) - a) == 0.0);
    CHECK(max_abs(subblock(m, 0, 2, 2, 3) - b) == 0.0);
    CHECK(max_abs(subblock(m, 2, 0, 4, 2) - c) == 0.0);
    CHECK(max_abs(subblock(m, 2, 2, 4, 3) - d) == 0.0);
}

TEST_CASE("complex adjoint and column access") {
    ComplexMatrix m(2, 2);
    m(0, 1) = Complex(1.0, 2.0);
    const ComplexMatrix ma = m.adjoint();
    CHECK(ma(1, 0) == Complex(1.0, -2.0));
    auto col = m.column(1);
    CHECK(col[0] == Complex(1.0, 2.0));
}
