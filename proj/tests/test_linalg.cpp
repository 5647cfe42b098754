#include <doctest.h>

#include <random>

#include "hyplac/errors.hpp"
#include "hyplac/matrices.hpp"

using namespace hyplac;

namespace {

RatMatrix random_rational_matrix(std::mt19937_64& rng, Index n) {
    RatMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
    return m;
}

}  // namespace

TEST_CASE("identity: rank n, determinant 1") {
    RatMatrix id(3, 3);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) id(i, j) = Rational(i == j ? 1 : 0);
    CHECK(exact::rank(id) == 3);
    CHECK(exact::determinant(id) == Rational(1));
}

TEST_CASE("companion matrix has its polynomial as characteristic polynomial") {
    Poly<Rational> p(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});  // t^2 - 1
    RatMatrix c = exact::companion(p);
    CHECK(exact::characteristic_polynomial(c) == p);

    Poly<Cyclotomic> q(std::vector<Cyclotomic>{root_of_unity(1, 3), Cyclotomic(2), Cyclotomic(1)});
    CycMatrix cc = exact::companion(q);
    CHECK(exact::characteristic_polynomial(cc) == q);
}

TEST_CASE("inverse and solve over the rationals") {
    std::mt19937_64 rng(99u);
    int done = 0;
    while (done < 10) {
        RatMatrix m = random_rational_matrix(rng, 4);
        if (exact::determinant(m).is_zero()) continue;
        ++done;
        RatMatrix inv = exact::inverse(m);
        RatMatrix prod = m * inv;
        for (Index i = 0; i < 4; ++i)
            for (Index j = 0; j < 4; ++j) CHECK(prod(i, j) == Rational(i == j ? 1 : 0));

        RatVector b(4);
        for (Index i = 0; i < 4; ++i) b(i) = Rational(static_cast<long>(rng() % 7) - 3);
        RatVector x = exact::solve(m, b);
        RatVector mx = m * x;
        for (Index i = 0; i < 4; ++i) CHECK(mx(i) == b(i));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(7u);
    for (int trial = 0; trial < 10; ++trial) {
        RatMatrix a = random_rational_matrix(rng, 3);
        RatMatrix b = random_rational_matrix(rng, 3);
        CHECK(exact::determinant(RatMatrix(a * b)) == exact::determinant(a) * exact::determinant(b));
    }
}

TEST_CASE("singular matrices are detected exactly") {
    RatMatrix m(2, 2);
    m(0, 0) = Rational(1, 3);
    m(0, 1) = Rational(2, 3);
    m(1, 0) = Rational(1, 6);
    m(1, 1) = Rational(1, 3);
    CHECK(exact::determinant(m).is_zero());
    CHECK(exact::rank(m) == 1);
    CHECK_THROWS_AS(exact::inverse(m), Error);
}

TEST_CASE("null space dimension complements the rank") {
    RatMatrix m(2, 4);
    for (Index j = 0; j < 4; ++j) {
        m(0, j) = Rational(static_cast<long>(j + 1));
        m(1, j) = Rational(static_cast<long>(2 * (j + 1)));  // dependent row
    }
    RatMatrix basis = exact::null_space(m);
    CHECK(basis.cols() == 3);
    RatMatrix image = m * basis;
    for (Index i = 0; i < image.rows(); ++i)
        for (Index j = 0; j < image.cols(); ++j) CHECK(image(i, j).is_zero());
}

TEST_CASE("exact elimination over a cyclotomic field") {
    CycMatrix m(2, 2);
    m(0, 0) = root_of_unity(1, 8);
    m(0, 1) = Cyclotomic(1) + root_of_unity(1, 8);
    m(1, 0) = Cyclotomic(2);
    m(1, 1) = root_of_unity(3, 8);
    Cyclotomic det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    CHECK(exact::determinant(m) == det);
    if (!det.is_zero()) {
        CycMatrix inv = exact::inverse(m);
        CHECK(matrices_equal(CycMatrix(m * inv), cyc_identity(2, 8)));
    }
}

TEST_CASE("kronecker product shape and entries") {
    RatMatrix a(2, 2), b(2, 2);
    a(0, 0) = Rational(1); a(0, 1) = Rational(2);
    a(1, 0) = Rational(0); a(1, 1) = Rational(1);
    b(0, 0) = Rational(3); b(0, 1) = Rational(0);
    b(1, 0) = Rational(1); b(1, 1) = Rational(1);
    RatMatrix k = exact::kronecker(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == Rational(6));  // a(0,1) * b(0,0)
    CHECK(k(3, 3) == Rational(1));
}
