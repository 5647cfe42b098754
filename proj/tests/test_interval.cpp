#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "hyplac/errors.hpp"
#include "hyplac/interval.hpp"

using namespace hyplac;

namespace {

bool interval_contains_mpfr(const Interval& iv, mpfr_srcptr x) {
    return mpfr_cmp(iv.lower(), x) <= 0 && mpfr_cmp(x, iv.upper()) <= 0;
}

Cyclotomic random_element(std::mt19937_64& rng, unsigned order) {
    Cyclotomic acc = Cyclotomic::zero(order);
    unsigned phi = CyclotomicField::of_order(order).degree();
    for (unsigned t = 0; t < phi; ++t) {
        long num = static_cast<long>(rng() % 5) - 2;
        acc += Cyclotomic(Rational(num, 1 + static_cast<long>(rng() % 3))) * root_of_unity(t, order);
    }
    return acc;
}

}  // namespace

TEST_CASE("embedding exact rationals is tight") {
    ComplexInterval one = complex_embed(Cyclotomic(1), 64);
    CHECK(one.re.certified_sign() == 1);
    CHECK(one.im.contains_zero());
    CHECK(one.re.width() < 9e-19);  // 2^-60
    CHECK(one.re.midpoint_approx() == doctest::Approx(1.0));
}

TEST_CASE("zeta_4 embeds as i") {
    ComplexInterval i4 = complex_embed(root_of_unity(1, 4), 64);
    CHECK(i4.re.contains_zero());
    CHECK(i4.im.certified_sign() == 1);
    CHECK(i4.im.midpoint_approx() == doctest::Approx(1.0));
}

TEST_CASE("zeta_8 + zeta_8^-1 encloses sqrt(2)") {
    Cyclotomic v = root_of_unity(1, 8) + root_of_unity(-1, 8);
    ComplexInterval e = complex_embed(v, 128);
    mpfr_t sqrt2;
    mpfr_init2(sqrt2, 256);
    mpfr_sqrt_ui(sqrt2, 2, MPFR_RNDN);
    CHECK(interval_contains_mpfr(e.re, sqrt2));
    CHECK(e.im.contains_zero());
    mpfr_clear(sqrt2);
    CHECK(certified_sign_real(v) == 1);
    CHECK(certified_sign_real(-v) == -1);
    CHECK(certified_sign_real(Cyclotomic::zero(8)) == 0);
}

TEST_CASE("widths shrink as precision doubles") {
    Rational turns(1, 7);
    double w64 = Interval::cos2pi(turns, 64).width();
    double w128 = Interval::cos2pi(turns, 128).width();
    CHECK(w128 <= w64 / 2);
    Cyclotomic v = root_of_unity(1, 7) + root_of_unity(3, 7);
    CHECK(complex_embed(v, 128).re.width() <= complex_embed(v, 64).re.width() / 2);
}

TEST_CASE("embedding respects arithmetic: embed(a*b) inside embed(a)*embed(b)") {
    std::mt19937_64 rng(2024u);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned order = 1 + static_cast<unsigned>(rng() % 16);
        Cyclotomic a = random_element(rng, order);
        Cyclotomic b = random_element(rng, order);
        ComplexInterval pa = complex_embed(a, 96);
        ComplexInterval pb = complex_embed(b, 96);
        ComplexInterval prod = pa * pb;
        ComplexInterval tight = complex_embed(a * b, 384);
        CHECK(prod.contains(tight));
        ComplexInterval sum = pa + pb;
        CHECK(sum.contains(complex_embed(a + b, 384)));
    }
}

TEST_CASE("interval multiplication covers sign combinations") {
    Interval m1 = Interval::exact_long(-3, 64);
    Interval p2 = Interval::exact_long(2, 64);
    Interval prod = m1 * p2;
    CHECK(prod.certified_sign() == -1);
    CHECK(prod.midpoint_approx() == doctest::Approx(-6.0));
    Interval span = (m1 + p2) * p2;  // [-1] * 2
    CHECK(span.midpoint_approx() == doctest::Approx(-2.0));
}
