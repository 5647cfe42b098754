#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyplac/errors.hpp"

namespace hyplac {

using Integer = mpz_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

/// Exact rational scalar. Always stored canonically: gcd(|num|, den) = 1,
/// den >= 1. Equality is componentwise on (num, den).
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : value_(n) {}

    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Rational(const Integer& num, const Integer& den) {
        if (sgn(den) == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    /// Accepts "p", "-p", "p/q" with optional sign on p. Returns nullopt on
    /// malformed text; never throws on bad syntax.
    static std::optional<Rational> parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }

    /// Fractional part x - floor(x), always in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p" when integral, "p/q" otherwise; q always positive, gcd-reduced.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    const mpq_class& raw() const { return value_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
        return wrap(a.value_ / b.value_);
    }
    Rational operator-() const { return wrap(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    static Rational wrap(mpq_class q) {
        Rational r;
        r.value_ = std::move(q);  // gmp arithmetic keeps canonical form
        return r;
    }

    mpq_class value_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

/// lcm of the denominators of a set of rationals; at least 1.
Integer denominator_lcm(const std::vector<Rational>& values);

}  // namespace hyplac
