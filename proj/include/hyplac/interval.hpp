#pragma once

#include <mpfr.h>

#include "hyplac/cyclotomic.hpp"
#include "hyplac/rational.hpp"

namespace hyplac {

/// Closed real interval with MPFR endpoints and directed rounding. Every
/// operation returns an enclosure of the exact result; decisions are only
/// taken from sign-definite intervals.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other);
    ~Interval();

    static Interval exact_long(long v, mpfr_prec_t prec);
    static Interval from_rational(const Rational& q, mpfr_prec_t prec);
    /// cos(2*pi*turns) and sin(2*pi*turns) for rational turns.
    static Interval cos2pi(const Rational& turns, mpfr_prec_t prec);
    static Interval sin2pi(const Rational& turns, mpfr_prec_t prec);

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval operator-() const;

    bool contains_zero() const;
    /// +1 if the whole interval is positive, -1 if negative, 0 if undecided.
    int certified_sign() const;

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }
    double width() const;
    double midpoint_approx() const;

private:
    void set_endpoints_exact_long(long v);
    static Interval trig2pi(const Rational& turns, mpfr_prec_t prec, bool cosine);

    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

struct ComplexInterval {
    Interval re;
    Interval im;

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    bool contains(const ComplexInterval& inner) const;
};

/// Guaranteed enclosure of the image of `a` under zeta_N |-> exp(2*pi*i/N).
ComplexInterval complex_embed(const Cyclotomic& a, mpfr_prec_t precision_bits);

inline constexpr mpfr_prec_t kSignPrecisionLimit = 4096;

/// Certified sign of a conjugation-fixed (real) cyclotomic number. Returns 0
/// for the exact zero element; otherwise refines precision by doubling from
/// 64 up to `max_bits` and reports PrecisionExhausted if still ambiguous.
int certified_sign_real(const Cyclotomic& value, mpfr_prec_t max_bits = kSignPrecisionLimit);

}  // namespace hyplac
