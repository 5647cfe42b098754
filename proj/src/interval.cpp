#include "hyplac/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hyplac {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) {
    std::swap(prec_, other.prec_);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Interval::set_endpoints_exact_long(long v) {
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval Interval::exact_long(long v, mpfr_prec_t prec) {
    Interval out(prec);
    out.set_endpoints_exact_long(v);
    return out;
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    return out;
}

// Enclosure of f(2*pi*turns) for f with |f'| <= 1 (sin or cos): evaluate at
// the rounded-down angle and widen by the angle enclosure width plus the
// evaluation rounding, both of order 2^-prec.
Interval Interval::trig2pi(const Rational& turns, mpfr_prec_t prec, bool cosine) {
    Rational r = turns.frac();
    // Quarter turns have exact endpoints; handling them here keeps exact
    // zeros out of the widened generic path.
    if (r == Rational(0)) return Interval::exact_long(cosine ? 1 : 0, prec);
    if (r == Rational(1, 4)) return Interval::exact_long(cosine ? 0 : 1, prec);
    if (r == Rational(1, 2)) return Interval::exact_long(cosine ? -1 : 0, prec);
    if (r == Rational(3, 4)) return Interval::exact_long(cosine ? 0 : -1, prec);

    Interval out(prec);
    mpfr_t pi_lo, pi_hi, th_lo, th_hi, value, slack;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, value, slack, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    Rational two_r = Rational(2) * r;  // in (0, 2)
    mpfr_mul_q(th_lo, pi_lo, two_r.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(th_hi, pi_hi, two_r.raw().get_mpq_t(), MPFR_RNDU);

    if (cosine)
        mpfr_cos(value, th_lo, MPFR_RNDN);
    else
        mpfr_sin(value, th_lo, MPFR_RNDN);

    // slack = (th_hi - th_lo) + 2^(1-prec), rounded up
    mpfr_sub(slack, th_hi, th_lo, MPFR_RNDU);
    mpfr_t ulp;
    mpfr_init2(ulp, prec);
    mpfr_set_ui_2exp(ulp, 1, 1 - prec, MPFR_RNDU);
    mpfr_add(slack, slack, ulp, MPFR_RNDU);

    mpfr_sub(out.lo_, value, slack, MPFR_RNDD);
    mpfr_add(out.hi_, value, slack, MPFR_RNDU);

    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, value, slack, static_cast<mpfr_ptr>(nullptr));
    mpfr_clear(ulp);
    return out;
}

Interval Interval::cos2pi(const Rational& turns, mpfr_prec_t prec) { return trig2pi(turns, prec, true); }
Interval Interval::sin2pi(const Rational& turns, mpfr_prec_t prec) { return trig2pi(turns, prec, false); }

Interval operator+(const Interval& a, const Interval& b) {
    Interval out(std::max(a.prec_, b.prec_));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval out(std::max(a.prec_, b.prec_));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
}

Interval Interval::operator-() const {
    Interval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval operator*(const Interval& a, const Interval& b) {
    Interval out(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, out.prec_);
    mpfr_srcptr xs[2] = {a.lo_, a.hi_};
    mpfr_srcptr ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return out;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

int Interval::certified_sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
}

double Interval::midpoint_approx() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

bool ComplexInterval::contains(const ComplexInterval& inner) const {
    return mpfr_cmp(re.lower(), inner.re.lower()) <= 0 && mpfr_cmp(inner.re.upper(), re.upper()) <= 0 &&
           mpfr_cmp(im.lower(), inner.im.lower()) <= 0 && mpfr_cmp(inner.im.upper(), im.upper()) <= 0;
}

ComplexInterval complex_embed(const Cyclotomic& a, mpfr_prec_t precision_bits) {
    const unsigned n = a.order();
    ComplexInterval acc{Interval(precision_bits), Interval(precision_bits)};
    const auto& coeff = a.coefficients();
    for (unsigned t = 0; t < coeff.size(); ++t) {
        if (coeff[t].is_zero()) continue;
        Interval c = Interval::from_rational(coeff[t], precision_bits);
        Rational turns(static_cast<long>(t), static_cast<long>(n));
        acc.re = acc.re + c * Interval::cos2pi(turns, precision_bits);
        acc.im = acc.im + c * Interval::sin2pi(turns, precision_bits);
    }
    return acc;
}

int certified_sign_real(const Cyclotomic& value, mpfr_prec_t max_bits) {
    if (value.is_zero()) return 0;
    for (mpfr_prec_t bits = 64; bits <= max_bits; bits *= 2) {
        ComplexInterval e = complex_embed(value, bits);
        if (!e.im.contains_zero())
            throw std::logic_error("certified_sign_real applied to a non-real cyclotomic number");
        int s = e.re.certified_sign();
        if (s != 0) return s;
    }
    fail(ErrorCode::PrecisionExhausted,
         "sign still ambiguous at " + std::to_string(max_bits) + " bits");
}

}  // namespace hyplac
