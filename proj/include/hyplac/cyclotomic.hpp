#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyplac/errors.hpp"
#include "hyplac/polynomial.hpp"
#include "hyplac/rational.hpp"

namespace hyplac {

/// Euler totient.
unsigned totient(unsigned n);

/// Ascending units of (Z/nZ)^x, i.e. all h in [1, n] with gcd(h, n) = 1.
/// For n = 1 this is {1}.
std::vector<unsigned> units_mod(unsigned n);

/// The N-th cyclotomic polynomial Phi_N over Z, memoized. Degree phi(N).
const Poly<Integer>& cyclotomic_polynomial(unsigned n);

/// Shared immutable context for one Q(zeta_N): the minimal polynomial and a
/// table of x^k mod Phi_N rows used by multiplication, powers and Galois
/// substitution. Instances are interned per order and live forever.
class CyclotomicField {
public:
    static constexpr unsigned kMaxOrder = 1024;

    static const CyclotomicField& of_order(unsigned n);

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }
    const Poly<Integer>& minimal_polynomial() const { return minimal_; }

    /// Coefficients of x^k mod Phi_N in the power basis; valid for
    /// 0 <= k < max(N, 2*phi(N) - 1).
    const std::vector<Integer>& power_row(unsigned k) const { return rows_[k]; }

private:
    explicit CyclotomicField(unsigned n);

    unsigned order_;
    unsigned degree_;
    Poly<Integer> minimal_;
    std::vector<std::vector<Integer>> rows_;
};

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
/// Representation is canonical (always reduced mod Phi_N), so equality at a
/// common order is componentwise. Arithmetic between different orders
/// promotes both operands into Q(zeta_lcm).
class Cyclotomic {
public:
    Cyclotomic() : field_(&CyclotomicField::of_order(1)), coeff_(1, Rational(0)) {}
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(const Rational& v) : field_(&CyclotomicField::of_order(1)), coeff_(1, v) {}

    static Cyclotomic zero(unsigned order);
    static Cyclotomic one(unsigned order);

    unsigned order() const { return field_->order(); }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const;
    /// True when all coefficients above the constant one vanish.
    bool is_rational() const;
    /// The constant coefficient; only meaningful when is_rational().
    const Rational& rational_part() const { return coeff_[0]; }

    /// Image in Q(zeta_M); requires order() | M.
    Cyclotomic promoted(unsigned m) const;

    Cyclotomic inverse() const;
    /// Galois substitution zeta |-> zeta^h; requires gcd(h, N) = 1.
    Cyclotomic galois(unsigned h) const;
    /// Complex conjugation on the distinguished embedding: zeta |-> zeta^{-1}.
    Cyclotomic conjugate() const { return galois(order() == 1 ? 1 : order() - 1); }
    Cyclotomic pow(long k) const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic operator-() const;

    Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
    Cyclotomic& operator-=(const Cyclotomic& o) { *this = *this - o; return *this; }
    Cyclotomic& operator*=(const Cyclotomic& o) { *this = *this * o; return *this; }
    Cyclotomic& operator/=(const Cyclotomic& o) { *this = *this / o; return *this; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Canonical text form, e.g. "1/2 - z^2 @8" (z = zeta_8). Used for
    /// diagnostics and as a deduplication key.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

    friend Cyclotomic root_of_unity(long k, unsigned n);

private:
    Cyclotomic(const CyclotomicField* field, std::vector<Rational> coeff)
        : field_(field), coeff_(std::move(coeff)) {}

    /// Reduce a convolution of length <= 2*phi-1 into the power basis.
    static Cyclotomic reduce(const CyclotomicField& field, std::vector<Rational> conv);

    const CyclotomicField* field_;
    std::vector<Rational> coeff_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

/// zeta_N^{k mod N}, reduced mod Phi_N.
Cyclotomic root_of_unity(long k, unsigned n);

/// e^{2 pi i q} for rational q; lands in Q(zeta_N) for N = den(q) unless a
/// larger order is requested via `order` (0 = use den(q)).
Cyclotomic unit_circle_point(const Rational& q, unsigned order = 0);

}  // namespace hyplac
