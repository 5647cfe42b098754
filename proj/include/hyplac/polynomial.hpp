#pragma once

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hyplac/errors.hpp"
#include "hyplac/rational.hpp"

namespace hyplac {

/// Dense univariate polynomial over an exact commutative ring T. Coefficients
/// are stored low-degree first with no trailing zeros; the zero polynomial has
/// an empty coefficient vector and degree -1.
template <typename T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }
    static Poly identity_x() { return monomial(T(1), 1); }

    static Poly monomial(T coefficient, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coefficient);
        return Poly(std::move(c));
    }

    /// Expands prod (x - r) over the given roots.
    static Poly from_roots(const std::vector<T>& roots) {
        Poly p = constant(T(1));
        for (const T& r : roots) p = p * (identity_x() - constant(r));
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }

    const T& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const std::vector<T>& coefficients() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

    T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(c));
    }

    Poly operator-() const {
        std::vector<T> c = c_;
        for (auto& x : c) x = T(0) - x;
        return Poly(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    Poly scaled(const T& s) const {
        std::vector<T> c = c_;
        for (auto& x : c) x = x * s;
        return Poly(std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Division with remainder by a *monic* divisor. Needs no coefficient
    /// division, so it is valid over both Z and fields.
    static std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& d) {
        assert(d.is_monic());
        if (a.degree() < d.degree()) return {Poly(), a};
        std::vector<T> rem = a.c_;
        std::vector<T> quot(a.c_.size() - d.c_.size() + 1, T(0));
        for (std::size_t k = quot.size(); k-- > 0;) {
            T q = rem[k + d.c_.size() - 1];
            quot[k] = q;
            if (is_zero(q)) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= q * d.c_[j];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    /// Exact division by a monic divisor; faults if a remainder survives.
    static Poly div_exact_monic(const Poly& a, const Poly& d) {
        auto [q, r] = divrem_monic(a, d);
        if (!r.is_zero_poly()) fail(ErrorCode::InvalidInput, "polynomial division is not exact");
        return q;
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Division with remainder over a field (the divisor is rescaled to monic).
template <typename T>
std::pair<Poly<T>, Poly<T>> poly_divrem(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero_poly()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    T lead = b.leading();
    Poly<T> monic = b.scaled(T(1) / lead);
    auto [q, r] = Poly<T>::divrem_monic(a, monic);
    return {q.scaled(T(1) / lead), r};
}

/// Extended gcd over a field: returns (g, u, v) with u*a + v*b = g, g monic
/// (or zero when both inputs are zero).
template <typename T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> poly_extended_gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> u0 = Poly<T>::constant(T(1)), u1 = Poly<T>::zero();
    Poly<T> v0 = Poly<T>::zero(), v1 = Poly<T>::constant(T(1));
    while (!r1.is_zero_poly()) {
        auto [q, r] = poly_divrem(r0, r1);
        Poly<T> u2 = u0 - q * u1;
        Poly<T> v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero_poly()) return {r0, u0, v0};
    T lead = r0.leading();
    T inv = T(1) / lead;
    return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

}  // namespace hyplac
