#include "hyplac/parameters.hpp"

#include <algorithm>
#include <sstream>

#include "hyplac/errors.hpp"

namespace hyplac {

bool HypergeometricParameters::generic() const {
    auto has_duplicate = [](const std::vector<Rational>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1]) return true;
        return false;
    };
    return !has_duplicate(alpha) && !has_duplicate(beta);
}

std::string HypergeometricParameters::str() const {
    std::ostringstream os;
    os << "alpha=(";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i].str();
    os << "), beta=(";
    for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i].str();
    os << ")";
    return os.str();
}

HypergeometricParameters normalize(const std::vector<Rational>& raw_alpha,
                                   const std::vector<Rational>& raw_beta) {
    if (raw_alpha.empty() || raw_alpha.size() != raw_beta.size())
        fail(ErrorCode::InvalidInput,
             "alpha and beta must have equal nonzero length (got " + std::to_string(raw_alpha.size()) +
                 " and " + std::to_string(raw_beta.size()) + ")");
    HypergeometricParameters p;
    p.alpha.reserve(raw_alpha.size());
    p.beta.reserve(raw_beta.size());
    for (const auto& a : raw_alpha) p.alpha.push_back(a.frac());
    for (const auto& b : raw_beta) p.beta.push_back(b.frac());
    std::sort(p.alpha.begin(), p.alpha.end());
    std::sort(p.beta.begin(), p.beta.end());
    return p;
}

bool is_irreducible(const HypergeometricParameters& p) {
    // Both families are sorted; a single merge pass finds collisions.
    std::size_t i = 0, j = 0;
    while (i < p.alpha.size() && j < p.beta.size()) {
        if (p.alpha[i] == p.beta[j]) return false;
        if (p.alpha[i] < p.beta[j])
            ++i;
        else
            ++j;
    }
    return true;
}

Rational gamma_sum(const HypergeometricParameters& p) {
    Rational g(0);
    for (const auto& b : p.beta) g += b;
    for (const auto& a : p.alpha) g -= a;
    return g;
}

HypergeometricParameters dual(const HypergeometricParameters& p) {
    std::vector<Rational> a, b;
    a.reserve(p.alpha.size());
    b.reserve(p.beta.size());
    for (const auto& x : p.alpha) a.push_back(Rational(1) - x);
    for (const auto& x : p.beta) b.push_back(Rational(1) - x);
    return normalize(a, b);
}

HypergeometricParameters swap_punctures(const HypergeometricParameters& p) {
    std::vector<Rational> a, b;
    a.reserve(p.beta.size());
    b.reserve(p.alpha.size());
    for (const auto& x : p.beta) a.push_back(-x);
    for (const auto& x : p.alpha) b.push_back(-x);
    return normalize(a, b);
}

Integer splitting_field_order(const HypergeometricParameters& p) {
    Integer l = denominator_lcm(p.alpha);
    Integer m = denominator_lcm(p.beta);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.get_mpz_t());
    return l;
}

unsigned splitting_field_order_ui(const HypergeometricParameters& p) {
    Integer n = splitting_field_order(p);
    if (!n.fits_uint_p())
        fail(ErrorCode::InvalidInput, "conductor " + n.get_str() + " is too large");
    return static_cast<unsigned>(n.get_ui());
}

int rigidity_index(int n) {
    if (n < 1) fail(ErrorCode::InvalidInput, "rank must be >= 1");
    // dim Z = n at 0 and infinity, (n-1)^2 + 1 at 1.
    return (2 - 3) * n * n + n + n + ((n - 1) * (n - 1) + 1);
}

LocalMonodromySpec local_monodromy_spec(const HypergeometricParameters& p) {
    LocalMonodromySpec spec;
    unsigned n = splitting_field_order_ui(p);
    spec.order = n;
    spec.gamma = gamma_sum(p);
    for (const auto& a : p.alpha) spec.eigenvalues_at_zero.push_back(unit_circle_point(a, n));
    for (const auto& b : p.beta) spec.eigenvalues_at_infinity.push_back(unit_circle_point(-b, n));
    spec.special_eigenvalue_at_one = unit_circle_point(spec.gamma, n);
    return spec;
}

}  // namespace hyplac
