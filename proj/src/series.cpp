#include "hyplac/series.hpp"

#include <algorithm>

#include "hyplac/errors.hpp"

namespace hyplac {

Rational pochhammer(const Rational& q, unsigned k) {
    Rational acc(1);
    Rational term = q;
    for (unsigned i = 0; i < k; ++i) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

namespace {

void check_denominator_parameters(const std::vector<Rational>& beta) {
    for (const auto& b : beta)
        if (b.is_integer() && b.sign() <= 0)
            fail(ErrorCode::PoleInDenominatorParameters,
                 "denominator parameter " + b.str() + " is a nonpositive integer");
}

}  // namespace

TruncatedSeries series_coefficients(const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta, unsigned order) {
    check_denominator_parameters(beta);
    TruncatedSeries s;
    s.truncation_order = order;
    s.coefficients.reserve(order + 1);
    Rational c(1);
    s.coefficients.push_back(c);
    for (unsigned k = 0; k < order; ++k) {
        Rational num(1), den(1);
        for (const auto& a : alpha) num *= a + Rational(static_cast<long>(k));
        for (const auto& b : beta) den *= b + Rational(static_cast<long>(k));
        den *= Rational(static_cast<long>(k) + 1);
        c = c * num / den;
        s.coefficients.push_back(c);
    }
    return s;
}

SeriesParameters to_series_parameters(const HypergeometricParameters& p) {
    auto zero_at = std::find(p.beta.begin(), p.beta.end(), Rational(0));
    if (zero_at == p.beta.end())
        fail(ErrorCode::NotSeriesNormalizable,
             "no beta entry equals 0 (mod 1); tuple has no nFn-1 normalization: " + p.str());
    SeriesParameters out;
    out.alpha = p.alpha;
    for (auto it = p.beta.begin(); it != p.beta.end(); ++it)
        if (it != zero_at) out.beta.push_back(*it);
    return out;
}

std::vector<Rational> operator_residuals(const std::vector<Rational>& alpha,
                                         const std::vector<Rational>& beta,
                                         const TruncatedSeries& series) {
    const unsigned order = series.truncation_order;
    std::vector<Rational> residuals;
    residuals.reserve(order);
    // With D z^k = k z^k, the z^k coefficient of the image is
    // c_k * k * prod(k + beta_j - 1) - c_{k-1} * prod(k - 1 + alpha_i).
    for (unsigned k = 1; k <= order; ++k) {
        Rational left = series.coefficients[k] * Rational(static_cast<long>(k));
        for (const auto& b : beta) left *= b + Rational(static_cast<long>(k) - 1);
        Rational right = series.coefficients[k - 1];
        for (const auto& a : alpha) right *= a + Rational(static_cast<long>(k) - 1);
        residuals.push_back(left - right);
    }
    return residuals;
}

AnnihilationResult operator_annihilation_check(const std::vector<Rational>& alpha,
                                               const std::vector<Rational>& beta, unsigned order) {
    TruncatedSeries s = series_coefficients(alpha, beta, order);
    AnnihilationResult result;
    result.residuals = operator_residuals(alpha, beta, s);
    result.annihilated = true;
    for (const auto& r : result.residuals)
        if (!r.is_zero()) result.annihilated = false;
    return result;
}

}  // namespace hyplac
