#pragma once

#include <vector>

#include "hyplac/parameters.hpp"
#include "hyplac/rational.hpp"

namespace hyplac {

/// Rising factorial q(q+1)...(q+k-1); empty product is 1.
Rational pochhammer(const Rational& q, unsigned k);

struct TruncatedSeries {
    std::vector<Rational> coefficients;  // c_0 .. c_K
    unsigned truncation_order = 0;       // K
};

/// Exact coefficients c_k = prod (alpha_i)_k / (prod (beta_j)_k * k!) of the
/// nFn-1 series, with n numerator and n-1 denominator parameters.
TruncatedSeries series_coefficients(const std::vector<Rational>& alpha,
                                    const std::vector<Rational>& beta, unsigned order);

struct SeriesParameters {
    std::vector<Rational> alpha;  // n entries
    std::vector<Rational> beta;   // n-1 entries
};

/// Converts a symmetric n/n tuple to nFn-1 form by dropping one beta equal to
/// zero (the beta = 1 normalization mod 1); fails when none exists.
SeriesParameters to_series_parameters(const HypergeometricParameters& p);

struct AnnihilationResult {
    bool annihilated = false;
    /// residuals[k-1] is the coefficient of z^k in the image, k = 1..K; the
    /// z^{K+1} coefficient is a truncation artifact and excluded.
    std::vector<Rational> residuals;
};

/// Residual coefficients of z^1..z^K of the operator image of an arbitrary
/// truncated series (soundness probes perturb one coefficient and expect a
/// nonzero residual).
std::vector<Rational> operator_residuals(const std::vector<Rational>& alpha,
                                         const std::vector<Rational>& beta,
                                         const TruncatedSeries& series);

/// Applies D prod(D + beta_j - 1) - z prod(D + alpha_i) formally to the
/// truncated series, with D acting as z d/dz.
AnnihilationResult operator_annihilation_check(const std::vector<Rational>& alpha,
                                               const std::vector<Rational>& beta, unsigned order);

}  // namespace hyplac
