#include "hyplac/interlacing.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyplac/errors.hpp"
#include "hyplac/parabolic.hpp"

namespace hyplac {

InterlacingVerdict interlaces(const HypergeometricParameters& p) {
    if (!p.generic())
        fail(ErrorCode::NonGenericParameters, "interlacing needs distinct entries within each family");

    // Stable merge of the two sorted families, remembering which family each
    // value came from (false = alpha, true = beta).
    struct Tagged {
        const Rational* value;
        bool from_beta;
    };
    std::vector<Tagged> merged;
    merged.reserve(p.alpha.size() + p.beta.size());
    std::size_t i = 0, j = 0;
    while (i < p.alpha.size() || j < p.beta.size()) {
        if (j == p.beta.size() || (i < p.alpha.size() && p.alpha[i] <= p.beta[j]))
            merged.push_back({&p.alpha[i++], false});
        else
            merged.push_back({&p.beta[j++], true});
    }

    InterlacingVerdict verdict;
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        bool same_family = merged[k].from_beta == merged[k + 1].from_beta;
        bool collision = *merged[k].value == *merged[k + 1].value;
        if (same_family || collision) {
            verdict.holds = false;
            verdict.failure_position = static_cast<int>(k);
            return verdict;
        }
    }
    verdict.holds = true;
    verdict.pattern = merged.front().from_beta ? InterlacingPattern::BetaFirst : InterlacingPattern::AlphaFirst;
    return verdict;
}

HypergeometricParameters galois_conjugate(const HypergeometricParameters& p, long h) {
    Integer n = splitting_field_order(p);
    Integer hg;
    Integer hz(h);
    mpz_gcd(hg.get_mpz_t(), hz.get_mpz_t(), n.get_mpz_t());
    if (hg != 1)
        fail(ErrorCode::NotAUnit,
             "h = " + std::to_string(h) + " is not a unit mod N = " + n.get_str());
    Rational factor(h);
    std::vector<Rational> a, b;
    a.reserve(p.alpha.size());
    b.reserve(p.beta.size());
    for (const auto& x : p.alpha) a.push_back(x * factor);
    for (const auto& x : p.beta) b.push_back(x * factor);
    return normalize(a, b);
}

bool is_unitary(const HypergeometricParameters& p) {
    if (!p.generic()) fail(ErrorCode::NonGenericParameters, "unitarity needs generic parameters");
    if (!is_irreducible(p)) fail(ErrorCode::Reducible, "unitarity analysis needs alpha and beta disjoint");
    bool by_interlacing = interlaces(p).holds;
    bool by_stability = is_stable(p).verdict == StabilityVerdict::Stable;
    if (by_interlacing != by_stability)
        throw std::logic_error("interlacing and stability enumeration disagree on " + p.str());
    return by_interlacing;
}

FiniteMonodromyResult has_finite_monodromy(const HypergeometricParameters& p) {
    if (!p.generic()) fail(ErrorCode::NonGenericParameters, "finiteness analysis needs generic parameters");
    if (!is_irreducible(p)) fail(ErrorCode::Reducible, "finiteness analysis needs alpha and beta disjoint");

    FiniteMonodromyResult result;
    Integer n_big = splitting_field_order(p);
    if (!n_big.fits_uint_p())
        fail(ErrorCode::InvalidInput, "conductor " + n_big.get_str() + " is too large to enumerate units");
    unsigned n = static_cast<unsigned>(n_big.get_ui());
    result.report.conductor = n;
    result.finite = true;
    for (unsigned h : units_mod(n)) {
        GaloisOrbitEntry entry;
        entry.unit = h;
        entry.conjugated = galois_conjugate(p, static_cast<long>(h));
        entry.verdict = interlaces(entry.conjugated);
        if (!entry.verdict.holds && !result.report.first_failing_unit) {
            result.report.first_failing_unit = h;
            result.finite = false;
        }
        result.report.entries.push_back(std::move(entry));
    }
    result.report.all_interlace = result.finite;
    return result;
}

const char* to_string(InterlacingPattern p) {
    return p == InterlacingPattern::AlphaFirst ? "alpha_first" : "beta_first";
}

}  // namespace hyplac
