#pragma once

#include <string>
#include <vector>

#include "hyplac/cyclotomic.hpp"
#include "hyplac/rational.hpp"

namespace hyplac {

/// Hypergeometric parameter tuple (alpha, beta), stored normalized: every
/// entry reduced mod 1 into [0,1) and each family sorted ascending. The tuple
/// is "generic" when both families are duplicate-free; non-generic tuples are
/// representable but the unitary/stability analysis refuses them.
struct HypergeometricParameters {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    int rank() const { return static_cast<int>(alpha.size()); }
    bool generic() const;

    bool operator==(const HypergeometricParameters& other) const {
        return alpha == other.alpha && beta == other.beta;
    }

    std::string str() const;
};

/// Mod-1 reduction and ascending sort of both families; the canonical
/// representative of the isomorphism class.
HypergeometricParameters normalize(const std::vector<Rational>& raw_alpha,
                                   const std::vector<Rational>& raw_beta);

/// True iff no alpha_j equals any beta_k (integer-difference condition after
/// normalization).
bool is_irreducible(const HypergeometricParameters& p);

/// gamma = sum(beta) - sum(alpha), exact.
Rational gamma_sum(const HypergeometricParameters& p);

/// The dual tuple normalize(1 - alpha, 1 - beta).
HypergeometricParameters dual(const HypergeometricParameters& p);

/// Pullback under z -> 1/z, which trades the punctures 0 and infinity:
/// normalize(-beta, -alpha). Same rigid local system in the coordinate where
/// the exponent roles are exchanged; interlacing is invariant.
HypergeometricParameters swap_punctures(const HypergeometricParameters& p);

/// lcm of all entry denominators; the conductor N with every local eigenvalue
/// in Q(zeta_N).
Integer splitting_field_order(const HypergeometricParameters& p);

/// splitting_field_order as unsigned, for cyclotomic construction.
unsigned splitting_field_order_ui(const HypergeometricParameters& p);

/// Katz index (2-3)n^2 + n + n + ((n-1)^2 + 1); equals 2 for every n >= 1.
int rigidity_index(int n);

struct LocalMonodromySpec {
    std::vector<Cyclotomic> eigenvalues_at_zero;      // e^{2 pi i alpha_j}
    std::vector<Cyclotomic> eigenvalues_at_infinity;  // e^{-2 pi i beta_j}
    Cyclotomic special_eigenvalue_at_one;             // e^{2 pi i gamma}
    Rational gamma;
    unsigned order = 1;  // common cyclotomic order N
};

LocalMonodromySpec local_monodromy_spec(const HypergeometricParameters& p);

}  // namespace hyplac
