#pragma once

#include <optional>
#include <vector>

#include "hyplac/parameters.hpp"

namespace hyplac {

enum class InterlacingPattern { AlphaFirst, BetaFirst };

struct InterlacingVerdict {
    bool holds = false;
    std::optional<InterlacingPattern> pattern;
    /// Index (0-based) of the first adjacent pair in the sorted merge that
    /// breaks strict alternation; set exactly when !holds.
    std::optional<int> failure_position;
};

/// Strict alternation of the two sorted families in [0,1). Cross-family
/// collisions (alpha_i = beta_j) make alternation impossible and are reported
/// as a failure at the collision position.
InterlacingVerdict interlaces(const HypergeometricParameters& p);

/// The tuple normalize(h*alpha, h*beta), realizing zeta_N |-> zeta_N^h on all
/// eigenvalue exponents; requires gcd(h, N) = 1.
HypergeometricParameters galois_conjugate(const HypergeometricParameters& p, long h);

/// Interlacing on p; asserted against the stability enumeration (the two
/// routes must agree exactly).
bool is_unitary(const HypergeometricParameters& p);

struct GaloisOrbitEntry {
    unsigned unit = 1;
    HypergeometricParameters conjugated;
    InterlacingVerdict verdict;
};

struct GaloisOrbitReport {
    unsigned conductor = 1;
    std::vector<GaloisOrbitEntry> entries;  // ascending unit order
    bool all_interlace = false;
    std::optional<unsigned> first_failing_unit;
};

struct FiniteMonodromyResult {
    bool finite = false;
    GaloisOrbitReport report;
};

/// Interlacing of every Galois conjugate h in (Z/NZ)^x.
FiniteMonodromyResult has_finite_monodromy(const HypergeometricParameters& p);

const char* to_string(InterlacingPattern p);

}  // namespace hyplac
