#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hyplac/parameters.hpp"
#include "hyplac/rational.hpp"

namespace hyplac {

enum class MarkedPoint { Zero, One, Infinity };

/// Weighted flag data at one marked point, flags recorded by multiplicities
/// only: weights strictly increasing in [0,1), multiplicities summing to the
/// bundle rank.
struct ParabolicPoint {
    std::vector<Rational> weights;
    std::vector<int> multiplicities;
};

struct ParabolicBundle {
    std::vector<int> splitting_degrees;  // Birkhoff-Grothendieck degrees
    std::map<MarkedPoint, ParabolicPoint> points;

    int rank() const { return static_cast<int>(splitting_degrees.size()); }
    long degree() const {
        long d = 0;
        for (int x : splitting_degrees) d += x;
        return d;
    }
};

enum class CaseTag { CaseOne, CaseTwo };

/// Rank-k destabilizing candidate: a sorted index subset S of {1..n} into the
/// sorted parameter lists. CaseTwo candidates contain index 1 (they attain
/// the nonzero weight at the point 1).
struct SubbundleCandidate {
    CaseTag case_tag = CaseTag::CaseOne;
    std::vector<int> indices;  // 1-based, strictly ascending

    int rank() const { return static_cast<int>(indices.size()); }
    bool operator==(const SubbundleCandidate& o) const {
        return case_tag == o.case_tag && indices == o.indices;
    }
};

/// The bundle O(-1)^n with weights alpha at 0, (1-beta) mod 1 at infinity,
/// and {frac(gamma), 0^(n-1)} at 1. Requires generic parameters and
/// gamma >= 0 (callers dualize first otherwise).
ParabolicBundle build_parabolic(const HypergeometricParameters& p);

/// deg E plus the multiplicity-weighted sum of all weights.
Rational parabolic_degree(const ParabolicBundle& b);

/// parabolic degree / rank.
Rational parabolic_slope(const ParabolicBundle& b);

struct CandidateEvaluation {
    Rational degree;
    std::vector<Rational> weights_at_zero;
    std::vector<Rational> weights_at_infinity;
    std::vector<Rational> weights_at_one;  // the nonzero weight only, when attained
};

/// Exact parabolic degree of the maximal rank-k candidate described by c.
/// CaseOne: sum over S of (alpha_i - beta_i). CaseTwo with S = {1, i_2..i_k}:
/// -k + alpha_1 + sum alpha_{i_j} + (1 - beta_n) + sum (1 - beta_{i_j - 1}) + gamma.
CandidateEvaluation candidate_degree(const HypergeometricParameters& p, const SubbundleCandidate& c);

enum class StabilityVerdict { Stable, StrictlySemistable, Unstable };

struct StabilityResult {
    StabilityVerdict verdict = StabilityVerdict::Stable;
    /// True when gamma(p) < 0 and the enumeration ran on dual(p).
    bool analyzed_dual = false;
    /// True when the dual still had gamma < 0 (one beta entry is 0) and the
    /// enumeration ran on the puncture swap, which lands in gamma in (0,1)
    /// with no zero beta.
    bool analyzed_swap = false;
    /// True when gamma >= 1 after sign normalization forced Unstable without
    /// any enumeration (the parabolic degree is already negative there).
    bool normalization_witness = false;
    /// The tuple the candidates were enumerated on; witness indices refer to
    /// its sorted lists.
    HypergeometricParameters analyzed;
    Rational gamma_analyzed;
    std::optional<SubbundleCandidate> witness;
    std::optional<Rational> witness_degree;
};

/// Full enumeration of CaseOne (nonempty proper subsets) and CaseTwo (proper
/// subsets containing 1) candidates on the sign-normalized parameters.
/// Stable iff every candidate degree is negative; StrictlySemistable iff the
/// maximum is exactly zero; Unstable otherwise with an argmax witness (ties:
/// smallest rank, then lexicographically smallest indices).
StabilityResult is_stable(const HypergeometricParameters& p);

const char* to_string(StabilityVerdict v);

}  // namespace hyplac
