#include "hyplac/parabolic.hpp"

#include <algorithm>

#include "hyplac/errors.hpp"

namespace hyplac {

namespace {

void require_generic(const HypergeometricParameters& p) {
    if (!p.generic())
        fail(ErrorCode::NonGenericParameters, "repeated entries within alpha or beta: " + p.str());
}

}  // namespace

ParabolicBundle build_parabolic(const HypergeometricParameters& p) {
    require_generic(p);
    Rational g = gamma_sum(p);
    if (g < Rational(0))
        fail(ErrorCode::NeedsDualization, "gamma = " + g.str() + " < 0; analyze the dual tuple");
    const int n = p.rank();

    ParabolicBundle b;
    b.splitting_degrees.assign(static_cast<std::size_t>(n), -1);

    ParabolicPoint at_zero;
    at_zero.weights = p.alpha;  // sorted, distinct
    at_zero.multiplicities.assign(p.alpha.size(), 1);
    b.points[MarkedPoint::Zero] = std::move(at_zero);

    ParabolicPoint at_inf;
    for (const auto& beta : p.beta) at_inf.weights.push_back((Rational(1) - beta).frac());
    std::sort(at_inf.weights.begin(), at_inf.weights.end());
    at_inf.multiplicities.assign(at_inf.weights.size(), 1);
    b.points[MarkedPoint::Infinity] = std::move(at_inf);

    ParabolicPoint at_one;
    Rational w = g.frac();
    if (w.is_zero()) {
        at_one.weights = {Rational(0)};
        at_one.multiplicities = {n};
    } else if (n == 1) {
        at_one.weights = {w};
        at_one.multiplicities = {1};
    } else {
        at_one.weights = {Rational(0), w};
        at_one.multiplicities = {n - 1, 1};
    }
    b.points[MarkedPoint::One] = std::move(at_one);

    return b;
}

Rational parabolic_degree(const ParabolicBundle& b) {
    Rational d(b.degree());
    for (const auto& [point, data] : b.points) {
        (void)point;
        for (std::size_t i = 0; i < data.weights.size(); ++i)
            d += data.weights[i] * Rational(data.multiplicities[i]);
    }
    return d;
}

Rational parabolic_slope(const ParabolicBundle& b) {
    if (b.rank() == 0) fail(ErrorCode::InvalidInput, "slope of a rank-zero bundle");
    return parabolic_degree(b) / Rational(b.rank());
}

CandidateEvaluation candidate_degree(const HypergeometricParameters& p, const SubbundleCandidate& c) {
    require_generic(p);
    Rational g = gamma_sum(p);
    if (g < Rational(0))
        fail(ErrorCode::NeedsDualization, "candidate degrees are defined on sign-normalized parameters");
    if (g >= Rational(1))
        fail(ErrorCode::InvalidInput, "candidate degrees require gamma in [0,1), got " + g.str());

    const int n = p.rank();
    const auto& s = c.indices;
    if (s.empty() || static_cast<int>(s.size()) > n)
        fail(ErrorCode::InvalidCandidate, "candidate rank must be between 1 and n");
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] < 1 || s[j] > n || (j > 0 && s[j] <= s[j - 1]))
            fail(ErrorCode::InvalidCandidate, "indices must be strictly ascending within 1..n");
    }
    if (c.case_tag == CaseTag::CaseTwo && s[0] != 1)
        fail(ErrorCode::InvalidCandidate, "CaseTwo candidates must contain index 1");

    CandidateEvaluation eval;
    eval.degree = Rational(0);
    auto weight_at_infinity = [&](int beta_index) {  // 1-based
        return (Rational(1) - p.beta[static_cast<std::size_t>(beta_index - 1)]).frac();
    };

    if (c.case_tag == CaseTag::CaseOne) {
        for (int i : s) {
            const Rational& a = p.alpha[static_cast<std::size_t>(i - 1)];
            const Rational& b = p.beta[static_cast<std::size_t>(i - 1)];
            eval.degree += a - b;
            eval.weights_at_zero.push_back(a);
            eval.weights_at_infinity.push_back(weight_at_infinity(i));
        }
    } else {
        const int k = static_cast<int>(s.size());
        eval.degree = Rational(-k) + g;
        eval.degree += p.alpha[0];
        eval.weights_at_zero.push_back(p.alpha[0]);
        eval.degree += Rational(1) - p.beta[static_cast<std::size_t>(n - 1)];
        eval.weights_at_infinity.push_back(weight_at_infinity(n));
        for (std::size_t j = 1; j < s.size(); ++j) {
            const Rational& a = p.alpha[static_cast<std::size_t>(s[j] - 1)];
            eval.degree += a;
            eval.weights_at_zero.push_back(a);
            eval.degree += Rational(1) - p.beta[static_cast<std::size_t>(s[j] - 2)];
            eval.weights_at_infinity.push_back(weight_at_infinity(s[j] - 1));
        }
        eval.weights_at_one.push_back(g.frac());
    }
    std::sort(eval.weights_at_infinity.begin(), eval.weights_at_infinity.end());
    return eval;
}

StabilityResult is_stable(const HypergeometricParameters& p) {
    require_generic(p);
    if (!is_irreducible(p)) fail(ErrorCode::Reducible, "alpha and beta intersect: " + p.str());

    StabilityResult result;
    HypergeometricParameters q = p;
    if (gamma_sum(q) < Rational(0)) {
        q = dual(q);
        result.analyzed_dual = true;
    }
    if (gamma_sum(q) < Rational(0)) {
        // Mod-1 dualization misses the sign flip exactly when beta contains 0;
        // the puncture swap reaches the same local system with gamma in (0,1)
        // and no zero beta, where the candidate formulas are the bundle
        // degrees.
        q = swap_punctures(q);
        result.analyzed_swap = true;
    }
    Rational g = gamma_sum(q);
    result.gamma_analyzed = g;
    result.analyzed = q;
    if (g >= Rational(1)) {
        result.verdict = StabilityVerdict::Unstable;
        result.normalization_witness = true;
        return result;
    }

    const int n = q.rank();
    if (n > 24)
        fail(ErrorCode::InvalidInput,
             "stability enumeration inspects 2^n subsets; rank " + std::to_string(n) + " > 24 unsupported");
    std::optional<Rational> best_degree;
    SubbundleCandidate best_candidate;

    auto consider = [&](CaseTag tag, const std::vector<int>& indices) {
        SubbundleCandidate cand{tag, indices};
        Rational degree = candidate_degree(q, cand).degree;
        bool better = false;
        if (!best_degree) {
            better = true;
        } else if (degree > *best_degree) {
            better = true;
        } else if (degree == *best_degree) {
            if (cand.rank() < best_candidate.rank())
                better = true;
            else if (cand.rank() == best_candidate.rank() && cand.indices < best_candidate.indices)
                better = true;
        }
        if (better) {
            best_degree = degree;
            best_candidate = std::move(cand);
        }
    };

    const unsigned full = (1u << n) - 1u;
    std::vector<int> indices;
    for (unsigned mask = 1; mask < full; ++mask) {  // proper nonempty subsets
        indices.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) indices.push_back(i + 1);
        consider(CaseTag::CaseOne, indices);
        if (mask & 1u) consider(CaseTag::CaseTwo, indices);
    }

    if (!best_degree) {
        // n = 1 has no proper subbundles at all.
        result.verdict = StabilityVerdict::Stable;
        return result;
    }
    if (*best_degree < Rational(0)) {
        result.verdict = StabilityVerdict::Stable;
    } else if (best_degree->is_zero()) {
        result.verdict = StabilityVerdict::StrictlySemistable;
        result.witness = best_candidate;
        result.witness_degree = best_degree;
    } else {
        result.verdict = StabilityVerdict::Unstable;
        result.witness = best_candidate;
        result.witness_degree = best_degree;
    }
    return result;
}

const char* to_string(StabilityVerdict v) {
    switch (v) {
        case StabilityVerdict::Stable: return "stable";
        case StabilityVerdict::StrictlySemistable: return "strictly_semistable";
        case StabilityVerdict::Unstable: return "unstable";
    }
    return "?";
}

}  // namespace hyplac
