// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is taken from argv[1] or $HYPLAC_BIN.
//
//  1. stability <=> interlacing, exhaustive n=2 den<=8 plus random n in {3,4,5}
//  2. parabolic degree convention (0, or -#{beta_i = 0})
//  3. Katz rigidity sum from exact centralizers
//  4. local monodromy of the Levelt triple (char polys, pseudoreflection, det)
//  5. group closure finiteness <=> Galois interlacing, n=2, conductor <= 8
//  6. invariant Hermitian form: dimension 1, definite <=> interlacing
//  7. operator annihilation at K=50, conductor <= 12, n <= 3
//  8. CLI byte determinism across runs and job counts

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyplac/errors.hpp"
#include "hyplac/interlacing.hpp"
#include "hyplac/interval.hpp"
#include "hyplac/monodromy.hpp"
#include "hyplac/parabolic.hpp"
#include "hyplac/parallel.hpp"
#include "hyplac/parameters.hpp"
#include "hyplac/report.hpp"
#include "hyplac/series.hpp"

using namespace hyplac;

namespace {

int failures = 0;

void report(int index, const std::string& label, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s — %s\n", pass ? "PASS" : "FAIL", index, label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::vector<int>> combinations(int total, int choose) {
    std::vector<std::vector<int>> out;
    if (choose > total || choose <= 0) return out;
    std::vector<int> idx(static_cast<std::size_t>(choose));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        out.push_back(idx);
        int i = choose - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == total - choose + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < choose; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Every generic irreducible tuple with both families drawn from `pool`.
std::vector<HypergeometricParameters> exhaustive_tuples(const std::vector<Rational>& pool, int rank) {
    std::vector<HypergeometricParameters> out;
    auto subsets = combinations(static_cast<int>(pool.size()), rank);
    for (const auto& ia : subsets) {
        for (const auto& ib : subsets) {
            bool disjoint = true;
            for (int x : ia)
                for (int y : ib)
                    if (x == y) disjoint = false;
            if (!disjoint) continue;
            HypergeometricParameters p;
            for (int k : ia) p.alpha.push_back(pool[static_cast<std::size_t>(k)]);
            for (int k : ib) p.beta.push_back(pool[static_cast<std::size_t>(k)]);
            out.push_back(std::move(p));
        }
    }
    return out;
}

unsigned tuple_conductor(const HypergeometricParameters& p) {
    Integer n = splitting_field_order(p);
    return n.fits_uint_p() ? static_cast<unsigned>(n.get_ui()) : 0;
}

HypergeometricParameters random_tuple(std::mt19937_64& rng, int rank, const std::vector<Rational>& pool) {
    std::vector<int> indices(static_cast<int>(pool.size()));
    std::iota(indices.begin(), indices.end(), 0);
    std::shuffle(indices.begin(), indices.end(), rng);
    HypergeometricParameters p;
    for (int i = 0; i < rank; ++i) p.alpha.push_back(pool[static_cast<std::size_t>(indices[i])]);
    for (int i = rank; i < 2 * rank; ++i) p.beta.push_back(pool[static_cast<std::size_t>(indices[i])]);
    std::sort(p.alpha.begin(), p.alpha.end());
    std::sort(p.beta.begin(), p.beta.end());
    return p;
}

std::string run_command(const std::string& command) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return "<popen failed>";
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    pclose(pipe);
    return output;
}

// --------------------------------------------------------------------------

void criterion_1_and_2(const std::vector<HypergeometricParameters>& suite) {
    auto start = std::chrono::steady_clock::now();
    std::atomic<long> mismatches{0};
    std::atomic<long> degree_checks{0}, degree_failures{0};

    parallel_for(suite.size(), 0, [&](std::size_t i) {
        const auto& p = suite[i];
        try {
            bool stable = is_stable(p).verdict == StabilityVerdict::Stable;
            bool inter = interlaces(p).holds;
            if (stable != inter) ++mismatches;
            Rational g = gamma_sum(p);
            if (g >= Rational(0) && g < Rational(1)) {
                long zero_betas = std::count(p.beta.begin(), p.beta.end(), Rational(0));
                if (!(parabolic_degree(build_parabolic(p)) == Rational(-zero_betas))) ++degree_failures;
                ++degree_checks;
            }
        } catch (const std::exception&) {
            ++mismatches;
        }
    });

    std::mt19937_64 rng(20240811u);
    std::vector<Rational> pool24 = fractions_up_to(24);
    long random_checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int rank = 3 + static_cast<int>(rng() % 3);
        HypergeometricParameters p = random_tuple(rng, rank, pool24);
        if (!is_irreducible(p)) continue;  // distinct draw makes this unreachable, kept for clarity
        bool stable = is_stable(p).verdict == StabilityVerdict::Stable;
        bool inter = interlaces(p).holds;
        if (stable != inter) ++mismatches;
        Rational g = gamma_sum(p);
        if (g >= Rational(0) && g < Rational(1)) {
            long zero_betas = std::count(p.beta.begin(), p.beta.end(), Rational(0));
            if (!(parabolic_degree(build_parabolic(p)) == Rational(-zero_betas))) ++degree_failures;
            ++degree_checks;
        }
        ++random_checked;
    }

    std::ostringstream d1;
    d1 << suite.size() << " exhaustive n=2 tuples (den<=8) + " << random_checked
       << " random n in {3,4,5} (den<=24), mismatches=" << mismatches.load() << ", " << seconds_since(start)
       << "s";
    report(1, "stability <=> interlacing (subset enumeration vs strict alternation)", mismatches == 0,
           d1.str());

    std::ostringstream d2;
    d2 << degree_checks.load()
       << " bundles with gamma in [0,1), exact pardeg mismatches=" << degree_failures.load();
    report(2, "parabolic degree is 0 (or -#{beta_i=0} in the degenerate convention)", degree_failures == 0,
           d2.str());
}

void criterion_3_and_4() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77190u);
    long katz_failures = 0, local_failures = 0, checked = 0;
    while (checked < 100) {
        int rank = 1 + static_cast<int>(rng() % 4);
        unsigned conductor = 2 + static_cast<unsigned>(rng() % 11);  // 2..12
        if (conductor < static_cast<unsigned>(2 * rank)) continue;
        std::vector<Rational> pool;
        for (unsigned k = 0; k < conductor; ++k)
            pool.emplace_back(static_cast<long>(k), static_cast<long>(conductor));
        HypergeometricParameters p = random_tuple(rng, rank, pool);
        if (!is_irreducible(p)) continue;
        ++checked;

        MonodromyTriple t = levelt_generators(p);
        int n = p.rank();
        int katz = -n * n + centralizer_dimension(t.g0) + centralizer_dimension(t.g1) +
                   centralizer_dimension(t.g_inf);
        if (katz != 2 || katz != rigidity_index(n)) ++katz_failures;

        LocalMonodromySpec spec = local_monodromy_spec(p);
        Poly<Cyclotomic> pa = Poly<Cyclotomic>::from_roots(spec.eigenvalues_at_zero);
        Poly<Cyclotomic> pinf = Poly<Cyclotomic>::from_roots(spec.eigenvalues_at_infinity);
        bool good = exact::characteristic_polynomial(t.g0) == pa &&
                    exact::characteristic_polynomial(t.g_inf) == pinf && is_pseudoreflection(t.g1) &&
                    special_eigenvalue(t.g1) == spec.special_eigenvalue_at_one;
        if (!good) ++local_failures;
    }
    std::ostringstream d3;
    d3 << "100 random irreducible tuples, n<=4, N<=12, failures=" << katz_failures << ", "
       << seconds_since(start) << "s";
    report(3, "Katz rigidity: -n^2 + sum dim Z(g) = 2 = rigidity_index(n)", katz_failures == 0, d3.str());
    std::ostringstream d4;
    d4 << "same sample, failures=" << local_failures;
    report(4, "local monodromy: char polys, rank(g1 - I) = 1, det(g1) = e^(2 pi i gamma)", local_failures == 0,
           d4.str());
}

void criterion_5_and_6(const std::vector<HypergeometricParameters>& suite) {
    auto start = std::chrono::steady_clock::now();

    std::vector<HypergeometricParameters> tuples;
    for (const auto& p : suite) {
        unsigned n = tuple_conductor(p);
        if (n >= 1 && n <= 8) tuples.push_back(p);
    }

    std::atomic<long> closure_mismatches{0}, anchor_failures{0};
    std::atomic<long> hermitian_failures{0}, precision_exhausted{0};
    HypergeometricParameters anchor =
        normalize({Rational(0), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)});

    parallel_for(tuples.size(), 0, [&](std::size_t i) {
        const auto& p = tuples[i];
        try {
            MonodromyTriple t = levelt_generators(p);
            GroupClosureResult closure = group_closure(t, 100000);
            bool galois_finite = has_finite_monodromy(p).finite;
            if (closure.finite != galois_finite) ++closure_mismatches;
            if (p == anchor && (!closure.finite || closure.order != 8)) ++anchor_failures;

            bool inter = interlaces(p).holds;
            HermitianFormResult h = invariant_hermitian_form(t);
            bool definite = h.signature && (h.signature->second == 0 || h.signature->first == 0);
            bool indefinite_11 = h.signature && h.signature->first == 1 && h.signature->second == 1;
            if (h.solution_dimension != 1 || definite != inter || (!inter && !indefinite_11))
                ++hermitian_failures;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::PrecisionExhausted)
                ++precision_exhausted;
            else
                ++closure_mismatches;
        } catch (const std::exception&) {
            ++closure_mismatches;
        }
    });

    std::ostringstream d5;
    d5 << tuples.size() << " tuples (n=2, N<=8), bound=100000, mismatches=" << closure_mismatches.load()
       << ", anchor order-8 failures=" << anchor_failures.load() << ", " << seconds_since(start) << "s";
    report(5, "group closure finite <=> Galois interlacing verdict",
           closure_mismatches == 0 && anchor_failures == 0, d5.str());

    std::ostringstream d6;
    d6 << "solution_dimension=1 everywhere, definite <=> interlacing, indefinite (1,1) otherwise; failures="
       << hermitian_failures.load() << ", PrecisionExhausted=" << precision_exhausted.load();
    report(6, "invariant Hermitian form agrees with the unitarity verdict",
           hermitian_failures == 0 && precision_exhausted == 0, d6.str());
}

void criterion_7() {
    auto start = std::chrono::steady_clock::now();

    // All sorted distinct families with a beta = 0, conductor <= 12, n <= 3.
    std::set<std::string> seen;
    std::vector<SeriesParameters> cases;
    for (unsigned conductor = 1; conductor <= 12; ++conductor) {
        std::vector<Rational> pool;
        for (unsigned k = 0; k < conductor; ++k)
            pool.emplace_back(static_cast<long>(k), static_cast<long>(conductor));
        for (int rank = 1; rank <= 3; ++rank) {
            if (static_cast<unsigned>(rank) > conductor) continue;
            auto alpha_sets = combinations(static_cast<int>(pool.size()), rank);
            auto beta_sets = combinations(static_cast<int>(pool.size()) - 1, rank - 1);
            if (rank == 1) beta_sets.push_back({});  // beta = (0) alone
            for (const auto& ia : alpha_sets) {
                for (const auto& ib : beta_sets) {
                    HypergeometricParameters p;
                    for (int k : ia) p.alpha.push_back(pool[static_cast<std::size_t>(k)]);
                    p.beta.push_back(Rational(0));
                    for (int k : ib) p.beta.push_back(pool[static_cast<std::size_t>(k) + 1]);
                    if (!seen.insert(p.str()).second) continue;
                    cases.push_back(to_series_parameters(p));
                }
            }
        }
    }

    std::atomic<long> annihilation_failures{0};
    parallel_for(cases.size(), 0, [&](std::size_t i) {
        try {
            if (!operator_annihilation_check(cases[i].alpha, cases[i].beta, 50).annihilated)
                ++annihilation_failures;
        } catch (const std::exception&) {
            ++annihilation_failures;
        }
    });

    // Soundness probe: a perturbed coefficient must produce a residual at z^3.
    std::vector<Rational> a{Rational(1, 2), Rational(1, 2)}, b{Rational(1)};
    TruncatedSeries s = series_coefficients(a, b, 50);
    s.coefficients[3] += Rational(1);
    std::vector<Rational> residuals = operator_residuals(a, b, s);
    bool probe_ok = !residuals[2].is_zero();

    std::ostringstream d7;
    d7 << cases.size() << " tuples (n<=3, conductor<=12, K=50), failures=" << annihilation_failures.load()
       << ", perturbation probe " << (probe_ok ? "detects" : "MISSES") << " the defect, "
       << seconds_since(start) << "s";
    report(7, "hypergeometric operator annihilates the truncated series exactly",
           annihilation_failures == 0 && probe_ok, d7.str());
}

void criterion_8(const std::string& cli) {
    auto start = std::chrono::steady_clock::now();
    std::string analyze_cmd = cli + " analyze --alpha 0,1/2 --beta 1/4,3/4 --oracle";
    std::string a1 = run_command(analyze_cmd);
    std::string a2 = run_command(analyze_cmd);
    bool analyze_ok = !a1.empty() && a1 == a2;

    std::string s1 = run_command(cli + " scan --n 2 --max-denominator 6 --jobs 1");
    std::string s2 = run_command(cli + " scan --n 2 --max-denominator 6 --jobs 2");
    std::string s4 = run_command(cli + " scan --n 2 --max-denominator 6 --jobs 4");
    bool scan_ok = !s1.empty() && s1 == s2 && s1 == s4;

    std::ostringstream d8;
    d8 << "analyze bytes " << (analyze_ok ? "stable" : "UNSTABLE") << "; scan (--n 2 --max-denominator 6) "
       << s1.size() << " bytes, identical across --jobs {1,2,4}: " << (scan_ok ? "yes" : "no") << ", "
       << seconds_since(start) << "s";
    report(8, "CLI determinism: byte-identical reports and CSV across runs and job counts",
           analyze_ok && scan_ok, d8.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    if (argc > 1) cli = argv[1];
    if (cli.empty()) {
        const char* env = std::getenv("HYPLAC_BIN");
        if (env) cli = env;
    }

    std::vector<Rational> pool8 = fractions_up_to(8);
    std::vector<HypergeometricParameters> suite = exhaustive_tuples(pool8, 2);

    criterion_1_and_2(suite);
    criterion_3_and_4();
    criterion_5_and_6(suite);
    criterion_7();
    if (cli.empty()) {
        report(8, "CLI determinism", false, "no CLI path given (argv[1] or $HYPLAC_BIN)");
    } else {
        criterion_8(cli);
    }

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
