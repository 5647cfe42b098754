#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyplac/interlacing.hpp"
#include "hyplac/monodromy.hpp"
#include "hyplac/parabolic.hpp"
#include "hyplac/parameters.hpp"

namespace hyplac {

inline constexpr const char* kSchema = "hyplac/1";
inline constexpr const char* kVersion = "0.1.0";

/// Comma-separated "p/q" fractions; parse failures name the offending token
/// and its 1-based position within the flag's list.
std::vector<Rational> parse_fraction_list(const std::string& text, const std::string& flag_name);

struct AnalyzeOptions {
    std::string alpha_text;
    std::string beta_text;
    bool implicit_beta_one = false;
    bool run_oracle = false;
    std::uint64_t closure_bound = 100000;
    bool strict = false;
    int json_indent = 2;
};

struct OracleSummary {
    bool triple_consistent = false;
    int katz_sum = 0;
    int hermitian_solution_dimension = 0;
    std::optional<std::pair<int, int>> hermitian_signature;
    GroupClosureResult closure;
};

struct AnalysisReport {
    std::string alpha_echo;
    std::string beta_echo;
    bool implicit_beta_one = false;
    HypergeometricParameters params;
    Integer conductor;
    Rational gamma;
    bool generic = false;
    bool irreducible = false;
    int rigidity = 2;
    std::optional<InterlacingVerdict> interlacing;      // needs generic
    std::optional<StabilityResult> stability;           // needs generic + irreducible
    std::optional<FiniteMonodromyResult> finiteness;    // needs generic + irreducible
    bool oracle_requested = false;
    std::optional<OracleSummary> oracle;                // set iff requested and computable
};

/// Runs the full pipeline: normalize, irreducibility, gamma, interlacing,
/// stability enumeration, Galois finiteness, and optionally the exact
/// monodromy oracle.
AnalysisReport analyze(const AnalyzeOptions& options);

nlohmann::ordered_json report_to_json(const AnalysisReport& report);

struct ScanOptions {
    int rank = 1;
    unsigned max_denominator = 1;
    unsigned jobs = 0;  // 0 = hardware concurrency
    bool orbit_dedup = false;
    bool include_reducible = false;
};

/// Deterministic CSV sweep over all canonical tuples with entry denominators
/// up to the limit; byte-identical output for any job count.
void run_scan(const ScanOptions& options, std::ostream& out);

/// All fractions p/q in [0,1) with q <= max_denominator, ascending.
std::vector<Rational> fractions_up_to(unsigned max_denominator);

}  // namespace hyplac
