#include "hyplac/report.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hyplac/errors.hpp"
#include "hyplac/parallel.hpp"

namespace hyplac {

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

std::string join_fractions(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += values[i].str();
    }
    return out;
}

}  // namespace

std::vector<Rational> parse_fraction_list(const std::string& text, const std::string& flag_name) {
    std::vector<Rational> out;
    auto tokens = split_list(text);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto value = Rational::parse(tokens[i]);
        if (!value)
            fail(ErrorCode::InvalidInput, "invalid fraction '" + tokens[i] + "' at position " +
                                              std::to_string(i + 1) + " of " + flag_name);
        out.push_back(*value);
    }
    return out;
}

AnalysisReport analyze(const AnalyzeOptions& options) {
    AnalysisReport report;
    report.alpha_echo = options.alpha_text;
    report.beta_echo = options.beta_text;
    report.implicit_beta_one = options.implicit_beta_one;
    report.oracle_requested = options.run_oracle;

    std::vector<Rational> alpha = parse_fraction_list(options.alpha_text, "--alpha");
    std::vector<Rational> beta = parse_fraction_list(options.beta_text, "--beta");
    if (options.implicit_beta_one) beta.push_back(Rational(0));

    report.params = normalize(alpha, beta);
    report.conductor = splitting_field_order(report.params);
    report.gamma = gamma_sum(report.params);
    report.generic = report.params.generic();
    report.irreducible = is_irreducible(report.params);
    report.rigidity = rigidity_index(report.params.rank());

    if (report.generic) report.interlacing = interlaces(report.params);
    if (report.generic && report.irreducible) {
        report.stability = is_stable(report.params);
        report.finiteness = has_finite_monodromy(report.params);
    }

    if (options.run_oracle && report.irreducible) {
        OracleSummary oracle;
        MonodromyTriple triple = levelt_generators(report.params);
        LocalMonodromySpec spec = local_monodromy_spec(report.params);
        // Product/charpoly/pseudoreflection identities are verified inside
        // levelt_generators; the special eigenvalue closes the loop.
        oracle.triple_consistent = special_eigenvalue(triple.g1) == spec.special_eigenvalue_at_one;
        int n = report.params.rank();
        oracle.katz_sum = -n * n + centralizer_dimension(triple.g0) + centralizer_dimension(triple.g1) +
                          centralizer_dimension(triple.g_inf);
        try {
            HermitianFormResult h = invariant_hermitian_form(triple);
            oracle.hermitian_solution_dimension = h.solution_dimension;
            oracle.hermitian_signature = h.signature;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoInvariantForm) throw;
            oracle.hermitian_solution_dimension = 0;
        }
        oracle.closure = group_closure(triple, options.closure_bound);
        report.oracle = std::move(oracle);
    }
    return report;
}

namespace {

nlohmann::ordered_json fractions_json(const std::vector<Rational>& values) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

nlohmann::ordered_json interlacing_json(const InterlacingVerdict& v) {
    nlohmann::ordered_json j;
    j["holds"] = v.holds;
    j["pattern"] = v.pattern ? nlohmann::ordered_json(to_string(*v.pattern)) : nlohmann::ordered_json(nullptr);
    j["failure_position"] =
        v.failure_position ? nlohmann::ordered_json(*v.failure_position) : nlohmann::ordered_json(nullptr);
    return j;
}

nlohmann::ordered_json stability_json(const StabilityResult& s) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(s.verdict);
    j["analyzed_dual"] = s.analyzed_dual;
    j["analyzed_swap"] = s.analyzed_swap;
    if (s.analyzed_dual || s.analyzed_swap)
        j["analyzed"] = {{"alpha", fractions_json(s.analyzed.alpha)}, {"beta", fractions_json(s.analyzed.beta)}};
    j["gamma_analyzed"] = s.gamma_analyzed.str();
    if (s.normalization_witness) {
        j["witness"] = {{"kind", "normalization"}, {"gamma", s.gamma_analyzed.str()}};
    } else if (s.witness) {
        nlohmann::ordered_json w;
        w["kind"] = "candidate";
        w["case"] = s.witness->case_tag == CaseTag::CaseOne ? "case_one" : "case_two";
        w["indices"] = s.witness->indices;
        w["degree"] = s.witness_degree->str();
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json galois_json(const FiniteMonodromyResult& f) {
    nlohmann::ordered_json j;
    j["conductor"] = f.report.conductor;
    nlohmann::ordered_json units = nlohmann::ordered_json::array();
    for (const auto& entry : f.report.entries) units.push_back(entry.unit);
    j["units"] = units;
    j["all_interlace"] = f.report.all_interlace;
    if (f.report.first_failing_unit) {
        j["first_failing_unit"] = *f.report.first_failing_unit;
        for (const auto& entry : f.report.entries) {
            if (entry.unit == *f.report.first_failing_unit) {
                j["first_failing_conjugate"] = {{"alpha", fractions_json(entry.conjugated.alpha)},
                                                {"beta", fractions_json(entry.conjugated.beta)}};
                break;
            }
        }
    } else {
        j["first_failing_unit"] = nullptr;
        j["first_failing_conjugate"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json oracle_json(const OracleSummary& o) {
    nlohmann::ordered_json j;
    j["triple_consistent"] = o.triple_consistent;
    j["katz_sum"] = o.katz_sum;
    j["hermitian_solution_dimension"] = o.hermitian_solution_dimension;
    if (o.hermitian_signature)
        j["hermitian_signature"] = {o.hermitian_signature->first, o.hermitian_signature->second};
    else
        j["hermitian_signature"] = nullptr;
    if (o.closure.finite)
        j["closure"] = o.closure.order;
    else
        j["closure"] = "exceeded(" + std::to_string(o.closure.bound) + ")";
    return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const AnalysisReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = kSchema;
    j["version"] = kVersion;
    j["input_echo"] = {{"alpha", report.alpha_echo},
                       {"beta", report.beta_echo},
                       {"implicit_beta_one", report.implicit_beta_one}};
    j["alpha"] = fractions_json(report.params.alpha);
    j["beta"] = fractions_json(report.params.beta);
    j["n"] = report.params.rank();
    if (report.conductor.fits_ulong_p())
        j["N"] = static_cast<std::uint64_t>(report.conductor.get_ui());
    else
        j["N"] = report.conductor.get_str();
    j["gamma"] = report.gamma.str();
    j["generic"] = report.generic;
    j["irreducible"] = report.irreducible;
    j["rigidity_index"] = report.rigidity;
    j["interlacing"] = report.interlacing ? interlacing_json(*report.interlacing) : nlohmann::ordered_json(nullptr);
    j["stability"] = report.stability ? stability_json(*report.stability) : nlohmann::ordered_json(nullptr);
    j["galois"] = report.finiteness ? galois_json(*report.finiteness) : nlohmann::ordered_json(nullptr);
    j["finite_monodromy"] =
        report.finiteness ? nlohmann::ordered_json(report.finiteness->finite) : nlohmann::ordered_json(nullptr);
    if (report.oracle_requested)
        j["oracle"] = report.oracle ? oracle_json(*report.oracle) : nlohmann::ordered_json(nullptr);
    return j;
}

std::vector<Rational> fractions_up_to(unsigned max_denominator) {
    std::vector<Rational> out;
    for (unsigned q = 1; q <= max_denominator; ++q)
        for (unsigned p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(static_cast<long>(p), static_cast<long>(q));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

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

bool tuple_less(const HypergeometricParameters& a, const HypergeometricParameters& b) {
    if (a.alpha != b.alpha)
        return std::lexicographical_compare(a.alpha.begin(), a.alpha.end(), b.alpha.begin(), b.alpha.end());
    return std::lexicographical_compare(a.beta.begin(), a.beta.end(), b.beta.begin(), b.beta.end());
}

bool is_orbit_minimum(const HypergeometricParameters& p) {
    Integer n_big = splitting_field_order(p);
    if (!n_big.fits_uint_p()) fail(ErrorCode::InvalidInput, "conductor too large for orbit dedup");
    unsigned n = static_cast<unsigned>(n_big.get_ui());
    for (unsigned h : units_mod(n)) {
        if (h == 1) continue;
        if (tuple_less(galois_conjugate(p, static_cast<long>(h)), p)) return false;
    }
    return true;
}

std::string scan_row(const HypergeometricParameters& p) {
    std::ostringstream row;
    row << '"' << join_fractions(p.alpha) << "\",\"" << join_fractions(p.beta) << "\",";
    row << gamma_sum(p).str() << ',';
    InterlacingVerdict inter = interlaces(p);
    row << (inter.holds ? "true" : "false") << ',';
    row << (inter.pattern ? to_string(*inter.pattern) : "") << ',';
    if (is_irreducible(p)) {
        row << (is_stable(p).verdict == StabilityVerdict::Stable ? "true" : "false") << ',';
        FiniteMonodromyResult fin = has_finite_monodromy(p);
        row << (fin.finite ? "true" : "false") << ',';
        if (fin.report.first_failing_unit) row << *fin.report.first_failing_unit;
    } else {
        row << ",,";  // stability and finiteness are undefined on reducible tuples
    }
    row << '\n';
    return row.str();
}

}  // namespace

void run_scan(const ScanOptions& options, std::ostream& out) {
    if (options.rank < 1) fail(ErrorCode::InvalidInput, "scan needs --n >= 1");
    if (options.max_denominator < 1) fail(ErrorCode::InvalidInput, "scan needs --max-denominator >= 1");

    std::vector<Rational> pool = fractions_up_to(options.max_denominator);
    if (static_cast<int>(pool.size()) < options.rank)
        fail(ErrorCode::InvalidInput, "not enough distinct fractions for rank " + std::to_string(options.rank));
    std::vector<std::vector<int>> subsets = combinations(static_cast<int>(pool.size()), options.rank);

    out << "alpha,beta,gamma,interlaces,pattern,stable,finite,first_failing_unit\n";

    const std::size_t pair_count = subsets.size() * subsets.size();
    const std::size_t chunk_size = 4096;
    std::vector<std::string> rows(std::min(chunk_size, pair_count));

    auto tuple_at = [&](std::size_t pair_index) {
        const auto& ia = subsets[pair_index / subsets.size()];
        const auto& ib = subsets[pair_index % subsets.size()];
        HypergeometricParameters p;
        for (int k : ia) p.alpha.push_back(pool[static_cast<std::size_t>(k)]);
        for (int k : ib) p.beta.push_back(pool[static_cast<std::size_t>(k)]);
        return p;  // already sorted and normalized by construction
    };

    for (std::size_t base = 0; base < pair_count; base += chunk_size) {
        std::size_t count = std::min(chunk_size, pair_count - base);
        parallel_for(count, options.jobs, [&](std::size_t i) {
            HypergeometricParameters p = tuple_at(base + i);
            bool reducible = !is_irreducible(p);
            if (reducible && !options.include_reducible) {
                rows[i].clear();
                return;
            }
            if (options.orbit_dedup && !is_orbit_minimum(p)) {
                rows[i].clear();
                return;
            }
            rows[i] = scan_row(p);
        });
        for (std::size_t i = 0; i < count; ++i) out << rows[i];
    }
}

}  // namespace hyplac
