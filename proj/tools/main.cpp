// hyplac command line: exact analysis of rational hypergeometric parameter
// tuples (irreducibility, parabolic stability, interlacing, Galois
// finiteness) with an optional exact monodromy oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hyplac/errors.hpp"
#include "hyplac/report.hpp"

namespace {

int run_analyze(const hyplac::AnalyzeOptions& options) {
    hyplac::AnalysisReport report = hyplac::analyze(options);
    std::cout << hyplac::report_to_json(report).dump(options.json_indent) << "\n";
    if (options.strict && (!report.generic || !report.irreducible)) return 3;
    return 0;
}

int run_scan_command(const hyplac::ScanOptions& options, const std::string& out_path) {
    if (out_path.empty()) {
        hyplac::run_scan(options, std::cout);
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path '" << out_path << "'\n";
        return 2;
    }
    hyplac::run_scan(options, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyplac: exact analyzer for hypergeometric local systems"};
    app.require_subcommand(1);

    hyplac::AnalyzeOptions analyze_options;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Analyze one parameter tuple and print a JSON report");
    analyze_cmd->add_option("--alpha", analyze_options.alpha_text, "Comma-separated alpha list, e.g. 0,1/2")
        ->required();
    analyze_cmd->add_option("--beta", analyze_options.beta_text, "Comma-separated beta list, e.g. 1/4,3/4")
        ->required();
    analyze_cmd->add_flag("--implicit-beta-one", analyze_options.implicit_beta_one,
                          "Append the implicit beta = 0 (the nFn-1 convention beta_1 = 1)");
    analyze_cmd->add_flag("--oracle", analyze_options.run_oracle,
                          "Also run the exact monodromy oracle (Levelt triple, Katz sum, Hermitian "
                          "form, group closure)");
    analyze_cmd->add_option("--closure-bound", analyze_options.closure_bound,
                            "Element bound for the group closure search")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_flag("--strict", analyze_options.strict,
                          "Exit with code 3 on reducible or non-generic input");
    analyze_cmd->add_option("--json-indent", analyze_options.json_indent,
                            "JSON indent width (-1 for compact output)");

    hyplac::ScanOptions scan_options;
    bool require_irreducible = true;
    std::string out_path;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Sweep all canonical tuples to CSV");
    scan_cmd->add_option("--n", scan_options.rank, "Rank of the tuples")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--max-denominator", scan_options.max_denominator, "Largest entry denominator")
        ->required()
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--out", out_path, "Output path (default: standard output)");
    scan_cmd->add_option("--jobs", scan_options.jobs, "Worker threads (0 = hardware concurrency)");
    scan_cmd->add_flag("--orbit-dedup", scan_options.orbit_dedup,
                       "Emit only the lexicographic minimum of each Galois orbit");
    scan_cmd->add_flag("--require-irreducible,!--include-reducible", require_irreducible,
                       "Skip reducible tuples (default); --include-reducible emits them with empty "
                       "stability/finiteness cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_options);
        scan_options.include_reducible = !require_irreducible;
        return run_scan_command(scan_options, out_path);
    } catch (const hyplac::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case hyplac::ErrorCode::InvalidInput:
            case hyplac::ErrorCode::PoleInDenominatorParameters:
            case hyplac::ErrorCode::NotAUnit:
            case hyplac::ErrorCode::NotSeriesNormalizable:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
