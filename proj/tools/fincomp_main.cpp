#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fincomp/pipeline.hpp"
#include "fincomp/version.hpp"

namespace {

std::vector<std::string> split_list(const std::string& raw) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : raw) {
        if (c == ',') {
            if (!current.empty()) parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

void print_stat_line(const char* label, double value) {
    std::printf("%-9s %.6f\n", label, value);
}

int run(int argc, char** argv) {
    CLI::App app{"entropy-weighted financial competitiveness scoring"};
    app.require_subcommand(1);
    app.set_version_flag("--version", fincomp::kVersion);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "score companies from an indicator matrix");
    fincomp::RunConfig config;
    std::string inverse_mode = "corrected";
    std::string entropy_method = "continuous";
    std::string weight_rule = "paper";
    std::string bandwidth = "rot";
    std::string missing_policy = "reject";
    std::string formats = "csv,json";
    unsigned threads = 1;
    analyze->add_option("--data", config.data_path, "input CSV (ticker + indicator columns)")
        ->required();
    analyze->add_option("--registry", config.registry_path,
                        "indicator registry JSON (default: built-in)");
    analyze->add_option("--inverse-mode", inverse_mode, "corrected | paper-literal")
        ->capture_default_str();
    analyze->add_option("--entropy", entropy_method, "continuous | discrete")
        ->capture_default_str();
    analyze->add_option("--weight-rule", weight_rule, "paper | classic")->capture_default_str();
    analyze->add_option("--bandwidth", bandwidth, "rot | fixed:<h>")->capture_default_str();
    analyze->add_option("--grid", config.grid_size, "CDF grid size (>= 64)")
        ->capture_default_str();
    analyze->add_option("--missing", missing_policy,
                        "reject | drop-company | drop-indicator | impute-median")
        ->capture_default_str();
    analyze->add_option("--out", config.output_dir, "output directory")->capture_default_str();
    analyze->add_option("--format", formats, "comma list of csv,json")->capture_default_str();
    analyze->add_option("--threads", threads, "worker threads for per-column stages")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    // corr
    auto* corr = app.add_subcommand("corr", "pairwise Pearson correlations for chosen indicators");
    std::string corr_data;
    std::string corr_registry;
    std::string corr_ids;
    std::string corr_missing = "reject";
    std::string corr_out = "out";
    corr->add_option("--data", corr_data, "input CSV")->required();
    corr->add_option("--ids", corr_ids, "comma list of indicator ids (>= 2)")->required();
    corr->add_option("--registry", corr_registry, "indicator registry JSON (default: built-in)");
    corr->add_option("--missing", corr_missing,
                     "reject | drop-company | drop-indicator | impute-median")
        ->capture_default_str();
    corr->add_option("--out", corr_out, "output directory")->capture_default_str();

    // stats
    auto* stats = app.add_subcommand("stats", "descriptive statistics for a score column");
    std::string scores_path;
    stats->add_option("--scores", scores_path, "CSV with a 'score' column")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (analyze->parsed()) {
        config.inverse_mode = fincomp::inverse_mode_from_string(inverse_mode);
        config.entropy_method = fincomp::entropy_method_from_string(entropy_method);
        config.weight_rule = fincomp::weight_rule_from_string(weight_rule);
        config.bandwidth = fincomp::BandwidthPolicy::from_string(bandwidth);
        config.missing_policy = fincomp::missing_policy_from_string(missing_policy);
        config.format_csv = false;
        config.format_json = false;
        for (const auto& f : split_list(formats)) {
            if (f == "csv") {
                config.format_csv = true;
            } else if (f == "json") {
                config.format_json = true;
            } else {
                throw fincomp::Error(fincomp::errc::parse_error,
                                     "unknown output format: '" + f + "'");
            }
        }
        if (!config.format_csv && !config.format_json) {
            throw fincomp::Error(fincomp::errc::parse_error, "--format selects nothing");
        }

        const fincomp::RunReport report = fincomp::run_pipeline(config, threads);
        std::printf("scored %zu companies on %zu indicators\n", report.score_board.rows.size(),
                    report.weights.entries.size());
        if (!report.validation.empty()) {
            std::printf("validation: %zu companies dropped, %zu indicators dropped, %zu cells imputed\n",
                        report.validation.dropped_companies.size(),
                        report.validation.dropped_indicators.size(),
                        report.validation.imputed_cells.size());
        }
        for (const auto& id : report.dropped_degenerate) {
            std::printf("warning: dropped degenerate column %s\n", id.c_str());
        }
        std::printf("outputs written to %s\n", config.output_dir.c_str());
        return 0;
    }

    if (corr->parsed()) {
        fincomp::RunConfig reg_config;
        reg_config.registry_path = corr_registry;
        const auto registry = fincomp::registry_for(reg_config);
        const auto ids = split_list(corr_ids);
        fincomp::emit_correlation(corr_data, registry, ids,
                                  fincomp::missing_policy_from_string(corr_missing), corr_out);
        std::printf("wrote %s/correlation.csv\n", corr_out.c_str());
        return 0;
    }

    const auto scores = fincomp::load_scores_csv(scores_path);
    std::vector<double> values;
    values.reserve(scores.size());
    for (const auto& s : scores) values.push_back(s.score);
    const auto d = fincomp::describe(values);
    print_stat_line("mean", d.mean);
    print_stat_line("median", d.median);
    print_stat_line("std dev", d.std_dev);
    if (d.kurtosis) {
        print_stat_line("kurtosis", *d.kurtosis);
    } else {
        std::printf("%-9s n/a\n", "kurtosis");
    }
    if (d.skewness) {
        print_stat_line("skewness", *d.skewness);
    } else {
        std::printf("%-9s n/a\n", "skewness");
    }
    print_stat_line("smallest", d.smallest);
    print_stat_line("largest", d.largest);
    std::printf("%-9s %zu\n", "obs", d.obs);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const fincomp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fincomp::exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
