#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fincomp/entropy.hpp"
#include "fincomp/indicator.hpp"
#include "fincomp/normalize.hpp"
#include "fincomp/scoring.hpp"
#include "fincomp/stats.hpp"

namespace fincomp {

/// One run's full configuration. Round-trips through JSON so a report's
/// config echo can reproduce the run exactly.
struct RunConfig {
    std::string data_path;
    std::string registry_path; // empty: builtin default registry
    InverseMode inverse_mode = InverseMode::Corrected;
    EntropyMethod entropy_method = EntropyMethod::Continuous;
    WeightRule weight_rule = WeightRule::PaperProportional;
    BandwidthPolicy bandwidth;
    std::size_t grid_size = 1025;
    MissingPolicy missing_policy = MissingPolicy::Reject;
    std::string output_dir = "out";
    bool format_csv = true;
    bool format_json = true;

    nlohmann::ordered_json to_json() const;
    static RunConfig from_json(const nlohmann::json& j);
};

struct RunReport {
    ScoreBoard score_board;
    WeightVector weights;
    DescriptiveStats score_stats;
    ValidationReport validation;
    std::vector<std::string> dropped_degenerate;
    std::vector<ColumnRange> column_ranges;
    std::vector<std::pair<std::string, double>> bandwidths; // continuous method only
    std::optional<CorrelationMatrix> correlation;
    RunConfig config_echo;
    std::string tool_version;
};

/// Parses a wide CSV whose first header is `ticker` and whose remaining
/// headers are indicator ids resolvable in the registry. Empty cells become
/// missing markers; column order follows the registry, not the file.
IndicatorMatrix load_dataset(const std::filesystem::path& data_path,
                             const IndicatorRegistry& registry);

/// Registry from config: the file at registry_path, or the builtin default
/// when the path is empty.
IndicatorRegistry registry_for(const RunConfig& config);

/// validate -> normalize -> per-column entropy -> weights -> scores -> stats.
/// Does not touch the filesystem beyond reading inputs.
RunReport compute_report(const RunConfig& config, unsigned threads = 1);

/// compute_report plus output files: scores.{csv,json} and weights.{csv,json}
/// per requested formats, stats.json and diagnostics.json always. Files are
/// written to temporaries and renamed into place only after every byte is
/// ready, so a failed run leaves output_dir unchanged.
RunReport run_pipeline(const RunConfig& config, unsigned threads = 1);

/// Pearson matrix over the requested indicator ids (duplicates allowed),
/// written as correlation.csv: ids as header row and first column, diagonal
/// 1, 9 significant digits. Returns the matrix.
CorrelationMatrix emit_correlation(const std::filesystem::path& data_path,
                                   const IndicatorRegistry& registry,
                                   const std::vector<std::string>& ids, MissingPolicy policy,
                                   const std::filesystem::path& out_dir);

// Report renderers, exposed so determinism can be asserted on exact bytes.
std::string render_scores_csv(const ScoreBoard& board);
std::string render_weights_csv(const WeightVector& weights);
std::string render_correlation_csv(const CorrelationMatrix& matrix);
nlohmann::ordered_json scores_to_json(const ScoreBoard& board);
nlohmann::ordered_json weights_to_json(const WeightVector& weights);
nlohmann::ordered_json stats_to_json(const DescriptiveStats& stats);
nlohmann::ordered_json diagnostics_to_json(const RunReport& report);

/// Scores read back from a scores.csv-style file (any CSV with a `score`
/// column; `ticker` is used for labels when present).
std::vector<TickerScore> load_scores_csv(const std::filesystem::path& path);

} // namespace fincomp
