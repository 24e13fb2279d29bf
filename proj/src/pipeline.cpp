#include "fincomp/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "fincomp/csv.hpp"
#include "fincomp/parallel.hpp"
#include "fincomp/version.hpp"

namespace fincomp {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string format_double(double v, const char* fmt) {
    if (v == 0.0) v = 0.0; // never print -0
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

} // namespace

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["data_path"] = data_path;
    if (registry_path.empty()) {
        j["registry_path"] = nullptr;
    } else {
        j["registry_path"] = registry_path;
    }
    j["inverse_mode"] = std::string(to_string(inverse_mode));
    j["entropy_method"] = std::string(to_string(entropy_method));
    j["weight_rule"] = std::string(to_string(weight_rule));
    j["bandwidth"] = bandwidth.to_string();
    j["grid_size"] = grid_size;
    j["missing_policy"] = std::string(to_string(missing_policy));
    j["output_dir"] = output_dir;
    nlohmann::ordered_json formats = nlohmann::ordered_json::array();
    if (format_csv) formats.push_back("csv");
    if (format_json) formats.push_back("json");
    j["output_formats"] = formats;
    return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig config;
    try {
        config.data_path = j.at("data_path").get<std::string>();
        if (j.contains("registry_path") && !j.at("registry_path").is_null()) {
            config.registry_path = j.at("registry_path").get<std::string>();
        }
        config.inverse_mode = inverse_mode_from_string(j.at("inverse_mode").get<std::string>());
        config.entropy_method =
            entropy_method_from_string(j.at("entropy_method").get<std::string>());
        config.weight_rule = weight_rule_from_string(j.at("weight_rule").get<std::string>());
        config.bandwidth = BandwidthPolicy::from_string(j.at("bandwidth").get<std::string>());
        config.grid_size = j.at("grid_size").get<std::size_t>();
        config.missing_policy =
            missing_policy_from_string(j.at("missing_policy").get<std::string>());
        config.output_dir = j.at("output_dir").get<std::string>();
        config.format_csv = false;
        config.format_json = false;
        for (const auto& f : j.at("output_formats")) {
            const auto name = f.get<std::string>();
            if (name == "csv") {
                config.format_csv = true;
            } else if (name == "json") {
                config.format_json = true;
            } else {
                throw Error(errc::parse_error, "unknown output format: '" + name + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("bad run config: ") + e.what());
    }
    return config;
}

IndicatorRegistry registry_for(const RunConfig& config) {
    if (config.registry_path.empty()) return IndicatorRegistry::builtin_default();
    return IndicatorRegistry::load(config.registry_path);
}

IndicatorMatrix load_dataset(const std::filesystem::path& data_path,
                             const IndicatorRegistry& registry) {
    const auto rows = csv::read_file(data_path);
    if (rows.empty()) {
        throw Error(errc::parse_error, "no header row in " + data_path.string());
    }

    const auto& header = rows.front();
    if (header.empty() || trim(header[0]) != "ticker") {
        throw Error(errc::parse_error, "first column must be 'ticker', got '" +
                                           (header.empty() ? "" : header[0]) + "'");
    }

    // Resolve file columns against the registry; downstream column order is
    // the registry's, not the file's.
    struct FileColumn {
        std::size_t registry_index;
        std::size_t file_index;
    };
    std::vector<FileColumn> columns;
    columns.reserve(header.size() - 1);
    for (std::size_t i = 1; i < header.size(); ++i) {
        const std::string id(trim(header[i]));
        if (id.empty()) {
            throw Error(errc::parse_error, "empty header in column " + std::to_string(i + 1));
        }
        const auto idx = registry.index_of(id);
        if (!idx) {
            throw Error(errc::unknown_indicator_column,
                        "header '" + id + "' is not in the registry");
        }
        for (const auto& existing : columns) {
            if (existing.registry_index == *idx) {
                throw Error(errc::parse_error, "duplicate column '" + id + "'");
            }
        }
        columns.push_back({*idx, i});
    }
    std::sort(columns.begin(), columns.end(),
              [](const FileColumn& a, const FileColumn& b) {
                  return a.registry_index < b.registry_index;
              });

    std::vector<IndicatorSpec> specs;
    specs.reserve(columns.size());
    for (const auto& col : columns) specs.push_back(registry.at(col.registry_index));

    std::vector<CompanyRecord> companies;
    std::vector<std::optional<double>> cells;
    companies.reserve(rows.size() - 1);
    cells.reserve((rows.size() - 1) * columns.size());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            throw Error(errc::parse_error, "row " + std::to_string(r + 1) + " has " +
                                               std::to_string(row.size()) +
                                               " fields, expected " +
                                               std::to_string(header.size()));
        }
        const std::string ticker(trim(row[0]));
        if (ticker.empty()) {
            throw Error(errc::parse_error, "row " + std::to_string(r + 1) + ": empty ticker");
        }
        companies.push_back({ticker, ""});
        for (const auto& col : columns) {
            cells.push_back(csv::parse_cell(row[col.file_index], r + 1, col.file_index + 1));
        }
    }

    return IndicatorMatrix(std::move(companies), IndicatorRegistry(std::move(specs)),
                           std::move(cells));
}

RunReport compute_report(const RunConfig& config, unsigned threads) {
    if (config.grid_size < 64) {
        throw Error(errc::invalid_argument,
                    "grid_size must be >= 64, got " + std::to_string(config.grid_size));
    }
    if (config.bandwidth.kind == BandwidthPolicy::Kind::Fixed &&
        !(config.bandwidth.fixed_value > 0.0)) {
        throw Error(errc::bandwidth_non_positive, "fixed bandwidth must be > 0");
    }

    const IndicatorRegistry registry = registry_for(config);
    const IndicatorMatrix matrix = load_dataset(config.data_path, registry);
    auto [validated, validation] = validate_matrix(matrix, config.missing_policy);
    const NormalizedMatrix normalized = normalize_matrix(validated, config.inverse_mode);

    const std::size_t m = normalized.cols();
    std::vector<EntropyValue> entropies(m);
    std::vector<std::pair<std::string, double>> bandwidths;
    if (config.entropy_method == EntropyMethod::Continuous) bandwidths.resize(m);

    const ColumnEntropyParams params{config.bandwidth, config.grid_size};
    parallel_for(m, threads, [&](std::size_t c) {
        const std::vector<double> column = normalized.column(c);
        const std::string& id = normalized.registry().at(c).id;
        if (config.entropy_method == EntropyMethod::Continuous) {
            const CdfEstimate cdf = estimate_cdf(column, config.bandwidth, config.grid_size);
            entropies[c] = {id, continuous_entropy(cdf), EntropyMethod::Continuous};
            bandwidths[c] = {id, cdf.bandwidth};
        } else {
            entropies[c] = column_entropy(column, EntropyMethod::Discrete, params, id);
        }
    });

    RunReport report;
    report.weights = compute_weights(entropies, config.weight_rule);
    report.score_board = score_companies(normalized, report.weights);

    std::vector<double> scores;
    scores.reserve(report.score_board.rows.size());
    for (const auto& row : report.score_board.rows) scores.push_back(row.score);
    report.score_stats = describe(scores);

    report.validation = std::move(validation);
    report.dropped_degenerate = normalized.dropped_degenerate();
    report.column_ranges = normalized.provenance();
    report.bandwidths = std::move(bandwidths);
    report.config_echo = config;
    report.tool_version = kVersion;
    return report;
}

std::string render_scores_csv(const ScoreBoard& board) {
    std::string out = "rank,ticker,score\n";
    for (const auto& row : board.rows) {
        out += std::to_string(row.rank);
        out += ',';
        out += row.ticker;
        out += ',';
        out += format_double(row.score, "%.5f"); // presentation precision
        out += '\n';
    }
    return out;
}

std::string render_weights_csv(const WeightVector& weights) {
    std::string out = "indicator_id,entropy,weight\n";
    for (const auto& entry : weights.entries) {
        out += entry.indicator_id;
        out += ',';
        out += format_double(entry.entropy, "%.9g");
        out += ',';
        out += format_double(entry.weight, "%.9g");
        out += '\n';
    }
    return out;
}

std::string render_correlation_csv(const CorrelationMatrix& matrix) {
    std::string out;
    for (const auto& id : matrix.ids()) {
        out += ',';
        out += id;
    }
    out += '\n';
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        out += matrix.ids()[i];
        for (std::size_t j = 0; j < matrix.size(); ++j) {
            out += ',';
            out += format_double(matrix.at(i, j), "%.9g");
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json scores_to_json(const ScoreBoard& board) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : board.rows) {
        rows.push_back({{"rank", row.rank}, {"ticker", row.ticker}, {"score", row.score}});
    }
    return {{"tie_policy", board.tie_policy}, {"rows", rows}};
}

nlohmann::ordered_json weights_to_json(const WeightVector& weights) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& entry : weights.entries) {
        entries.push_back({{"indicator_id", entry.indicator_id},
                           {"entropy", entry.entropy},
                           {"weight", entry.weight}});
    }
    return {{"method", std::string(to_string(weights.method))},
            {"rule", std::string(to_string(weights.rule))},
            {"entries", entries}};
}

nlohmann::ordered_json stats_to_json(const DescriptiveStats& stats) {
    nlohmann::ordered_json j;
    j["mean"] = stats.mean;
    j["median"] = stats.median;
    j["std_dev"] = stats.std_dev;
    j["kurtosis"] = stats.kurtosis ? nlohmann::ordered_json(*stats.kurtosis)
                                   : nlohmann::ordered_json(nullptr);
    j["skewness"] = stats.skewness ? nlohmann::ordered_json(*stats.skewness)
                                   : nlohmann::ordered_json(nullptr);
    j["smallest"] = stats.smallest;
    j["largest"] = stats.largest;
    j["obs"] = stats.obs;
    return j;
}

nlohmann::ordered_json diagnostics_to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["tool_version"] = report.tool_version;
    j["config"] = report.config_echo.to_json();
    j["validation"] = report.validation.to_json();

    nlohmann::ordered_json ranges = nlohmann::ordered_json::array();
    for (const auto& range : report.column_ranges) {
        ranges.push_back({{"id", range.indicator_id}, {"min", range.min}, {"max", range.max}});
    }
    j["normalization"] = {{"dropped_degenerate_columns", report.dropped_degenerate},
                          {"column_ranges", ranges}};

    nlohmann::ordered_json bandwidths = nlohmann::ordered_json::array();
    for (const auto& [id, h] : report.bandwidths) {
        bandwidths.push_back({{"id", id}, {"bandwidth", h}});
    }
    j["entropy"] = {{"method", std::string(to_string(report.config_echo.entropy_method))},
                    {"grid_size", report.config_echo.grid_size},
                    {"bandwidths", bandwidths}};

    if (report.correlation) {
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < report.correlation->size(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < report.correlation->size(); ++k) {
                row.push_back(report.correlation->at(i, k));
            }
            values.push_back(row);
        }
        j["correlation"] = {{"ids", report.correlation->ids()}, {"values", values}};
    } else {
        j["correlation"] = nullptr;
    }
    return j;
}

namespace {

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// All-or-nothing file drop: every payload lands under a temporary name
// first and is renamed into place only after all writes succeeded.
void write_outputs(const std::filesystem::path& dir,
                   const std::vector<std::pair<std::string, std::string>>& files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error(errc::io_error, "cannot create output dir " + dir.string() + ": " +
                                        ec.message());
    }
    std::vector<std::filesystem::path> temps;
    temps.reserve(files.size());
    try {
        for (const auto& [name, content] : files) {
            const auto tmp = dir / (name + ".tmp");
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(content.data(), static_cast<std::streamsize>(content.size()));
            if (!out) {
                throw Error(errc::io_error, "cannot write " + tmp.string());
            }
            out.close();
            temps.push_back(tmp);
        }
        for (std::size_t i = 0; i < files.size(); ++i) {
            std::filesystem::rename(temps[i], dir / files[i].first, ec);
            if (ec) {
                throw Error(errc::io_error, "cannot rename " + temps[i].string() + ": " +
                                                ec.message());
            }
        }
    } catch (...) {
        for (const auto& tmp : temps) std::filesystem::remove(tmp, ec);
        throw;
    }
}

} // namespace

RunReport run_pipeline(const RunConfig& config, unsigned threads) {
    RunReport report = compute_report(config, threads);

    std::vector<std::pair<std::string, std::string>> files;
    if (config.format_csv) {
        files.emplace_back("scores.csv", render_scores_csv(report.score_board));
        files.emplace_back("weights.csv", render_weights_csv(report.weights));
    }
    if (config.format_json) {
        files.emplace_back("scores.json", dump_json(scores_to_json(report.score_board)));
        files.emplace_back("weights.json", dump_json(weights_to_json(report.weights)));
    }
    files.emplace_back("stats.json", dump_json(stats_to_json(report.score_stats)));
    files.emplace_back("diagnostics.json", dump_json(diagnostics_to_json(report)));

    write_outputs(config.output_dir, files);
    return report;
}

CorrelationMatrix emit_correlation(const std::filesystem::path& data_path,
                                   const IndicatorRegistry& registry,
                                   const std::vector<std::string>& ids, MissingPolicy policy,
                                   const std::filesystem::path& out_dir) {
    if (ids.size() < 2) {
        throw Error(errc::invalid_argument, "need at least two indicator ids");
    }
    const IndicatorMatrix matrix = load_dataset(data_path, registry);
    auto [validated, validation] = validate_matrix(matrix, policy);

    std::vector<std::vector<double>> columns;
    columns.reserve(ids.size());
    for (const auto& id : ids) {
        const auto idx = validated.registry().index_of(id);
        if (!idx) {
            throw Error(errc::unknown_indicator_column,
                        "id '" + id + "' is not in the dataset after policy application");
        }
        columns.push_back(validated.column(*idx));
    }

    CorrelationMatrix matrix_out = pearson_matrix(columns, ids);
    write_outputs(out_dir, {{"correlation.csv", render_correlation_csv(matrix_out)}});
    return matrix_out;
}

std::vector<TickerScore> load_scores_csv(const std::filesystem::path& path) {
    const auto rows = csv::read_file(path);
    if (rows.empty()) {
        throw Error(errc::parse_error, "no header row in " + path.string());
    }
    const auto& header = rows.front();
    std::optional<std::size_t> score_col, ticker_col;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = trim(header[i]);
        if (name == "score") score_col = i;
        if (name == "ticker") ticker_col = i;
    }
    if (!score_col) {
        throw Error(errc::parse_error, "no 'score' column in " + path.string());
    }

    std::vector<TickerScore> scores;
    scores.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (*score_col >= row.size()) {
            throw Error(errc::parse_error,
                        "row " + std::to_string(r + 1) + " is missing the score field");
        }
        const auto value = csv::parse_cell(row[*score_col], r + 1, *score_col + 1);
        if (!value) {
            throw Error(errc::parse_error, "row " + std::to_string(r + 1) + ": empty score");
        }
        std::string ticker = ticker_col && *ticker_col < row.size()
                                 ? std::string(trim(row[*ticker_col]))
                                 : "row" + std::to_string(r);
        scores.push_back({std::move(ticker), *value});
    }
    return scores;
}

} // namespace fincomp
