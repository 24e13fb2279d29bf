#include "fincomp/indicator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

namespace fincomp {

std::string_view to_string(Category c) noexcept {
    switch (c) {
    case Category::Profitability: return "Profitability";
    case Category::Solvency: return "Solvency";
    case Category::SustainableDevelopment: return "SustainableDevelopment";
    case Category::Operational: return "Operational";
    }
    return "Profitability";
}

std::string_view to_string(Direction d) noexcept {
    return d == Direction::Positive ? "Positive" : "Inverse";
}

Category category_from_string(std::string_view s) {
    if (s == "Profitability") return Category::Profitability;
    if (s == "Solvency") return Category::Solvency;
    if (s == "SustainableDevelopment") return Category::SustainableDevelopment;
    if (s == "Operational") return Category::Operational;
    throw Error(errc::parse_error, "unknown category: '" + std::string(s) + "'");
}

Direction direction_from_string(std::string_view s) {
    if (s == "Positive") return Direction::Positive;
    if (s == "Inverse") return Direction::Inverse;
    throw Error(errc::parse_error, "unknown direction: '" + std::string(s) + "'");
}

std::string_view to_string(MissingPolicy p) noexcept {
    switch (p) {
    case MissingPolicy::Reject: return "reject";
    case MissingPolicy::DropCompany: return "drop-company";
    case MissingPolicy::DropIndicator: return "drop-indicator";
    case MissingPolicy::ImputeColumnMedian: return "impute-median";
    }
    return "reject";
}

MissingPolicy missing_policy_from_string(std::string_view s) {
    if (s == "reject") return MissingPolicy::Reject;
    if (s == "drop-company") return MissingPolicy::DropCompany;
    if (s == "drop-indicator") return MissingPolicy::DropIndicator;
    if (s == "impute-median") return MissingPolicy::ImputeColumnMedian;
    throw Error(errc::parse_error, "unknown missing policy: '" + std::string(s) + "'");
}

IndicatorRegistry::IndicatorRegistry(std::vector<IndicatorSpec> specs) : specs_(std::move(specs)) {
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        const auto& id = specs_[i].id;
        if (id.empty()) {
            throw Error(errc::invalid_argument, "indicator id at position " + std::to_string(i) +
                                                    " is empty");
        }
        if (!index_.emplace(id, i).second) {
            throw Error(errc::invalid_argument, "duplicate indicator id: '" + id + "'");
        }
    }
}

std::optional<std::size_t> IndicatorRegistry::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

IndicatorRegistry IndicatorRegistry::subset(const std::vector<std::string>& ids) const {
    std::vector<IndicatorSpec> specs;
    specs.reserve(ids.size());
    for (const auto& spec : specs_) {
        if (std::find(ids.begin(), ids.end(), spec.id) != ids.end()) specs.push_back(spec);
    }
    return IndicatorRegistry(std::move(specs));
}

IndicatorRegistry IndicatorRegistry::from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw Error(errc::parse_error, "registry JSON must be an array of indicator objects");
    }
    std::vector<IndicatorSpec> specs;
    specs.reserve(j.size());
    for (const auto& item : j) {
        IndicatorSpec spec;
        try {
            spec.id = item.at("id").get<std::string>();
            spec.name = item.at("name").get<std::string>();
            spec.category = category_from_string(item.at("category").get<std::string>());
            spec.direction = direction_from_string(item.at("direction").get<std::string>());
            spec.units = item.at("units").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(errc::parse_error, std::string("bad registry entry: ") + e.what());
        }
        specs.push_back(std::move(spec));
    }
    return IndicatorRegistry(std::move(specs));
}

IndicatorRegistry IndicatorRegistry::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(errc::io_error, "cannot open registry file: " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, "registry " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::ordered_json IndicatorRegistry::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& spec : specs_) {
        out.push_back({{"id", spec.id},
                       {"name", spec.name},
                       {"category", std::string(to_string(spec.category))},
                       {"direction", std::string(to_string(spec.direction))},
                       {"units", spec.units}});
    }
    return out;
}

IndicatorMatrix::IndicatorMatrix(std::vector<CompanyRecord> companies, IndicatorRegistry registry,
                                 std::vector<std::optional<double>> cells)
    : companies_(std::move(companies)), registry_(std::move(registry)), cells_(std::move(cells)) {
    if (cells_.size() != companies_.size() * registry_.size()) {
        throw Error(errc::invalid_argument,
                    "grid size " + std::to_string(cells_.size()) + " does not equal " +
                        std::to_string(companies_.size()) + " x " + std::to_string(registry_.size()));
    }
    std::unordered_map<std::string_view, std::size_t> seen;
    for (const auto& company : companies_) {
        if (company.ticker.empty()) {
            throw Error(errc::invalid_argument, "empty ticker");
        }
        if (!seen.emplace(company.ticker, 1).second) {
            throw Error(errc::duplicate_ticker, "duplicate ticker: '" + company.ticker + "'");
        }
    }
}

const std::optional<double>& IndicatorMatrix::at(std::size_t row, std::size_t col) const {
    return cells_.at(row * cols() + col);
}

ValidatedMatrix::ValidatedMatrix(std::vector<CompanyRecord> companies, IndicatorRegistry registry,
                                 std::vector<double> cells)
    : companies_(std::move(companies)), registry_(std::move(registry)), cells_(std::move(cells)) {
    if (cells_.size() != companies_.size() * registry_.size()) {
        throw Error(errc::invalid_argument, "validated grid dimensions inconsistent");
    }
}

std::vector<double> ValidatedMatrix::column(std::size_t col) const {
    std::vector<double> out;
    out.reserve(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.push_back(at(r, col));
    return out;
}

IndicatorMatrix ValidatedMatrix::to_matrix() const {
    std::vector<std::optional<double>> cells(cells_.begin(), cells_.end());
    return IndicatorMatrix(companies_, registry_, std::move(cells));
}

nlohmann::ordered_json ValidationReport::to_json() const {
    nlohmann::ordered_json imputed = nlohmann::ordered_json::array();
    for (const auto& cell : imputed_cells) {
        imputed.push_back({{"ticker", cell.ticker},
                           {"indicator_id", cell.indicator_id},
                           {"value", cell.value}});
    }
    return {{"dropped_companies", dropped_companies},
            {"dropped_indicators", dropped_indicators},
            {"imputed_cells", imputed}};
}

namespace {

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

void check_finite(const IndicatorMatrix& matrix) {
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            const auto& cell = matrix.at(r, c);
            if (cell && !std::isfinite(*cell)) {
                throw Error(errc::non_finite_value,
                            "non-finite value at (" + matrix.companies()[r].ticker + ", " +
                                matrix.registry().at(c).id + ")");
            }
        }
    }
}

} // namespace

ValidationResult validate_matrix(const IndicatorMatrix& matrix, MissingPolicy policy) {
    check_finite(matrix);

    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();
    ValidationReport report;

    std::vector<bool> keep_row(rows, true);
    std::vector<bool> keep_col(cols, true);

    if (policy == MissingPolicy::Reject) {
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (!matrix.at(r, c)) {
                    throw Error(errc::missing_value_rejected,
                                "missing value at row " + std::to_string(r) + ", col " +
                                    std::to_string(c) + " (" + matrix.companies()[r].ticker +
                                    ", " + matrix.registry().at(c).id + ")");
                }
            }
        }
    } else if (policy == MissingPolicy::DropCompany) {
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (!matrix.at(r, c)) {
                    keep_row[r] = false;
                    report.dropped_companies.push_back(matrix.companies()[r].ticker);
                    break;
                }
            }
        }
    } else if (policy == MissingPolicy::DropIndicator) {
        for (std::size_t c = 0; c < cols; ++c) {
            for (std::size_t r = 0; r < rows; ++r) {
                if (!matrix.at(r, c)) {
                    keep_col[c] = false;
                    report.dropped_indicators.push_back(matrix.registry().at(c).id);
                    break;
                }
            }
        }
    }

    std::size_t out_rows = 0, out_cols = 0;
    for (std::size_t r = 0; r < rows; ++r) out_rows += keep_row[r] ? 1 : 0;
    for (std::size_t c = 0; c < cols; ++c) out_cols += keep_col[c] ? 1 : 0;
    if (out_rows == 0 || out_cols == 0) {
        throw Error(errc::empty_dataset, "no data left after applying policy '" +
                                             std::string(to_string(policy)) + "'");
    }

    // Column medians of present values, for ImputeColumnMedian.
    std::vector<double> medians(cols, 0.0);
    if (policy == MissingPolicy::ImputeColumnMedian) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<double> present;
            for (std::size_t r = 0; r < rows; ++r) {
                if (matrix.at(r, c)) present.push_back(*matrix.at(r, c));
            }
            if (present.empty()) {
                throw Error(errc::all_missing_column,
                            "column '" + matrix.registry().at(c).id + "' has no present values");
            }
            medians[c] = median_of(std::move(present));
        }
    }

    std::vector<CompanyRecord> companies;
    companies.reserve(out_rows);
    for (std::size_t r = 0; r < rows; ++r) {
        if (keep_row[r]) companies.push_back(matrix.companies()[r]);
    }
    std::vector<IndicatorSpec> specs;
    specs.reserve(out_cols);
    for (std::size_t c = 0; c < cols; ++c) {
        if (keep_col[c]) specs.push_back(matrix.registry().at(c));
    }

    std::vector<double> cells;
    cells.reserve(out_rows * out_cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!keep_row[r]) continue;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!keep_col[c]) continue;
            const auto& cell = matrix.at(r, c);
            if (cell) {
                cells.push_back(*cell);
            } else {
                // Only reachable under ImputeColumnMedian.
                cells.push_back(medians[c]);
                report.imputed_cells.push_back({r, c, matrix.companies()[r].ticker,
                                                matrix.registry().at(c).id, medians[c]});
            }
        }
    }

    return {ValidatedMatrix(std::move(companies), IndicatorRegistry(std::move(specs)),
                            std::move(cells)),
            std::move(report)};
}

} // namespace fincomp
