#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "fincomp/errors.hpp"

namespace fincomp {

enum class Category { Profitability, Solvency, SustainableDevelopment, Operational };
enum class Direction { Positive, Inverse };

std::string_view to_string(Category c) noexcept;
std::string_view to_string(Direction d) noexcept;
Category category_from_string(std::string_view s);
Direction direction_from_string(std::string_view s);

/// One indicator's identity: stable id, display name, Table-style category,
/// direction (whether higher or lower raw values are better) and a free-text
/// unit label.
struct IndicatorSpec {
    std::string id;
    std::string name;
    Category category = Category::Profitability;
    Direction direction = Direction::Positive;
    std::string units;
};

/// Ordered set of indicator specs. The order is stable and defines column
/// order everywhere downstream. Ids are unique and non-empty.
class IndicatorRegistry {
public:
    IndicatorRegistry() = default;
    explicit IndicatorRegistry(std::vector<IndicatorSpec> specs);

    /// The registry shipped with the tool: the 44 stock indicators across
    /// Profitability, Solvency, SustainableDevelopment and Operational,
    /// with debt-burden and cycle-time metrics marked Inverse.
    static IndicatorRegistry builtin_default();

    static IndicatorRegistry from_json(const nlohmann::json& j);
    static IndicatorRegistry load(const std::filesystem::path& path);
    nlohmann::ordered_json to_json() const;

    const std::vector<IndicatorSpec>& specs() const noexcept { return specs_; }
    std::size_t size() const noexcept { return specs_.size(); }
    const IndicatorSpec& at(std::size_t i) const { return specs_.at(i); }
    std::optional<std::size_t> index_of(std::string_view id) const;

    /// Registry restricted to the given ids, keeping this registry's order.
    IndicatorRegistry subset(const std::vector<std::string>& ids) const;

private:
    std::vector<IndicatorSpec> specs_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct CompanyRecord {
    std::string ticker;
    std::string name; // optional display name, may be empty
};

/// Raw companies-by-indicators grid. Cells are optional: an empty cell is
/// the explicit missing marker. Present values must be finite; that is
/// enforced by validate_matrix, not construction.
class IndicatorMatrix {
public:
    IndicatorMatrix(std::vector<CompanyRecord> companies, IndicatorRegistry registry,
                    std::vector<std::optional<double>> cells);

    const std::vector<CompanyRecord>& companies() const noexcept { return companies_; }
    const IndicatorRegistry& registry() const noexcept { return registry_; }
    std::size_t rows() const noexcept { return companies_.size(); }
    std::size_t cols() const noexcept { return registry_.size(); }
    const std::optional<double>& at(std::size_t row, std::size_t col) const;

private:
    std::vector<CompanyRecord> companies_;
    IndicatorRegistry registry_;
    std::vector<std::optional<double>> cells_; // row-major
};

enum class MissingPolicy { Reject, DropCompany, DropIndicator, ImputeColumnMedian };

std::string_view to_string(MissingPolicy p) noexcept;
MissingPolicy missing_policy_from_string(std::string_view s);

struct ImputedCell {
    std::size_t row = 0, col = 0;
    std::string ticker;
    std::string indicator_id;
    double value = 0.0;
};

/// Every action validate_matrix took. Empty when the input was already
/// complete under the policy.
struct ValidationReport {
    std::vector<std::string> dropped_companies;
    std::vector<std::string> dropped_indicators;
    std::vector<ImputedCell> imputed_cells;

    bool empty() const noexcept {
        return dropped_companies.empty() && dropped_indicators.empty() && imputed_cells.empty();
    }
    nlohmann::ordered_json to_json() const;
};

/// Complete (no-missing) matrix, the only thing the numeric stages accept.
class ValidatedMatrix {
public:
    ValidatedMatrix(std::vector<CompanyRecord> companies, IndicatorRegistry registry,
                    std::vector<double> cells);

    const std::vector<CompanyRecord>& companies() const noexcept { return companies_; }
    const IndicatorRegistry& registry() const noexcept { return registry_; }
    std::size_t rows() const noexcept { return companies_.size(); }
    std::size_t cols() const noexcept { return registry_.size(); }
    double at(std::size_t row, std::size_t col) const { return cells_.at(row * cols() + col); }
    std::vector<double> column(std::size_t col) const;

    /// Back to the optional-cell representation (all cells present).
    IndicatorMatrix to_matrix() const;

private:
    std::vector<CompanyRecord> companies_;
    IndicatorRegistry registry_;
    std::vector<double> cells_; // row-major
};

struct ValidationResult {
    ValidatedMatrix matrix;
    ValidationReport report;
};

/// Resolves missing cells according to the policy and checks finiteness.
/// Reject aborts on the first missing cell; DropCompany / DropIndicator
/// remove offending rows / columns (order of survivors preserved);
/// ImputeColumnMedian replaces each missing cell by the median of the
/// column's present values.
ValidationResult validate_matrix(const IndicatorMatrix& matrix, MissingPolicy policy);

} // namespace fincomp
