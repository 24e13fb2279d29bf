#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fincomp/indicator.hpp"

namespace fincomp {

/// How inverse indicators are scaled. Corrected maps the raw minimum to 1
/// and the raw maximum to 0, keeping values in [0,1]. PaperLiteral applies
/// (min - r) / (max - min) verbatim, which lands in [-1,0]; it is kept only
/// for fidelity experiments.
enum class InverseMode { Corrected, PaperLiteral };

std::string_view to_string(InverseMode m) noexcept;
InverseMode inverse_mode_from_string(std::string_view s);

/// (r - min) / (max - min). Throws degenerate_column when max == min.
std::vector<double> normalize_positive(std::span<const double> column);

/// Corrected: (max - r) / (max - min). PaperLiteral: (min - r) / (max - min).
std::vector<double> normalize_inverse(std::span<const double> column, InverseMode mode);

struct ColumnRange {
    std::string indicator_id;
    double min = 0.0;
    double max = 0.0;
};

/// Matrix of non-dimensionalized values. Degenerate (constant) raw columns
/// are not present; their ids are listed in dropped_degenerate. provenance
/// holds the raw (min, max) used for each surviving column.
class NormalizedMatrix {
public:
    NormalizedMatrix(std::vector<CompanyRecord> companies, IndicatorRegistry registry,
                     std::vector<double> cells, std::vector<ColumnRange> provenance,
                     std::vector<std::string> dropped_degenerate, InverseMode mode);

    const std::vector<CompanyRecord>& companies() const noexcept { return companies_; }
    const IndicatorRegistry& registry() const noexcept { return registry_; }
    std::size_t rows() const noexcept { return companies_.size(); }
    std::size_t cols() const noexcept { return registry_.size(); }
    double at(std::size_t row, std::size_t col) const { return cells_.at(row * cols() + col); }
    std::vector<double> column(std::size_t col) const;
    const std::vector<ColumnRange>& provenance() const noexcept { return provenance_; }
    const std::vector<std::string>& dropped_degenerate() const noexcept { return dropped_; }
    InverseMode mode() const noexcept { return mode_; }

private:
    std::vector<CompanyRecord> companies_;
    IndicatorRegistry registry_;
    std::vector<double> cells_;
    std::vector<ColumnRange> provenance_;
    std::vector<std::string> dropped_;
    InverseMode mode_;
};

/// Applies normalize_positive or normalize_inverse per column according to
/// each spec's direction. Constant columns are dropped with a warning
/// recorded in the result; if every column is constant the dataset is empty.
NormalizedMatrix normalize_matrix(const ValidatedMatrix& matrix, InverseMode mode);

} // namespace fincomp
