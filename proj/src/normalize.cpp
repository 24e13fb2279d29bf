#include "fincomp/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace fincomp {

std::string_view to_string(InverseMode m) noexcept {
    return m == InverseMode::Corrected ? "corrected" : "paper-literal";
}

InverseMode inverse_mode_from_string(std::string_view s) {
    if (s == "corrected") return InverseMode::Corrected;
    if (s == "paper-literal") return InverseMode::PaperLiteral;
    throw Error(errc::parse_error, "unknown inverse mode: '" + std::string(s) + "'");
}

namespace {

struct MinMax {
    double min, max;
};

MinMax column_extent(std::span<const double> column) {
    if (column.empty()) {
        throw Error(errc::empty_input, "cannot normalize an empty column");
    }
    double lo = column[0], hi = column[0];
    for (double v : column) {
        if (!std::isfinite(v)) {
            throw Error(errc::non_finite_value, "non-finite value in column");
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) {
        throw Error(errc::degenerate_column,
                    "constant column (min == max == " + std::to_string(lo) + ")");
    }
    return {lo, hi};
}

} // namespace

std::vector<double> normalize_positive(std::span<const double> column) {
    const auto [lo, hi] = column_extent(column);
    const double range = hi - lo;
    std::vector<double> out;
    out.reserve(column.size());
    for (double v : column) out.push_back((v - lo) / range);
    return out;
}

std::vector<double> normalize_inverse(std::span<const double> column, InverseMode mode) {
    const auto [lo, hi] = column_extent(column);
    const double range = hi - lo;
    std::vector<double> out;
    out.reserve(column.size());
    if (mode == InverseMode::Corrected) {
        for (double v : column) out.push_back((hi - v) / range);
    } else {
        for (double v : column) out.push_back((lo - v) / range);
    }
    return out;
}

NormalizedMatrix::NormalizedMatrix(std::vector<CompanyRecord> companies,
                                   IndicatorRegistry registry, std::vector<double> cells,
                                   std::vector<ColumnRange> provenance,
                                   std::vector<std::string> dropped_degenerate, InverseMode mode)
    : companies_(std::move(companies)), registry_(std::move(registry)), cells_(std::move(cells)),
      provenance_(std::move(provenance)), dropped_(std::move(dropped_degenerate)), mode_(mode) {
    if (cells_.size() != companies_.size() * registry_.size() ||
        provenance_.size() != registry_.size()) {
        throw Error(errc::invalid_argument, "normalized grid dimensions inconsistent");
    }
}

std::vector<double> NormalizedMatrix::column(std::size_t col) const {
    std::vector<double> out;
    out.reserve(rows());
    for (std::size_t r = 0; r < rows(); ++r) out.push_back(at(r, col));
    return out;
}

NormalizedMatrix normalize_matrix(const ValidatedMatrix& matrix, InverseMode mode) {
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();

    std::vector<std::string> dropped;
    std::vector<IndicatorSpec> kept_specs;
    std::vector<ColumnRange> provenance;
    std::vector<std::vector<double>> kept_columns;

    for (std::size_t c = 0; c < cols; ++c) {
        const IndicatorSpec& spec = matrix.registry().at(c);
        const std::vector<double> raw = matrix.column(c);
        const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
        if (!(*hi_it > *lo_it)) {
            dropped.push_back(spec.id);
            continue;
        }
        kept_columns.push_back(spec.direction == Direction::Positive
                                   ? normalize_positive(raw)
                                   : normalize_inverse(raw, mode));
        kept_specs.push_back(spec);
        provenance.push_back({spec.id, *lo_it, *hi_it});
    }

    if (kept_specs.empty()) {
        throw Error(errc::empty_dataset, "all columns are degenerate");
    }

    const std::size_t out_cols = kept_specs.size();
    std::vector<double> cells(rows * out_cols);
    for (std::size_t c = 0; c < out_cols; ++c) {
        for (std::size_t r = 0; r < rows; ++r) cells[r * out_cols + c] = kept_columns[c][r];
    }

    return NormalizedMatrix(matrix.companies(), IndicatorRegistry(std::move(kept_specs)),
                            std::move(cells), std::move(provenance), std::move(dropped), mode);
}

} // namespace fincomp
