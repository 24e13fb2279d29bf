#include "fincomp/stats.hpp"

#include <algorithm>
#include <cmath>

#include "fincomp/errors.hpp"

namespace fincomp {

DescriptiveStats describe(std::span<const double> values) {
    if (values.empty()) {
        throw Error(errc::empty_input, "describe needs at least one value");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw Error(errc::non_finite_value, "non-finite value in input");
        }
    }

    DescriptiveStats stats;
    const auto n = static_cast<double>(values.size());
    stats.obs = values.size();

    double sum = 0.0;
    for (double v : values) sum += v;
    stats.mean = sum / n;

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    stats.smallest = sorted.front();
    stats.largest = sorted.back();
    stats.median = values.size() % 2 == 1
                       ? sorted[values.size() / 2]
                       : (sorted[values.size() / 2 - 1] + sorted[values.size() / 2]) / 2.0;

    if (values.size() >= 2) {
        double ss = 0.0;
        for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
        stats.std_dev = std::sqrt(ss / (n - 1.0));
    }

    if (stats.std_dev > 0.0) {
        double sum3 = 0.0, sum4 = 0.0;
        for (double v : values) {
            const double z = (v - stats.mean) / stats.std_dev;
            sum3 += z * z * z;
            sum4 += z * z * z * z;
        }
        // Adjusted Fisher-Pearson skewness and adjusted sample excess
        // kurtosis, the spreadsheet conventions.
        if (values.size() >= 3) {
            stats.skewness = n / ((n - 1.0) * (n - 2.0)) * sum3;
        }
        if (values.size() >= 4) {
            stats.kurtosis = n * (n + 1.0) / ((n - 1.0) * (n - 2.0) * (n - 3.0)) * sum4 -
                             3.0 * (n - 1.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
        }
    }
    return stats;
}

CorrelationMatrix::CorrelationMatrix(std::vector<std::string> ids, std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
    if (values_.size() != ids_.size() * ids_.size()) {
        throw Error(errc::invalid_argument, "correlation grid dimensions inconsistent");
    }
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(errc::length_mismatch, "column lengths " + std::to_string(x.size()) +
                                               " and " + std::to_string(y.size()) + " differ");
    }
    if (x.size() < 2) {
        throw Error(errc::empty_input, "pearson needs at least 2 paired values");
    }
    const auto n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) {
        throw Error(errc::zero_variance_column, "zero-variance column in pearson");
    }
    return sxy / std::sqrt(sxx * syy);
}

CorrelationMatrix pearson_matrix(const std::vector<std::vector<double>>& columns,
                                 std::vector<std::string> ids) {
    if (columns.size() < 2) {
        throw Error(errc::invalid_argument, "pearson matrix needs at least 2 columns");
    }
    if (ids.size() != columns.size()) {
        throw Error(errc::invalid_argument, "id count does not match column count");
    }
    const std::size_t len = columns.front().size();
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != len) {
            throw Error(errc::length_mismatch,
                        "column '" + ids[c] + "' has length " +
                            std::to_string(columns[c].size()) + ", expected " +
                            std::to_string(len));
        }
        if (len < 2) {
            throw Error(errc::empty_input, "columns need at least 2 values");
        }
        double mean = 0.0;
        for (double v : columns[c]) mean += v;
        mean /= static_cast<double>(len);
        double ss = 0.0;
        for (double v : columns[c]) ss += (v - mean) * (v - mean);
        if (!(ss > 0.0)) {
            throw Error(errc::zero_variance_column, "column '" + ids[c] + "' has zero variance");
        }
    }

    const std::size_t m = columns.size();
    std::vector<double> grid(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        grid[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double r = pearson(columns[i], columns[j]);
            grid[i * m + j] = r;
            grid[j * m + i] = r; // mirror, symmetric by construction
        }
    }
    return CorrelationMatrix(std::move(ids), std::move(grid));
}

} // namespace fincomp
