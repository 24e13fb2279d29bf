#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fincomp {

/// Spreadsheet-convention summary of one value list. std_dev uses the n-1
/// denominator; skewness is the adjusted Fisher-Pearson form (needs n >= 3)
/// and kurtosis the adjusted sample excess form (needs n >= 4); both also
/// need std_dev > 0 and are otherwise left unset.
struct DescriptiveStats {
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;
    std::optional<double> kurtosis;
    std::optional<double> skewness;
    double smallest = 0.0;
    double largest = 0.0;
    std::size_t obs = 0;
};

DescriptiveStats describe(std::span<const double> values);

/// Symmetric grid of Pearson coefficients with a unit diagonal.
class CorrelationMatrix {
public:
    CorrelationMatrix(std::vector<std::string> ids, std::vector<double> values);

    const std::vector<std::string>& ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    double at(std::size_t i, std::size_t j) const { return values_.at(i * size() + j); }

private:
    std::vector<std::string> ids_;
    std::vector<double> values_; // row-major, size x size
};

double pearson(std::span<const double> x, std::span<const double> y);

/// Pairwise Pearson coefficients over equal-length columns. Every column
/// needs at least 2 values and nonzero variance; the diagonal is exactly 1
/// and the lower triangle mirrors the upper.
CorrelationMatrix pearson_matrix(const std::vector<std::vector<double>>& columns,
                                 std::vector<std::string> ids);

} // namespace fincomp
