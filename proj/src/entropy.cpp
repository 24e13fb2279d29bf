#include "fincomp/entropy.hpp"

#include <cmath>
#include <string>

#include "fincomp/errors.hpp"

namespace fincomp {

std::string_view to_string(EntropyMethod m) noexcept {
    return m == EntropyMethod::Continuous ? "continuous" : "discrete";
}

EntropyMethod entropy_method_from_string(std::string_view s) {
    if (s == "continuous") return EntropyMethod::Continuous;
    if (s == "discrete") return EntropyMethod::Discrete;
    throw Error(errc::parse_error, "unknown entropy method: '" + std::string(s) + "'");
}

namespace {

// -t ln t with the analytic limit 0 at t = 0 (and 0 at t = 1).
double neg_t_ln_t(double t) { return t > 0.0 ? -t * std::log(t) : 0.0; }

void check_cdf(const CdfEstimate& cdf) {
    if (cdf.grid.size() < 2 || cdf.grid.size() != cdf.values.size()) {
        throw Error(errc::invalid_argument, "CDF estimate has malformed grid");
    }
    if (cdf.grid.front() != 0.0 || cdf.grid.back() != 1.0) {
        throw Error(errc::invalid_argument, "CDF grid must span [0,1]");
    }
    for (std::size_t g = 1; g < cdf.grid.size(); ++g) {
        if (!(cdf.grid[g] > cdf.grid[g - 1])) {
            throw Error(errc::invalid_argument, "CDF grid must be strictly increasing");
        }
        if (cdf.values[g] < cdf.values[g - 1]) {
            throw Error(errc::invalid_argument, "CDF values must be non-decreasing");
        }
    }
    for (double v : cdf.values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw Error(errc::invalid_argument, "CDF values must lie in [0,1]");
        }
    }
}

} // namespace

double continuous_entropy(const CdfEstimate& cdf) {
    check_cdf(cdf);
    // Composite trapezoid over the grid, accumulated left to right.
    double acc = 0.0;
    for (std::size_t g = 0; g + 1 < cdf.grid.size(); ++g) {
        const double width = cdf.grid[g + 1] - cdf.grid[g];
        acc += width * 0.5 * (neg_t_ln_t(cdf.values[g]) + neg_t_ln_t(cdf.values[g + 1]));
    }
    return acc;
}

double discrete_entropy(std::span<const double> probabilities, double k) {
    if (probabilities.empty()) {
        throw Error(errc::empty_input, "empty probability vector");
    }
    if (!(k > 0.0)) {
        throw Error(errc::invalid_argument, "k must be > 0");
    }
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) {
            throw Error(errc::negative_probability,
                        "negative probability " + std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw Error(errc::probabilities_not_normalized,
                    "probabilities sum to " + std::to_string(sum));
    }
    double acc = 0.0;
    for (double p : probabilities) acc += neg_t_ln_t(p);
    return k * acc;
}

EntropyValue column_entropy(std::span<const double> column, EntropyMethod method,
                            const ColumnEntropyParams& params, std::string indicator_id) {
    if (column.size() < 2) {
        throw Error(errc::degenerate_column, "column entropy needs at least 2 values");
    }
    if (method == EntropyMethod::Continuous) {
        const CdfEstimate cdf = estimate_cdf(column, params.bandwidth, params.grid_size);
        return {std::move(indicator_id), continuous_entropy(cdf), EntropyMethod::Continuous};
    }

    double sum = 0.0;
    for (double s : column) sum += s;
    if (!(sum > 0.0)) {
        throw Error(errc::zero_column_sum, "column sums to " + std::to_string(sum) +
                                               "; cannot form probabilities");
    }
    std::vector<double> p;
    p.reserve(column.size());
    for (double s : column) p.push_back(s / sum);
    const double k = 1.0 / std::log(static_cast<double>(column.size()));
    return {std::move(indicator_id), discrete_entropy(p, k), EntropyMethod::Discrete};
}

} // namespace fincomp
