#include "fincomp/kde.hpp"

#include <algorithm>
#include <cmath>

#include "fincomp/errors.hpp"

namespace fincomp {

std::string BandwidthPolicy::to_string() const {
    if (kind == Kind::RuleOfThumb) return "rot";
    char buf[64];
    std::snprintf(buf, sizeof buf, "fixed:%.17g", fixed_value);
    return buf;
}

BandwidthPolicy BandwidthPolicy::from_string(std::string_view s) {
    if (s == "rot" || s == "rule-of-thumb") return rule_of_thumb();
    constexpr std::string_view prefix = "fixed:";
    if (s.substr(0, prefix.size()) == prefix) {
        const std::string value(s.substr(prefix.size()));
        char* end = nullptr;
        const double h = std::strtod(value.c_str(), &end);
        if (end == value.c_str() + value.size() && !value.empty()) {
            return fixed(h);
        }
    }
    throw Error(errc::parse_error, "bad bandwidth spec: '" + std::string(s) +
                                       "' (expected 'rot' or 'fixed:<h>')");
}

namespace {

// Standard normal CDF via the complementary error function.
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Linear-interpolation quantile on sorted data (the spreadsheet convention).
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

double rule_of_thumb_bandwidth(std::span<const double> column) {
    const auto n = static_cast<double>(column.size());
    if (column.size() < 2) {
        throw Error(errc::degenerate_column, "bandwidth needs at least 2 values");
    }
    double mean = 0.0;
    for (double v : column) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : column) ss += (v - mean) * (v - mean);
    const double sigma = std::sqrt(ss / (n - 1.0));

    std::vector<double> sorted(column.begin(), column.end());
    std::sort(sorted.begin(), sorted.end());
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);

    const double spread = std::min(sigma, iqr / 1.34);
    const double h = 0.9 * spread * std::pow(n, -0.2);
    return std::max(h, kBandwidthFloor);
}

CdfEstimate estimate_cdf(std::span<const double> column, BandwidthPolicy policy,
                         std::size_t grid_size) {
    if (column.size() < 2) {
        throw Error(errc::degenerate_column, "need at least 2 data points");
    }
    bool distinct = false;
    for (double v : column) {
        if (!std::isfinite(v)) {
            throw Error(errc::non_finite_value, "non-finite value in column");
        }
        if (v != column[0]) distinct = true;
    }
    if (!distinct) {
        throw Error(errc::degenerate_column, "fewer than 2 distinct values");
    }
    if (grid_size < 64) {
        throw Error(errc::invalid_argument,
                    "grid_size must be >= 64, got " + std::to_string(grid_size));
    }

    double bandwidth = 0.0;
    if (policy.kind == BandwidthPolicy::Kind::Fixed) {
        if (!(policy.fixed_value > 0.0)) {
            throw Error(errc::bandwidth_non_positive,
                        "fixed bandwidth must be > 0, got " + std::to_string(policy.fixed_value));
        }
        bandwidth = policy.fixed_value;
    } else {
        bandwidth = rule_of_thumb_bandwidth(column);
    }

    // Exact mixture CDF: mean of per-kernel normal CDFs, summed left to
    // right so results do not depend on thread count.
    const auto mixture_cdf = [&](double x) {
        double acc = 0.0;
        for (double center : column) acc += normal_cdf((x - center) / bandwidth);
        return acc / static_cast<double>(column.size());
    };

    const double mass_at_0 = mixture_cdf(0.0);
    const double mass_at_1 = mixture_cdf(1.0);
    const double mass = mass_at_1 - mass_at_0;
    if (!(mass > 0.0)) {
        throw Error(errc::degenerate_column, "kernel mixture has no mass on [0,1]");
    }

    CdfEstimate out;
    out.bandwidth = bandwidth;
    out.sample_size = column.size();
    out.grid.resize(grid_size);
    out.values.resize(grid_size);

    const auto steps = static_cast<double>(grid_size - 1);
    for (std::size_t g = 0; g < grid_size; ++g) {
        out.grid[g] = static_cast<double>(g) / steps;
    }
    out.grid.front() = 0.0;
    out.grid.back() = 1.0;

    // Truncation-renormalization pins the endpoints to exactly 0 and 1; the
    // running max irons out any sub-ulp dips from rounded erfc sums.
    out.values.front() = 0.0;
    for (std::size_t g = 1; g + 1 < grid_size; ++g) {
        double v = (mixture_cdf(out.grid[g]) - mass_at_0) / mass;
        v = std::clamp(v, 0.0, 1.0);
        out.values[g] = std::max(v, out.values[g - 1]);
    }
    out.values.back() = 1.0;

    return out;
}

} // namespace fincomp
