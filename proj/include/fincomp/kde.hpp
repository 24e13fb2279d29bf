#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fincomp {

/// Kernel bandwidth selection: the rule-of-thumb
/// h = 0.9 * min(sigma, IQR/1.34) * n^(-1/5), floored at 1e-3, or a fixed
/// user-supplied h > 0.
struct BandwidthPolicy {
    enum class Kind { RuleOfThumb, Fixed };
    Kind kind = Kind::RuleOfThumb;
    double fixed_value = 0.0;

    static BandwidthPolicy rule_of_thumb() { return {}; }
    static BandwidthPolicy fixed(double h) { return {Kind::Fixed, h}; }

    /// CLI grammar: "rot" or "fixed:<h>".
    std::string to_string() const;
    static BandwidthPolicy from_string(std::string_view s);
};

/// Grid-sampled cumulative distribution on [0,1]: grid is strictly
/// increasing from 0 to 1, values are non-decreasing with values.front()==0
/// and values.back()==1 exactly (enforced by truncation-renormalization).
struct CdfEstimate {
    std::vector<double> grid;
    std::vector<double> values;
    double bandwidth = 0.0;
    std::size_t sample_size = 0;
};

/// Floor applied to the rule-of-thumb bandwidth so near-duplicate data does
/// not collapse the kernel.
inline constexpr double kBandwidthFloor = 1e-3;

double rule_of_thumb_bandwidth(std::span<const double> column);

/// Builds a Gaussian kernel mixture over the data, evaluates its exact
/// cumulative form on a uniform grid over [0,1] and renormalizes it so the
/// endpoints are exactly 0 and 1. Requires at least 2 distinct values and
/// grid_size >= 64.
CdfEstimate estimate_cdf(std::span<const double> column, BandwidthPolicy policy,
                         std::size_t grid_size);

} // namespace fincomp
