#pragma once

#include <span>
#include <string>
#include <string_view>

#include "fincomp/kde.hpp"

namespace fincomp {

enum class EntropyMethod { Continuous, Discrete };

std::string_view to_string(EntropyMethod m) noexcept;
EntropyMethod entropy_method_from_string(std::string_view s);

struct EntropyValue {
    std::string indicator_id;
    double h = 0.0;
    EntropyMethod method = EntropyMethod::Continuous;
};

/// -integral over [0,1] of phi * ln(phi), composite trapezoid on the
/// estimate's grid, with the integrand defined as 0 where phi == 0. The
/// result lies in [0, 1/e].
double continuous_entropy(const CdfEstimate& cdf);

/// Shannon entropy -k * sum p_i ln p_i with 0 * ln 0 := 0. p must be a
/// probability vector (non-negative, summing to 1 within 1e-9).
double discrete_entropy(std::span<const double> probabilities, double k);

struct ColumnEntropyParams {
    BandwidthPolicy bandwidth;
    std::size_t grid_size = 1025;
};

/// Continuous: estimate_cdf then continuous_entropy. Discrete: converts the
/// column to p_i = s_i / sum(s) and applies discrete_entropy with
/// k = 1/ln(n), scaling the result to [0,1].
EntropyValue column_entropy(std::span<const double> column, EntropyMethod method,
                            const ColumnEntropyParams& params, std::string indicator_id = {});

} // namespace fincomp
