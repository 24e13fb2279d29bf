#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fincomp {

/// Every failure the library can report, grouped by the exit status the
/// CLI maps it to: input/validation (1), numerical/degenerate data (2),
/// I/O (3).
enum class errc {
    // input / validation
    empty_dataset,
    non_finite_value,
    missing_value_rejected,
    all_missing_column,
    unknown_indicator_column,
    duplicate_ticker,
    parse_error,
    column_mismatch,
    length_mismatch,
    empty_scores,
    empty_input,
    rule_method_mismatch,
    invalid_argument,
    // numerical / degenerate data
    degenerate_column,
    bandwidth_non_positive,
    probabilities_not_normalized,
    negative_probability,
    zero_column_sum,
    zero_entropy_sum,
    zero_variance_column,
    // i/o
    io_error,
};

std::string_view errc_name(errc code) noexcept;

/// Process exit status for a given error class: 1 input/validation,
/// 2 numerical, 3 I/O.
int exit_code(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace fincomp
