#include "fincomp/errors.hpp"

namespace fincomp {

std::string_view errc_name(errc code) noexcept {
    switch (code) {
    case errc::empty_dataset: return "EmptyDataset";
    case errc::non_finite_value: return "NonFiniteValue";
    case errc::missing_value_rejected: return "MissingValueRejected";
    case errc::all_missing_column: return "AllMissingColumn";
    case errc::unknown_indicator_column: return "UnknownIndicatorColumn";
    case errc::duplicate_ticker: return "DuplicateTicker";
    case errc::parse_error: return "ParseError";
    case errc::column_mismatch: return "ColumnMismatch";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::empty_scores: return "EmptyScores";
    case errc::empty_input: return "EmptyInput";
    case errc::rule_method_mismatch: return "RuleMethodMismatch";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::degenerate_column: return "DegenerateColumn";
    case errc::bandwidth_non_positive: return "BandwidthNonPositive";
    case errc::probabilities_not_normalized: return "ProbabilitiesNotNormalized";
    case errc::negative_probability: return "NegativeProbability";
    case errc::zero_column_sum: return "ZeroColumnSum";
    case errc::zero_entropy_sum: return "ZeroEntropySum";
    case errc::zero_variance_column: return "ZeroVarianceColumn";
    case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

int exit_code(errc code) noexcept {
    switch (code) {
    case errc::degenerate_column:
    case errc::bandwidth_non_positive:
    case errc::probabilities_not_normalized:
    case errc::negative_probability:
    case errc::zero_column_sum:
    case errc::zero_entropy_sum:
    case errc::zero_variance_column:
        return 2;
    case errc::io_error:
        return 3;
    default:
        return 1;
    }
}

} // namespace fincomp
