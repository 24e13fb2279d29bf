#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fincomp/entropy.hpp"
#include "fincomp/normalize.hpp"

namespace fincomp {

/// PaperProportional: w_j = H_j / sum(H), larger entropy gets larger weight.
/// ClassicDivergence: w_j = (1 - H_j) / sum(1 - H), the classic
/// entropy-weight form; it requires entropies already scaled to [0,1]
/// (Discrete method), offered for sensitivity analysis.
enum class WeightRule { PaperProportional, ClassicDivergence };

std::string_view to_string(WeightRule r) noexcept;
WeightRule weight_rule_from_string(std::string_view s);

struct WeightEntry {
    std::string indicator_id;
    double entropy = 0.0;
    double weight = 0.0;
};

/// Per-indicator weights. Entries keep the registry's surviving column
/// order; weights are non-negative and sum to 1 within 1e-12.
struct WeightVector {
    std::vector<WeightEntry> entries;
    EntropyMethod method = EntropyMethod::Continuous;
    WeightRule rule = WeightRule::PaperProportional;
};

WeightVector compute_weights(std::span<const EntropyValue> entropies, WeightRule rule);

struct ScoreRow {
    std::string ticker;
    double score = 0.0;
    std::size_t rank = 0; // 1-based
};

struct ScoreBoard {
    std::vector<ScoreRow> rows; // sorted by descending score
    WeightVector weights;
    std::string tie_policy;
};

inline constexpr std::string_view kTiePolicy = "descending score, ties broken by ascending ticker";

/// F_i = sum_j w_j * s_ij per company, summed left to right, then ranked.
/// Weight entries must align one-to-one with the normalized columns.
ScoreBoard score_companies(const NormalizedMatrix& normalized, const WeightVector& weights);

struct TickerScore {
    std::string ticker;
    double score = 0.0;
};

/// Descending sort with 1-based ranks; equal scores are ordered by ascending
/// ticker and still receive distinct consecutive ranks.
std::vector<ScoreRow> rank_table(std::span<const TickerScore> scores);

} // namespace fincomp
