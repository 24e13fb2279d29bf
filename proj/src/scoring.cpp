#include "fincomp/scoring.hpp"

#include <algorithm>
#include <cmath>

namespace fincomp {

std::string_view to_string(WeightRule r) noexcept {
    return r == WeightRule::PaperProportional ? "paper" : "classic";
}

WeightRule weight_rule_from_string(std::string_view s) {
    if (s == "paper") return WeightRule::PaperProportional;
    if (s == "classic") return WeightRule::ClassicDivergence;
    throw Error(errc::parse_error, "unknown weight rule: '" + std::string(s) + "'");
}

WeightVector compute_weights(std::span<const EntropyValue> entropies, WeightRule rule) {
    if (entropies.empty()) {
        throw Error(errc::empty_input, "no entropies to weight");
    }
    const EntropyMethod method = entropies.front().method;
    for (const auto& e : entropies) {
        if (e.method != method) {
            throw Error(errc::rule_method_mismatch, "mixed entropy methods in one weight vector");
        }
        if (!(e.h >= 0.0) || !std::isfinite(e.h)) {
            throw Error(errc::invalid_argument,
                        "entropy for '" + e.indicator_id + "' must be finite and >= 0");
        }
    }
    if (rule == WeightRule::ClassicDivergence && method != EntropyMethod::Discrete) {
        throw Error(errc::rule_method_mismatch,
                    "classic divergence weights need entropies scaled to [0,1] "
                    "(discrete method with k = 1/ln n)");
    }

    WeightVector out;
    out.method = method;
    out.rule = rule;
    out.entries.reserve(entropies.size());

    double denom = 0.0;
    if (rule == WeightRule::PaperProportional) {
        for (const auto& e : entropies) denom += e.h;
        if (!(denom > 0.0)) {
            throw Error(errc::zero_entropy_sum, "entropies sum to zero");
        }
        for (const auto& e : entropies) out.entries.push_back({e.indicator_id, e.h, e.h / denom});
    } else {
        for (const auto& e : entropies) {
            if (e.h > 1.0) {
                throw Error(errc::rule_method_mismatch,
                            "entropy " + std::to_string(e.h) + " for '" + e.indicator_id +
                                "' exceeds 1; classic divergence needs [0,1]-scaled entropies");
            }
            denom += 1.0 - e.h;
        }
        if (!(denom > 0.0)) {
            throw Error(errc::zero_entropy_sum, "divergences (1 - h) sum to zero");
        }
        for (const auto& e : entropies) {
            out.entries.push_back({e.indicator_id, e.h, (1.0 - e.h) / denom});
        }
    }
    return out;
}

namespace {

std::vector<ScoreRow> ranked_rows(std::vector<TickerScore> scores) {
    std::sort(scores.begin(), scores.end(), [](const TickerScore& a, const TickerScore& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.ticker < b.ticker;
    });
    std::vector<ScoreRow> rows;
    rows.reserve(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) {
        rows.push_back({std::move(scores[i].ticker), scores[i].score, i + 1});
    }
    return rows;
}

} // namespace

ScoreBoard score_companies(const NormalizedMatrix& normalized, const WeightVector& weights) {
    if (weights.entries.size() != normalized.cols()) {
        throw Error(errc::column_mismatch,
                    "weight count " + std::to_string(weights.entries.size()) +
                        " does not match column count " + std::to_string(normalized.cols()));
    }
    for (std::size_t c = 0; c < normalized.cols(); ++c) {
        if (weights.entries[c].indicator_id != normalized.registry().at(c).id) {
            throw Error(errc::column_mismatch,
                        "weight order differs from column order at position " +
                            std::to_string(c) + ": '" + weights.entries[c].indicator_id +
                            "' vs '" + normalized.registry().at(c).id + "'");
        }
    }

    // In corrected mode every s is in [0,1] and the weights sum to 1, so the
    // exact score is too; clamp away the last-ulp noise of the float sum.
    const bool clamp = normalized.mode() == InverseMode::Corrected;
    std::vector<TickerScore> scores;
    scores.reserve(normalized.rows());
    for (std::size_t r = 0; r < normalized.rows(); ++r) {
        double f = 0.0; // left-to-right dot product, bit-reproducible
        for (std::size_t c = 0; c < normalized.cols(); ++c) {
            f += weights.entries[c].weight * normalized.at(r, c);
        }
        if (clamp) f = std::min(1.0, std::max(0.0, f));
        scores.push_back({normalized.companies()[r].ticker, f});
    }

    ScoreBoard board;
    board.rows = ranked_rows(std::move(scores));
    board.weights = weights;
    board.tie_policy = std::string(kTiePolicy);
    return board;
}

std::vector<ScoreRow> rank_table(std::span<const TickerScore> scores) {
    if (scores.empty()) {
        throw Error(errc::empty_scores, "nothing to rank");
    }
    for (const auto& s : scores) {
        if (!std::isfinite(s.score)) {
            throw Error(errc::non_finite_value, "score for '" + s.ticker + "' is not finite");
        }
    }
    return ranked_rows(std::vector<TickerScore>(scores.begin(), scores.end()));
}

} // namespace fincomp
