#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fincomp/normalize.hpp"

using namespace fincomp;

namespace {

ValidatedMatrix matrix_of(std::vector<double> cells, std::vector<IndicatorSpec> specs,
                          std::size_t rows) {
    std::vector<CompanyRecord> companies;
    for (std::size_t i = 0; i < rows; ++i) companies.push_back({"T" + std::to_string(i), ""});
    return ValidatedMatrix(std::move(companies), IndicatorRegistry(std::move(specs)),
                           std::move(cells));
}

} // namespace

TEST_CASE("positive direction maps min to 0 and max to 1") {
    const std::vector<double> col{2.0, 4.0, 6.0};
    const auto s = normalize_positive(col);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == 0.5);
    CHECK(s[2] == 1.0);
}

TEST_CASE("corrected inverse direction maps min to 1 and max to 0") {
    const std::vector<double> col{2.0, 4.0, 6.0};
    const auto s = normalize_inverse(col, InverseMode::Corrected);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 1.0);
    CHECK(s[1] == 0.5);
    CHECK(s[2] == 0.0);
}

TEST_CASE("literal inverse form lands in [-1, 0]") {
    const std::vector<double> col{2.0, 4.0, 6.0};
    const auto s = normalize_inverse(col, InverseMode::PaperLiteral);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 0.0);
    CHECK(s[1] == -0.5);
    CHECK(s[2] == -1.0);
}

TEST_CASE("constant columns are degenerate") {
    const std::vector<double> col{3.0, 3.0, 3.0};
    try {
        normalize_positive(col);
        FAIL("expected degenerate_column");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_column);
    }
    CHECK_THROWS_AS(normalize_inverse(col, InverseMode::Corrected), Error);
}

TEST_CASE("empty and non-finite columns are rejected") {
    CHECK_THROWS_AS(normalize_positive(std::vector<double>{}), Error);
    const std::vector<double> bad{1.0, std::nan(""), 2.0};
    try {
        normalize_positive(bad);
        FAIL("expected non_finite_value");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_finite_value);
    }
}

TEST_CASE("normalization is invariant under positive affine maps") {
    std::mt19937_64 rng(7);
    std::vector<double> col(40);
    for (auto& v : col) v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 10.0;

    const auto base = normalize_positive(col);
    for (double a : {0.001, 7.0, 1e6}) {
        for (double b : {-5.0, 0.0, 12.0}) {
            std::vector<double> mapped(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) mapped[i] = a * col[i] + b;
            const auto s = normalize_positive(mapped);
            for (std::size_t i = 0; i < col.size(); ++i) {
                CHECK(std::fabs(s[i] - base[i]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("normalize_matrix dispatches by direction and records ranges") {
    const auto m = matrix_of({2.0, 10.0, 4.0, 20.0, 6.0, 30.0},
                             {{"up", "U", Category::Profitability, Direction::Positive, ""},
                              {"down", "D", Category::Solvency, Direction::Inverse, ""}},
                             3);
    const auto n = normalize_matrix(m, InverseMode::Corrected);
    REQUIRE(n.rows() == 3);
    REQUIRE(n.cols() == 2);
    CHECK(n.at(0, 0) == 0.0);
    CHECK(n.at(2, 0) == 1.0);
    CHECK(n.at(0, 1) == 1.0); // raw min is best for inverse
    CHECK(n.at(2, 1) == 0.0);
    CHECK(n.dropped_degenerate().empty());
    REQUIRE(n.provenance().size() == 2);
    CHECK(n.provenance()[0].indicator_id == "up");
    CHECK(n.provenance()[0].min == 2.0);
    CHECK(n.provenance()[0].max == 6.0);
    CHECK(n.provenance()[1].min == 10.0);
    CHECK(n.provenance()[1].max == 30.0);
    CHECK(n.mode() == InverseMode::Corrected);
}

TEST_CASE("normalize_matrix drops degenerate columns and keeps going") {
    const auto m = matrix_of({2.0, 5.0, 1.0, 4.0, 5.0, 2.0, 6.0, 5.0, 3.0},
                             {{"a", "", Category::Profitability, Direction::Positive, ""},
                              {"flat", "", Category::Profitability, Direction::Positive, ""},
                              {"c", "", Category::Profitability, Direction::Positive, ""}},
                             3);
    const auto n = normalize_matrix(m, InverseMode::Corrected);
    REQUIRE(n.cols() == 2);
    CHECK(n.registry().at(0).id == "a");
    CHECK(n.registry().at(1).id == "c");
    REQUIRE(n.dropped_degenerate().size() == 1);
    CHECK(n.dropped_degenerate()[0] == "flat");
    CHECK(n.at(1, 1) == 0.5);
}

TEST_CASE("normalize_matrix with only degenerate columns is an empty dataset") {
    const auto m = matrix_of({1.0, 1.0, 1.0},
                             {{"flat", "", Category::Profitability, Direction::Positive, ""}}, 3);
    try {
        normalize_matrix(m, InverseMode::Corrected);
        FAIL("expected empty_dataset");
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_dataset);
    }
}

TEST_CASE("two point inverse column collapses to the endpoints") {
    const std::vector<double> col{10.0, 30.0};
    const auto s = normalize_inverse(col, InverseMode::Corrected);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == 1.0);
    CHECK(s[1] == 0.0);
}

TEST_CASE("two by two matrices come out exactly") {
    const auto both_up = matrix_of({1.0, 10.0, 3.0, 20.0},
                                   {{"p", "", Category::Profitability, Direction::Positive, ""},
                                    {"q", "", Category::Operational, Direction::Positive, ""}},
                                   2);
    const auto n1 = normalize_matrix(both_up, InverseMode::Corrected);
    CHECK(n1.at(0, 0) == 0.0);
    CHECK(n1.at(0, 1) == 0.0);
    CHECK(n1.at(1, 0) == 1.0);
    CHECK(n1.at(1, 1) == 1.0);

    const auto mixed = matrix_of({1.0, 10.0, 3.0, 20.0},
                                 {{"p", "", Category::Profitability, Direction::Positive, ""},
                                  {"d", "", Category::Solvency, Direction::Inverse, ""}},
                                 2);
    const auto n2 = normalize_matrix(mixed, InverseMode::Corrected);
    CHECK(n2.at(0, 0) == 0.0);
    CHECK(n2.at(0, 1) == 1.0);
    CHECK(n2.at(1, 0) == 1.0);
    CHECK(n2.at(1, 1) == 0.0);
}

TEST_CASE("inverse normalization is affine invariant in both modes") {
    std::mt19937_64 rng(8);
    std::vector<double> col(30);
    for (auto& v : col) v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 10.0;

    for (InverseMode mode : {InverseMode::Corrected, InverseMode::PaperLiteral}) {
        const auto base = normalize_inverse(col, mode);
        for (double a : {0.5, 40.0}) {
            for (double b : {-3.0, 9.0}) {
                std::vector<double> mapped(col.size());
                for (std::size_t i = 0; i < col.size(); ++i) mapped[i] = a * col[i] + b;
                const auto s = normalize_inverse(mapped, mode);
                for (std::size_t i = 0; i < col.size(); ++i) {
                    CHECK(std::fabs(s[i] - base[i]) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("inverse mode strings round trip") {
    CHECK(inverse_mode_from_string("corrected") == InverseMode::Corrected);
    CHECK(inverse_mode_from_string("paper-literal") == InverseMode::PaperLiteral);
    CHECK(to_string(InverseMode::Corrected) == "corrected");
    CHECK_THROWS_AS(inverse_mode_from_string("flipped"), Error);
}
