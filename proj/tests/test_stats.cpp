#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "fincomp/stats.hpp"
#include "fincomp/errors.hpp"

using namespace fincomp;

namespace {

std::vector<double> pseudo_values(std::size_t n, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::vector<double> values(n);
    for (auto& v : values) v = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.3) * scale;
    return values;
}

// straight textbook recomputation, independent of the library internals
struct Brute {
    double mean, median, sd, skew, kurt, lo, hi;
};

Brute brute_force(std::vector<double> values) {
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;

    std::sort(values.begin(), values.end());
    const std::size_t half = values.size() / 2;
    const double median = values.size() % 2 == 1
                              ? values[half]
                              : 0.5 * (values[half - 1] + values[half]);

    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));

    double z3 = 0.0, z4 = 0.0;
    for (double v : values) {
        const double z = (v - mean) / sd;
        z3 += z * z * z;
        z4 += z * z * z * z;
    }
    const double skew = n / ((n - 1.0) * (n - 2.0)) * z3;
    const double kurt = n * (n + 1.0) / ((n - 1.0) * (n - 2.0) * (n - 3.0)) * z4 -
                        3.0 * (n - 1.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0));
    return {mean, median, sd, skew, kurt, values.front(), values.back()};
}

double brute_pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

TEST_CASE("describe matches a hand computation on a tiny list") {
    const std::vector<double> values{1.0, 2.0, 3.0, 4.0};
    const auto d = describe(values);
    CHECK(d.mean == 2.5);
    CHECK(d.median == 2.5); // even count: midpoint
    CHECK(d.std_dev == doctest::Approx(1.2909944487358056).epsilon(1e-15));
    REQUIRE(d.skewness.has_value());
    CHECK(*d.skewness == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    REQUIRE(d.kurtosis.has_value());
    CHECK(*d.kurtosis == doctest::Approx(-1.2).epsilon(1e-12));
    CHECK(d.smallest == 1.0);
    CHECK(d.largest == 4.0);
    CHECK(d.obs == 4);
}

TEST_CASE("describe matches brute force on random data") {
    for (std::uint64_t seed : {10ull, 20ull, 30ull, 40ull}) {
        const auto values = pseudo_values(49, seed, 0.1);
        const auto d = describe(values);
        const auto b = brute_force(values);
        CHECK(std::fabs(d.mean - b.mean) <= 1e-10);
        CHECK(std::fabs(d.median - b.median) <= 1e-10);
        CHECK(std::fabs(d.std_dev - b.sd) <= 1e-10);
        REQUIRE(d.skewness.has_value());
        CHECK(std::fabs(*d.skewness - b.skew) <= 1e-10);
        REQUIRE(d.kurtosis.has_value());
        CHECK(std::fabs(*d.kurtosis - b.kurt) <= 1e-10);
        CHECK(d.smallest == b.lo);
        CHECK(d.largest == b.hi);
    }
}

TEST_CASE("describe needs enough observations for the shape moments") {
    const auto d2 = describe(std::vector<double>{1.0, 2.0});
    CHECK_FALSE(d2.skewness.has_value());
    CHECK_FALSE(d2.kurtosis.has_value());
    CHECK(d2.std_dev > 0.0);

    const auto d3 = describe(std::vector<double>{1.0, 2.0, 4.0});
    CHECK(d3.skewness.has_value());
    CHECK_FALSE(d3.kurtosis.has_value());

    const auto d1 = describe(std::vector<double>{7.0});
    CHECK(d1.mean == 7.0);
    CHECK(d1.median == 7.0);
    CHECK(d1.std_dev == 0.0);
    CHECK(d1.obs == 1);
}

TEST_CASE("constant data has no defined shape moments") {
    const auto d = describe(std::vector<double>{3.0, 3.0, 3.0, 3.0, 3.0});
    CHECK(d.std_dev == 0.0);
    CHECK_FALSE(d.skewness.has_value());
    CHECK_FALSE(d.kurtosis.has_value());
}

TEST_CASE("describe rejects empty and non-finite input") {
    try {
        describe(std::vector<double>{});
        FAIL("expected empty_input");
    } catch (const Error& e) {
        CHECK(e.code() == errc::empty_input);
    }
    CHECK_THROWS_AS(describe(std::vector<double>{1.0, std::nan("")}), Error);
}

TEST_CASE("pearson of an exact linear map is +-1") {
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = 2.0 * x[i] + 1.0;
    CHECK(pearson(x, y) == doctest::Approx(1.0).epsilon(1e-12));
    for (auto& v : y) v = -v;
    CHECK(pearson(x, y) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("pearson of a column with itself is one") {
    const auto x = pseudo_values(50, 77);
    CHECK(pearson(x, x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pearson matches brute force on random pairs") {
    for (std::uint64_t seed : {3ull, 6ull, 9ull}) {
        const auto x = pseudo_values(40, seed);
        const auto y = pseudo_values(40, seed + 1000);
        CHECK(std::fabs(pearson(x, y) - brute_pearson(x, y)) <= 1e-10);
    }
}

TEST_CASE("one percent noise keeps correlation above 0.99") {
    const auto x = pseudo_values(50, 404, 10.0);
    std::mt19937_64 rng(505);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double noise = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.02;
        y[i] = x[i] * (1.0 + noise);
    }
    CHECK(pearson(x, y) >= 0.99);
}

TEST_CASE("pearson validates its input") {
    try {
        pearson(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0});
        FAIL("expected length_mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == errc::length_mismatch);
    }
    try {
        pearson(std::vector<double>{2.0, 2.0}, std::vector<double>{1.0, 3.0});
        FAIL("expected zero_variance_column");
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_variance_column);
    }
    CHECK_THROWS_AS(pearson(std::vector<double>{1.0}, std::vector<double>{2.0}), Error);
}

TEST_CASE("pearson matrix is symmetric with a unit diagonal") {
    const std::vector<std::vector<double>> cols{pseudo_values(30, 1), pseudo_values(30, 2),
                                                pseudo_values(30, 3)};
    const auto m = pearson_matrix(cols, {"x1", "x2", "x3"});
    REQUIRE(m.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(m.at(i, i) == 1.0);
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(m.at(i, j) == m.at(j, i));
            CHECK(std::fabs(m.at(i, j)) <= 1.0 + 1e-12);
        }
    }
    CHECK(m.at(0, 1) == doctest::Approx(pearson(cols[0], cols[1])).epsilon(1e-15));
    CHECK(m.at(1, 2) == doctest::Approx(brute_pearson(cols[1], cols[2])).epsilon(1e-10));
}

TEST_CASE("pearson matrix names the offending column") {
    const std::vector<std::vector<double>> cols{{1.0, 2.0, 3.0}, {4.0, 4.0, 4.0}};
    try {
        pearson_matrix(cols, {"good", "flat"});
        FAIL("expected zero_variance_column");
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_variance_column);
        CHECK(std::string(e.what()).find("flat") != std::string::npos);
    }

    const std::vector<std::vector<double>> ragged{{1.0, 2.0, 3.0}, {4.0, 5.0}};
    try {
        pearson_matrix(ragged, {"a", "b"});
        FAIL("expected length_mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == errc::length_mismatch);
        CHECK(std::string(e.what()).find("b") != std::string::npos);
    }
}

TEST_CASE("pearson matrix needs at least two columns") {
    CHECK_THROWS_AS(pearson_matrix({{1.0, 2.0}}, {"only"}), Error);
}

TEST_CASE("describe of one two three is exact") {
    const auto d = describe(std::vector<double>{1.0, 2.0, 3.0});
    CHECK(d.mean == 2.0);
    CHECK(d.median == 2.0);
    CHECK(d.std_dev == 1.0);
    CHECK(d.smallest == 1.0);
    CHECK(d.largest == 3.0);
    CHECK(d.obs == 3);
    REQUIRE(d.skewness.has_value());
    CHECK(*d.skewness == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK_FALSE(d.kurtosis.has_value());
}

TEST_CASE("describe matches brute force on a thousand points") {
    const auto values = pseudo_values(1000, 424242, 7.0);
    const auto d = describe(values);
    const auto b = brute_force(values);
    CHECK(std::fabs(d.mean - b.mean) <= 1e-10);
    CHECK(std::fabs(d.median - b.median) <= 1e-10);
    CHECK(std::fabs(d.std_dev - b.sd) <= 1e-10);
    REQUIRE(d.skewness.has_value());
    CHECK(std::fabs(*d.skewness - b.skew) <= 1e-9);
    REQUIRE(d.kurtosis.has_value());
    CHECK(std::fabs(*d.kurtosis - b.kurt) <= 1e-9);
    CHECK(d.obs == 1000);
}

TEST_CASE("four column matrix matches pairwise calls cell by cell") {
    const std::vector<std::vector<double>> cols{pseudo_values(25, 11), pseudo_values(25, 12),
                                                pseudo_values(25, 13), pseudo_values(25, 14)};
    const auto m = pearson_matrix(cols, {"roe", "npm", "eps", "der"});
    REQUIRE(m.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            CHECK(m.at(i, j) == doctest::Approx(pearson(cols[i], cols[j])).epsilon(1e-15));
        }
    }
}

TEST_CASE("correlation survives positive affine maps and flips under negation") {
    const auto x = pseudo_values(40, 2024);
    const auto y = pseudo_values(40, 2025);
    const double base = pearson(x, y);

    std::vector<double> scaled(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) scaled[i] = 3.5 * y[i] + 12.0;
    CHECK(std::fabs(pearson(x, scaled) - base) <= 1e-12);

    std::vector<double> flipped(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) flipped[i] = -y[i];
    CHECK(std::fabs(pearson(x, flipped) + base) <= 1e-12);

    const auto before = pearson_matrix({x, y}, {"a", "b"});
    const auto after = pearson_matrix({x, flipped}, {"a", "b"});
    CHECK(std::fabs(after.at(0, 1) + before.at(0, 1)) <= 1e-12);
}
