#include "fbox/grid.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numeric>

using namespace fbox;
using Catch::Matchers::ContainsSubstring;

namespace {

Grid two_points() { return Grid::equispaced(2); }

FunctionalSample sample_of(const oracle::Rows& rows) { return FunctionalSample(Grid::equispaced(rows[0].size()), rows); }

Band band2(double l0, double l1, double u0, double u1) { return Band(two_points(), {l0, l1}, {u0, u1}); }

void require_band(const Band& b, std::vector<double> lo, std::vector<double> hi) {
    REQUIRE(std::vector<double>(b.lower().begin(), b.lower().end()) == lo);
    REQUIRE(std::vector<double>(b.upper().begin(), b.upper().end()) == hi);
}

} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(Grid({0.5}), ValidationError);
    CHECK_THROWS_AS(Grid({0.0, 0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(Grid({0.0, 1.5}), ValidationError);
    CHECK_THROWS_WITH(Grid({0.0, 1.0}, {0.3, 0.3}), ContainsSubstring("sum to 1"));
    CHECK_THROWS_AS(Grid({0.0, 1.0}, {-0.5, 1.5}), ValidationError);
    const Grid g = Grid::equispaced(5);
    REQUIRE(g.size() == 5);
    CHECK(g.points()[0] == 0.0);
    CHECK(g.points()[4] == 1.0);
    CHECK(std::accumulate(g.weights().begin(), g.weights().end(), 0.0) == Catch::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("functional sample validation") {
    CHECK_THROWS_AS(FunctionalSample(two_points(), 1, {0.0}), ValidationError);
    CHECK_THROWS_AS(FunctionalSample(two_points(), 1, {0.0, std::nan("")}), ValidationError);
    CHECK_THROWS_AS(FunctionalSample(two_points(), oracle::Rows{{1.0, 2.0}, {1.0}}), ValidationError);
    const auto s = sample_of({{0, 1}, {2, 3}});
    CHECK(s(1, 0) == 2.0);
    CHECK(s.column(1) == std::vector<double>{1, 3});
}

TEST_CASE("band_of examples") {
    const std::vector<std::size_t> both{0, 1};
    require_band(band_of(sample_of({{0, 0}, {2, 2}}), both), {0, 0}, {2, 2});
    const std::vector<std::size_t> one{0};
    require_band(band_of(sample_of({{1, 3}}), one), {1, 3}, {1, 3});
    require_band(band_of(sample_of({{0, 2}, {2, 0}}), both), {0, 0}, {2, 2});
}

TEST_CASE("band_of errors") {
    const auto s = sample_of({{0, 0}, {2, 2}});
    CHECK_THROWS_WITH(band_of(s, std::vector<std::size_t>{}), ContainsSubstring("empty band"));
    CHECK_THROWS_AS(band_of(s, std::vector<std::size_t>{0, 5}), std::out_of_range);
}

TEST_CASE("contains examples") {
    const Band b = band2(0, 0, 2, 2);
    CHECK(contains(b, std::vector<double>{1, 1}));
    CHECK(contains(b, std::vector<double>{0, 2}));
    CHECK_FALSE(contains(b, std::vector<double>{1, 3}));
    CHECK_THROWS_AS(contains(b, std::vector<double>{1, 1, 1}), ValidationError);
}

TEST_CASE("band rejects crossing envelopes") {
    CHECK_THROWS_AS(band2(0, 3, 2, 2), ValidationError);
}

TEST_CASE("width examples") {
    CHECK(width(band2(0, 0, 2, 2)) == 2.0);
    CHECK(width(band2(0, 1, 2, 1)) == 1.0);
    CHECK(width(band2(1, 3, 1, 3)) == 0.0);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_WITH(width(band2(0, -inf, 2, 2)), ContainsSubstring("unbounded band"));
}

TEST_CASE("inflate examples") {
    const std::vector<double> m{1, 1};
    require_band(inflate(band2(0, 0, 2, 2), m, 4.0), {-3, -3}, {5, 5});
    CHECK(inflate(band2(0, 0, 2, 2), m, 1.0) == band2(0, 0, 2, 2));
    require_band(inflate(band2(0, 0, 3, 3), m, 2.0), {-1, -1}, {5, 5});
    CHECK_THROWS_AS(inflate(band2(0, 0, 2, 2), std::vector<double>{3, 1}, 4.0), ValidationError);
    CHECK_THROWS_AS(inflate(band2(0, 0, 2, 2), m, 0.5), ValidationError);
}

TEST_CASE("midline of a band") {
    CHECK(midline(band2(0, 1, 2, 5)) == std::vector<double>{1, 3});
}

TEST_CASE("band_of is monotone and idempotent") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const auto rows = oracle::random_real_rows(rng, 12, 7);
        const auto s = sample_of(rows);
        std::vector<std::size_t> a, b;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto r = rng() % 3;
            if (r == 0) {
                a.push_back(i);
                b.push_back(i);
            } else if (r == 1) {
                b.push_back(i);
            }
        }
        if (a.empty()) {
            a.push_back(0);
            b.insert(b.begin(), 0);
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
        }
        const Band ba = band_of(s, a), bb = band_of(s, b);
        REQUIRE(is_subband(ba, bb));
        for (auto i : a) {
            REQUIRE(contains(ba, s.row(i)));
        }
    }
}

TEST_CASE("inflate is nested in the factor and scales the width") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 200; ++rep) {
        const auto rows = oracle::random_real_rows(rng, 9, 6);
        const auto s = sample_of(rows);
        std::vector<std::size_t> all(rows.size());
        std::iota(all.begin(), all.end(), 0);
        const Band b = band_of(s, all);
        const auto anchor = s.row(rng() % rows.size());
        const double c1 = 1.0 + static_cast<double>(rng() % 1000) / 250.0;
        const double c2 = c1 + static_cast<double>(rng() % 1000) / 250.0;
        const Band i1 = inflate(b, anchor, c1), i2 = inflate(b, anchor, c2);
        REQUIRE(is_subband(b, i1));
        REQUIRE(is_subband(i1, i2));
        REQUIRE(width(i1) == Catch::Approx(c1 * width(b)).epsilon(1e-12));
    }
}
