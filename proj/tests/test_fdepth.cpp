#include "fbox/fdepth.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>

using namespace fbox;

namespace {

constexpr auto H = UnivariateDepth::halfspace;
constexpr auto S = UnivariateDepth::simplicial;

FunctionalSample sample_of(const oracle::Rows& rows) { return FunctionalSample(Grid::equispaced(rows[0].size()), rows); }

const oracle::Rows diag3{{0, 0}, {1, 1}, {2, 2}};

Grid random_grid(std::mt19937_64& rng, std::size_t m) {
    std::vector<double> pts(m), w(m);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    for (std::size_t t = 0; t < m; ++t) {
        pts[t] = static_cast<double>(t) / static_cast<double>(m - 1);
        w[t] = u(rng);
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) {
        x /= total;
    }
    return Grid(pts, w);
}

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

std::vector<double> all_kinds(const FunctionalSample& s, std::span<const double> f) {
    return {integrated_depth(s, f, H), integrated_depth(s, f, S), infimal_depth(s, f, H), infimal_depth(s, f, S),
            mbd(s, f), band_depth(s, f)};
}

} // namespace

TEST_CASE("pointwise depth examples") {
    const auto s = sample_of(diag3);
    const auto h = pointwise_depths(s, H);
    CHECK(to_vec(h.row(0)) == std::vector<double>{1.0 / 3, 1.0 / 3});
    CHECK(to_vec(h.row(1)) == std::vector<double>{2.0 / 3, 2.0 / 3});
    CHECK(to_vec(h.row(2)) == std::vector<double>{1.0 / 3, 1.0 / 3});
    const auto p = pointwise_depths(s, S);
    CHECK(to_vec(p.row(0)) == std::vector<double>{5.0 / 9, 5.0 / 9});
    CHECK(to_vec(p.row(1)) == std::vector<double>{7.0 / 9, 7.0 / 9});
    const auto single = pointwise_depths(sample_of({{4, -1, 2}}), H);
    CHECK(to_vec(single.row(0)) == std::vector<double>{1, 1, 1});
}

TEST_CASE("integrated and infimal examples") {
    const auto s = sample_of(diag3);
    CHECK(integrated_depth(s, 1, H) == Catch::Approx(2.0 / 3));
    CHECK(integrated_depth(s, 0, H) == Catch::Approx(1.0 / 3));
    CHECK(integrated_depth(sample_of({{1, 2}, {1, 2}, {1, 2}}), 0, H) == 1.0);
    CHECK(infimal_depth(s, 1, H) == Catch::Approx(2.0 / 3));
    CHECK(infimal_depth(s, std::vector<double>{1, 0}, H) == Catch::Approx(1.0 / 3));
    CHECK(infimal_depth(s, std::vector<double>{1, 50}, H) == 0.0);
}

TEST_CASE("mbd and band depth examples") {
    const auto s = sample_of(diag3);
    CHECK(mbd(s, s.row(1)) == Catch::Approx(7.0 / 9));
    CHECK(mbd(s, s.row(0)) == Catch::Approx(5.0 / 9));
    CHECK(mbd(s, std::vector<double>{-10, -10}) == 0.0);
    CHECK(band_depth(s, s.row(1)) == Catch::Approx(7.0 / 9));
    const oracle::Rows crossing{{0, 2}, {2, 0}, {1, 1}};
    const std::vector<double> f{1, 1};
    CHECK(band_depth(sample_of(crossing), f) == oracle::band_depth(crossing, f));
    CHECK(band_depth(s, std::vector<double>{3, 3}) == 0.0);
}

TEST_CASE("depth names") {
    CHECK(parse_functional_depth("mbd") == FunctionalDepth::modified_band);
    CHECK(depth_label(FunctionalDepth::infimal, H) == "infimal-halfspace");
    CHECK_THROWS_AS(parse_functional_depth("spatial"), ValidationError);
}

TEST_CASE("compute_depths agrees with per-function depths") {
    std::mt19937_64 rng(31);
    const auto rows = oracle::random_integer_rows(rng, 15, 6, 0, 4);
    const auto s = sample_of(rows);
    for (auto kind : {FunctionalDepth::integrated, FunctionalDepth::infimal, FunctionalDepth::band,
                      FunctionalDepth::modified_band}) {
        for (auto base : {H, S}) {
            const auto d = compute_depths(s, kind, base);
            REQUIRE(d.values.size() == rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                REQUIRE(d.values[i] == depth_of(s, s.row(i), kind, base));
            }
        }
    }
}

TEST_CASE("functional depths match brute-force oracles") {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 1 + rng() % 8, m = 2 + rng() % 5;
        const auto rows = oracle::random_integer_rows(rng, n, m, 0, 3);
        const Grid g = random_grid(rng, m);
        const FunctionalSample s(g, rows);
        const std::vector<double> w(g.weights().begin(), g.weights().end());
        const auto f = oracle::random_integer_rows(rng, 1, m, -1, 4)[0];
        REQUIRE(band_depth(s, f) == oracle::band_depth(rows, f));
        REQUIRE(infimal_depth(s, f, H) == oracle::infimal(rows, f, false));
        REQUIRE(infimal_depth(s, f, S) == oracle::infimal(rows, f, true));
        REQUIRE(integrated_depth(s, f, H) == Catch::Approx(oracle::integrated(rows, f, w, false)).margin(1e-15));
        REQUIRE(mbd(s, f) == Catch::Approx(oracle::mbd(rows, f, w)).margin(1e-15));
    }
}

TEST_CASE("mbd is integrated simplicial depth") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 1 + rng() % 20, m = 2 + rng() % 9;
        const FunctionalSample s(random_grid(rng, m), oracle::random_real_rows(rng, n, m));
        const auto f = oracle::random_real_rows(rng, 1, m)[0];
        REQUIRE(std::abs(mbd(s, f) - integrated_depth(s, f, S)) <= 1e-15);
    }
}

TEST_CASE("infimal depth never exceeds integrated depth") {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 300; ++rep) {
        const auto rows = oracle::random_integer_rows(rng, 2 + rng() % 15, 2 + rng() % 8, 0, 5);
        const auto s = sample_of(rows);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (auto base : {H, S}) {
                REQUIRE(infimal_depth(s, i, base) <= integrated_depth(s, i, base) + 1e-15);
            }
        }
    }
}

TEST_CASE("function-affine transforms leave every depth unchanged") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> ua(0.5, 2.0), ub(-3.0, 3.0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 3 + rng() % 12, m = 2 + rng() % 8;
        const auto rows = oracle::random_integer_rows(rng, n, m, -2, 2);
        const auto f = oracle::random_integer_rows(rng, 1, m, -3, 3)[0];
        std::vector<double> a(m), b(m);
        for (std::size_t t = 0; t < m; ++t) {
            a[t] = ua(rng) * (rng() % 2 ? 1.0 : -1.0);
            b[t] = ub(rng);
        }
        auto map = [&](std::vector<double> x) {
            for (std::size_t t = 0; t < m; ++t) {
                x[t] = a[t] * x[t] + b[t];
            }
            return x;
        };
        oracle::Rows mapped;
        for (const auto& r : rows) {
            mapped.push_back(map(r));
        }
        const auto before = all_kinds(sample_of(rows), f);
        const auto after = all_kinds(sample_of(mapped), map(f));
        for (std::size_t k = 0; k < before.size(); ++k) {
            REQUIRE(std::abs(before[k] - after[k]) <= 1e-12);
        }
    }
}

TEST_CASE("infimal depth is invariant under column permutations and surjections") {
    std::mt19937_64 rng(36);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 3 + rng() % 12, m = 2 + rng() % 6;
        const auto rows = oracle::random_integer_rows(rng, n, m, 0, 4);
        const auto f = oracle::random_integer_rows(rng, 1, m, -1, 5)[0];
        // onto map: a permutation of all columns followed by random repeats
        std::vector<std::size_t> cols(m);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(cols.begin(), cols.end(), rng);
        const std::size_t extra = rng() % 4;
        for (std::size_t e = 0; e < extra; ++e) {
            cols.push_back(cols[rng() % m]);
        }
        oracle::Rows re;
        for (const auto& r : rows) {
            std::vector<double> x;
            for (auto c : cols) {
                x.push_back(r[c]);
            }
            re.push_back(x);
        }
        std::vector<double> fr;
        for (auto c : cols) {
            fr.push_back(f[c]);
        }
        for (auto base : {H, S}) {
            REQUIRE(infimal_depth(sample_of(rows), f, base) == infimal_depth(sample_of(re), fr, base));
        }
        if (extra == 0) {
            // a bijection with the weights carried along keeps integrated depth
            const Grid g = random_grid(rng, m);
            std::vector<double> w;
            for (auto c : cols) {
                w.push_back(g.weights()[c]);
            }
            const Grid gp(std::vector<double>(g.points().begin(), g.points().end()), w);
            REQUIRE(integrated_depth(FunctionalSample(g, rows), f, H) ==
                    Catch::Approx(integrated_depth(FunctionalSample(gp, re), fr, H)).margin(1e-15));
        }
    }
}

TEST_CASE("depth vanishes under growing constant offsets") {
    std::mt19937_64 rng(37);
    for (int rep = 0; rep < 20; ++rep) {
        const auto rows = oracle::random_real_rows(rng, 30, 10);
        const auto s = sample_of(rows);
        const auto f0 = rows[rng() % rows.size()];
        for (auto kind : {FunctionalDepth::integrated, FunctionalDepth::infimal, FunctionalDepth::band,
                          FunctionalDepth::modified_band}) {
            for (auto base : {H, S}) {
                double prev = 2.0;
                for (int e = 1; e <= 6; ++e) {
                    auto f = f0;
                    for (auto& x : f) {
                        x += std::pow(10.0, e);
                    }
                    const double d = depth_of(s, f, kind, base);
                    REQUIRE(d <= prev);
                    prev = d;
                }
                REQUIRE(prev == 0.0);
            }
        }
    }
}
