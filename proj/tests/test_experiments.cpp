#include "fbox/experiments.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

using namespace fbox;

namespace {

// Brute-force median-condition check on the lattice {0, ..., k-1}: every
// value strictly between lattice points has the depth of the midpoint.
bool md_holds(const std::vector<double>& v, int k) {
    std::vector<double> probes;
    for (int p = -1; p <= 2 * k - 1; ++p) {
        probes.push_back(0.5 * p);
    }
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    double best = 0.0;
    for (double u : probes) {
        best = std::max(best, oracle::halfspace(u, v));
    }
    double inside = 1.0, outside = 0.0;
    for (double u : probes) {
        const double d = oracle::simplicial(u, v);
        if (oracle::halfspace(u, v) == best) {
            inside = std::min(inside, d);
        } else {
            outside = std::max(outside, d);
        }
    }
    return inside > outside && inside > 0.0;
}

ExperimentConfig small_config(std::size_t threads) {
    ExperimentConfig c;
    c.ns = {20, 60};
    c.log_hs = {-3.0, 1.0};
    c.runs = 6;
    c.n_test = 100;
    c.grid_size = 31;
    c.seed = 17;
    c.threads = threads;
    return c;
}

std::vector<std::size_t> lowest(const std::vector<double>& v, std::size_t k) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> r(hi - lo);
    std::iota(r.begin(), r.end(), lo);
    return r;
}

} // namespace

TEST_CASE("summary uses the sample standard deviation") {
    const auto s = summarize({1, 2, 3, 4});
    CHECK(s.mean == 2.5);
    CHECK(s.sd == Catch::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(summarize({7}).sd == 0.0);
}

TEST_CASE("variants and configs") {
    CHECK(default_variants().size() == 4);
    CHECK(parse_variant("erl").refinement == Refinement::erl);
    CHECK_THROWS_AS(parse_variant("median"), ValidationError);
    CHECK(ExperimentConfig::desk().ns == std::vector<std::size_t>{50, 500});
    CHECK(ExperimentConfig::full().runs == 100);
    auto bad = small_config(1);
    bad.ns = {3};
    CHECK_THROWS_AS(run_table_study(bad), ValidationError);
    bad = small_config(1);
    bad.runs = 0;
    CHECK_THROWS_AS(run_table_study(bad), ValidationError);
}

TEST_CASE("motivating example layout") {
    const auto ex = generate_motivating_example(1);
    REQUIRE(ex.sample.size() == 120);
    REQUIRE(ex.sample.points() == 101);
    CHECK(std::count(ex.labels.begin(), ex.labels.end(), CurveLabel::base) == 100);
    CHECK(std::count(ex.labels.begin(), ex.labels.end(), CurveLabel::local) == 10);
    CHECK(std::count(ex.labels.begin(), ex.labels.end(), CurveLabel::global) == 10);
    CHECK(ex.labels[99] == CurveLabel::base);
    CHECK(ex.labels[100] == CurveLabel::local);
    CHECK(ex.labels[110] == CurveLabel::global);
    const auto again = generate_motivating_example(1);
    CHECK(std::equal(ex.sample.values().begin(), ex.sample.values().end(), again.sample.values().begin()));
}

TEST_CASE("MBD ranks the global outliers lowest, erl the local ones") {
    const auto ex = generate_motivating_example(1);
    const auto m = compute_depths(ex.sample, FunctionalDepth::modified_band, UnivariateDepth::simplicial);
    CHECK(lowest(m.values, 10) == range(110, 120));
    const auto e = rank_sample(ex.sample, FunctionalDepth::infimal, UnivariateDepth::halfspace, Refinement::erl);
    std::vector<std::size_t> last(e.order.end() - 10, e.order.end());
    std::sort(last.begin(), last.end());
    CHECK(last == range(100, 110));
}

TEST_CASE("median condition witness search") {
    CHECK_FALSE(find_simplicial_md_witness(1, 4).has_value());
    CHECK_THROWS_AS(find_simplicial_md_witness(6, 4), ValidationError);
    CHECK_THROWS_AS(find_simplicial_md_witness(3, 0), ValidationError);
    for (std::size_t support = 2; support <= 4; ++support) {
        for (std::size_t den = 1; den <= 6; ++den) {
            bool any = false;
            // all count vectors summing to den over `support` lattice points
            std::vector<std::size_t> c(support, 0);
            const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t p, std::size_t left) {
                if (p + 1 == support) {
                    c[p] = left;
                    std::vector<double> v;
                    for (std::size_t q = 0; q < support; ++q) {
                        v.insert(v.end(), c[q], static_cast<double>(q));
                    }
                    any = any || !md_holds(v, static_cast<int>(support));
                    return;
                }
                for (std::size_t k = 0; k <= left; ++k) {
                    c[p] = k;
                    rec(p + 1, left - k);
                }
            };
            rec(0, den);
            const auto w = find_simplicial_md_witness(support, den);
            REQUIRE(w.has_value() == any);
            if (w) {
                REQUIRE_FALSE(md_holds(*w, static_cast<int>(support)));
            }
        }
    }
}

TEST_CASE("study results do not depend on the thread count") {
    const auto a = run_table_study(small_config(1));
    const auto b = run_table_study(small_config(3));
    REQUIRE(a.cells.size() == 2 * 2 * 4);
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        REQUIRE(a.cells[k].variant == b.cells[k].variant);
        for (std::size_t r = 0; r < a.cells[k].runs.size(); ++r) {
            REQUIRE(a.cells[k].runs[r].values == b.cells[k].runs[r].values);
        }
    }
}

TEST_CASE("study invariants") {
    const auto rep = run_table_study(small_config(2));
    for (const auto& cell : rep.cells) {
        REQUIRE(cell.runs.size() == 6);
        for (const auto& r : cell.runs) {
            REQUIRE(r[Statistic::central_coverage] >= 50.0);
            REQUIRE(r[Statistic::whisker_coverage] >= r[Statistic::central_coverage]);
            REQUIRE(r[Statistic::whisker_coverage] <= 100.0);
            REQUIRE(r[Statistic::mean_width] >= 0.0);
        }
        if (cell.variant == "erl" || cell.variant == "area") {
            const double expected = 100.0 * std::ceil(0.5 * static_cast<double>(cell.n)) / static_cast<double>(cell.n);
            REQUIRE(cell[Statistic::central_coverage].mean == expected);
            REQUIRE(cell[Statistic::central_coverage].sd == 0.0);
        }
    }
    CHECK_THROWS(rep.cell("erl", 21, -3.0));
    CHECK(rep.cell("infimal", 60, 1.0).n == 60);
}
