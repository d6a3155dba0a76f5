#ifndef FBOX_EXPERIMENTS_HPP
#define FBOX_EXPERIMENTS_HPP

#include "fbox/boxplot.hpp"
#include "fbox/depth1d.hpp"
#include "fbox/fdepth.hpp"
#include "fbox/grid.hpp"
#include "fbox/ranking.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file experiments.hpp
 *
 * @brief Monte-Carlo study of boxplot characteristics on Gaussian process
 * samples, the local/global outlier example, and a brute-force search for
 * distributions violating the median condition.
 */

namespace fbox {

/// A boxplot construction compared in the study.
struct Variant {
    std::string name;
    FunctionalDepth depth;
    UnivariateDepth base;
    Refinement refinement;

    BoxplotOptions options(double tau, double factor, WhiskerAnchor anchor = WhiskerAnchor::median) const;
};

/// integrated, infimal, erl and area, all on the halfspace depth.
std::vector<Variant> default_variants();
Variant parse_variant(std::string_view name, UnivariateDepth base = UnivariateDepth::halfspace);

struct ExperimentConfig {
    std::vector<Variant> variants = default_variants();
    std::vector<std::size_t> ns{50, 500};
    std::vector<double> log_hs{-4.0, -2.0, 0.0, 2.0};
    std::size_t runs = 50;
    std::size_t n_test = 2000;
    std::size_t grid_size = 101;
    std::uint64_t seed = 20240601;
    double tau = 0.5;
    double factor = 4.0;
    /// The study adds 1.5 central widths on both sides (fence rule); the
    /// median-anchored reading gives visibly tighter whiskers for small n.
    WhiskerAnchor anchor = WhiskerAnchor::midline;
    /// Worker threads; results do not depend on it.
    std::size_t threads = 1;

    /// n in {50, 500}, 50 runs, 2000 test curves.
    static ExperimentConfig desk();
    /// n in {50, 500, 5000}, 100 runs, 10000 test curves.
    static ExperimentConfig full();

    void validate() const;
};

enum class Statistic { central_coverage, whisker_coverage, mean_width, test_coverage };
inline constexpr std::array<Statistic, 4> all_statistics{Statistic::central_coverage, Statistic::whisker_coverage,
                                                         Statistic::mean_width, Statistic::test_coverage};
std::string_view to_string(Statistic s);

/// Mean and sample standard deviation (n - 1 denominator).
struct Summary {
    double mean = 0.0;
    double sd = 0.0;
};

Summary summarize(const std::vector<double>& values);

/// Characteristics of one boxplot on one run.
struct RunStatistics {
    std::array<double, 4> values{};
    double operator[](Statistic s) const { return values[static_cast<std::size_t>(s)]; }
};

struct CellResult {
    std::string variant;
    std::size_t n;
    double log_h;
    /// One entry per run, in run order.
    std::vector<RunStatistics> runs;
    std::array<Summary, 4> summary;

    const Summary& operator[](Statistic s) const { return summary[static_cast<std::size_t>(s)]; }
};

struct ExperimentReport {
    ExperimentConfig config;
    /// Ordered by n, then log h, then variant.
    std::vector<CellResult> cells;

    const CellResult& cell(std::string_view variant, std::size_t n, double log_h) const;
};

/// Evaluate one boxplot on its sample and an independent test sample (may be empty).
RunStatistics evaluate_boxplot(const FunctionalSample& sample, const FunctionalSample* test,
                               const BoxplotOptions& options);

/**
 * Run every (n, log h) cell for `runs` independent replications. Each run draws
 * one sample and one test sample from seeds derived from (seed, n, log h, run),
 * and evaluates all variants on them. Runs execute on `threads` workers and are
 * aggregated in run order.
 */
ExperimentReport run_table_study(const ExperimentConfig& config);

enum class CurveLabel { base, local, global };
std::string_view to_string(CurveLabel label);

/// Constants of the local/global outlier example.
struct MotivatingExampleConfig {
    std::size_t n_base = 100;
    std::size_t n_local = 10;
    std::size_t n_global = 10;
    std::size_t grid_size = 101;
    double log_h = -5.0;
    /// Local outlier: `scale * draw +- amplitude * exp(-(t - t0)^2 / width)`, t0 in (0.1, 0.9).
    /// The shrunk draw keeps the curve central away from the bump.
    double local_scale = 0.2;
    double local_amplitude = 24.0;
    double local_width = 0.004;
    /// Draw t0 from the k-th of n_local equal strata of (0.1, 0.9).
    bool spread_locals = true;
    /// Alternate bump signs so neighbouring bumps do not share a pointwise extreme.
    bool alternate_signs = true;
    /// Global outlier: `scale * draw + s * shift` with a random sign s.
    double global_scale = 0.2;
    double global_shift = 1.8;
};

struct LabeledSample {
    FunctionalSample sample;
    std::vector<CurveLabel> labels;
};

/// Base curves first, then local outliers, then global outliers.
LabeledSample generate_motivating_example(std::uint64_t seed, const MotivatingExampleConfig& config = {});

/**
 * Enumerate distributions on the lattice {0, ..., support-1} with weights in
 * multiples of 1/denominator, for every support size up to `max_support`,
 * and return the first one for which no threshold makes simplicial depth
 * `>= c` coincide with the median set. Values are returned with multiplicity.
 */
std::optional<std::vector<double>> find_simplicial_md_witness(std::size_t max_support, std::size_t denominator);

} // namespace fbox

#endif
