#include "fbox/experiments.hpp"

#include "fbox/gpsim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fbox {

BoxplotOptions Variant::options(double tau, double factor, WhiskerAnchor anchor) const {
    BoxplotOptions opt;
    opt.anchor = anchor;
    opt.depth = depth;
    opt.base = base;
    opt.refinement = refinement;
    opt.tau = tau;
    opt.factor = factor;
    return opt;
}

Variant parse_variant(std::string_view name, UnivariateDepth base) {
    if (name == "integrated") {
        return {"integrated", FunctionalDepth::integrated, base, Refinement::none};
    }
    if (name == "infimal") {
        return {"infimal", FunctionalDepth::infimal, base, Refinement::none};
    }
    if (name == "erl") {
        return {"erl", FunctionalDepth::infimal, base, Refinement::erl};
    }
    if (name == "area") {
        return {"area", FunctionalDepth::infimal, base, Refinement::area};
    }
    if (name == "mbd") {
        return {"mbd", FunctionalDepth::modified_band, UnivariateDepth::simplicial, Refinement::none};
    }
    throw ValidationError("unknown study variant '" + std::string(name) + "'");
}

std::vector<Variant> default_variants() {
    return {parse_variant("integrated"), parse_variant("infimal"), parse_variant("erl"), parse_variant("area")};
}

ExperimentConfig ExperimentConfig::desk() {
    return ExperimentConfig{};
}

ExperimentConfig ExperimentConfig::full() {
    ExperimentConfig c;
    c.ns = {50, 500, 5000};
    c.runs = 100;
    c.n_test = 10000;
    return c;
}

void ExperimentConfig::validate() const {
    if (variants.empty()) {
        throw ValidationError("study needs at least one variant");
    }
    if (ns.empty() || log_hs.empty()) {
        throw ValidationError("study needs at least one n and one log h");
    }
    if (runs < 1) {
        throw ValidationError("runs must be >= 1");
    }
    for (auto n : ns) {
        if (n < 4) {
            throw ValidationError("sample size n must be >= 4");
        }
    }
    for (double lh : log_hs) {
        if (!std::isfinite(lh)) {
            throw ValidationError("log h must be finite");
        }
    }
    if (grid_size < 2) {
        throw ValidationError("grid size must be >= 2");
    }
    if (threads < 1) {
        throw ValidationError("threads must be >= 1");
    }
    for (const auto& v : variants) {
        v.options(tau, factor, anchor).validate();
    }
}

std::string_view to_string(Statistic s) {
    switch (s) {
    case Statistic::central_coverage:
        return "central_coverage";
    case Statistic::whisker_coverage:
        return "whisker_coverage";
    case Statistic::mean_width:
        return "mean_width";
    case Statistic::test_coverage:
        return "test_coverage";
    }
    return "?";
}

Summary summarize(const std::vector<double>& values) {
    Summary s;
    if (values.empty()) {
        s.mean = s.sd = std::numeric_limits<double>::quiet_NaN();
        return s;
    }
    double acc = 0.0;
    for (double v : values) {
        acc += v;
    }
    s.mean = acc / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

const CellResult& ExperimentReport::cell(std::string_view variant, std::size_t n, double log_h) const {
    for (const auto& c : cells) {
        if (c.variant == variant && c.n == n && c.log_h == log_h) {
            return c;
        }
    }
    throw std::out_of_range("no study cell for " + std::string(variant));
}

RunStatistics evaluate_boxplot(const FunctionalSample& sample, const FunctionalSample* test,
                               const BoxplotOptions& options) {
    const Boxplot bp = build_boxplot(sample, options);
    RunStatistics s;
    s.values[0] = central_coverage(bp, sample);
    s.values[1] = whisker_coverage(bp, sample);
    s.values[2] = width(bp.central);
    s.values[3] = test ? central_coverage(bp, *test) : std::numeric_limits<double>::quiet_NaN();
    return s;
}

ExperimentReport run_table_study(const ExperimentConfig& config) {
    config.validate();
    const Grid grid = Grid::equispaced(config.grid_size);

    std::vector<GaussianProcess> processes;
    processes.reserve(config.log_hs.size());
    for (double lh : config.log_hs) {
        processes.emplace_back(GPModel{std::exp(lh), grid});
    }

    struct Task {
        std::size_t n_idx;
        std::size_t h_idx;
        std::size_t run;
    };
    std::vector<Task> tasks;
    for (std::size_t a = 0; a < config.ns.size(); ++a) {
        for (std::size_t b = 0; b < config.log_hs.size(); ++b) {
            for (std::size_t r = 0; r < config.runs; ++r) {
                tasks.push_back({a, b, r});
            }
        }
    }

    const std::size_t nv = config.variants.size();
    std::vector<RunStatistics> results(tasks.size() * nv);

    auto work = [&](const Task& task, std::size_t slot) {
        const std::size_t n = config.ns[task.n_idx];
        const double lh = config.log_hs[task.h_idx];
        std::uint64_t s = stream_seed(config.seed, n);
        s = stream_seed(s, std::bit_cast<std::uint64_t>(lh));
        s = stream_seed(s, task.run);
        const auto& gp = processes[task.h_idx];
        const FunctionalSample sample = gp.sample(n, stream_seed(s, 0));
        std::optional<FunctionalSample> test;
        if (config.n_test > 0) {
            test = gp.sample(config.n_test, stream_seed(s, 1));
        }
        for (std::size_t v = 0; v < nv; ++v) {
            results[slot * nv + v] = evaluate_boxplot(sample, test ? &*test : nullptr,
                                                      config.variants[v].options(config.tau, config.factor, config.anchor));
        }
    };

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                work(tasks[i], i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = tasks.size();
            }
        }
    };
    const std::size_t nthreads = std::min(config.threads, std::max<std::size_t>(tasks.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ExperimentReport report;
    report.config = config;
    for (std::size_t a = 0; a < config.ns.size(); ++a) {
        for (std::size_t b = 0; b < config.log_hs.size(); ++b) {
            const std::size_t first = (a * config.log_hs.size() + b) * config.runs;
            for (std::size_t v = 0; v < nv; ++v) {
                CellResult cell{config.variants[v].name, config.ns[a], config.log_hs[b], {}, {}};
                for (std::size_t r = 0; r < config.runs; ++r) {
                    cell.runs.push_back(results[(first + r) * nv + v]);
                }
                for (auto stat : all_statistics) {
                    std::vector<double> xs;
                    xs.reserve(config.runs);
                    for (const auto& run : cell.runs) {
                        xs.push_back(run[stat]);
                    }
                    if (stat == Statistic::test_coverage && config.n_test == 0) {
                        xs.clear();
                    }
                    cell.summary[static_cast<std::size_t>(stat)] = summarize(xs);
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

std::string_view to_string(CurveLabel label) {
    switch (label) {
    case CurveLabel::base:
        return "base";
    case CurveLabel::local:
        return "local";
    case CurveLabel::global:
        return "global";
    }
    return "?";
}

LabeledSample generate_motivating_example(std::uint64_t seed, const MotivatingExampleConfig& config) {
    const Grid grid = Grid::equispaced(config.grid_size);
    const std::size_t total = config.n_base + config.n_local + config.n_global;
    const FunctionalSample draws = GaussianProcess(GPModel{std::exp(config.log_h), grid}).sample(total, stream_seed(seed, 0));
    std::mt19937_64 shape(stream_seed(seed, 1));
    const auto t = grid.points();
    const std::size_t m = grid.size();

    std::vector<double> values(draws.values().begin(), draws.values().end());
    std::vector<CurveLabel> labels(total, CurveLabel::base);
    const double first_sign = uniform01(shape) < 0.5 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < config.n_local; ++k) {
        const std::size_t i = config.n_base + k;
        double t0 = 0.1 + 0.8 * uniform01(shape);
        double sign = uniform01(shape) < 0.5 ? -1.0 : 1.0;
        if (config.spread_locals) {
            // one centre per stratum
            t0 = 0.1 + 0.8 * (static_cast<double>(k) + (t0 - 0.1) / 0.8) / static_cast<double>(config.n_local);
        }
        if (config.alternate_signs) {
            sign = k % 2 == 0 ? first_sign : -first_sign;
        }
        for (std::size_t j = 0; j < m; ++j) {
            const double d = t[j] - t0;
            values[i * m + j] = config.local_scale * values[i * m + j] +
                                sign * config.local_amplitude * std::exp(-d * d / config.local_width);
        }
        labels[i] = CurveLabel::local;
    }
    for (std::size_t k = 0; k < config.n_global; ++k) {
        const std::size_t i = config.n_base + config.n_local + k;
        const double sign = uniform01(shape) < 0.5 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            values[i * m + j] = config.global_scale * values[i * m + j] + sign * config.global_shift;
        }
        labels[i] = CurveLabel::global;
    }
    return {FunctionalSample(grid, total, std::move(values)), std::move(labels)};
}

namespace {

bool next_composition(std::vector<std::size_t>& counts) {
    // lexicographic successor among vectors of the given length summing to total
    const std::size_t k = counts.size();
    if (k < 2) {
        return false;
    }
    std::size_t tail = counts[k - 1];
    for (std::size_t p = k - 1; p-- > 0;) {
        if (tail > 0) {
            ++counts[p];
            counts[k - 1] = tail - 1;
            for (std::size_t q = p + 1; q + 1 < k; ++q) {
                counts[q] = 0;
            }
            return true;
        }
        tail += counts[p];
        counts[p] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<double>> find_simplicial_md_witness(std::size_t max_support, std::size_t denominator) {
    if (max_support < 1 || max_support > 5) {
        throw ValidationError("support size must be in [1, 5]");
    }
    if (denominator < 1) {
        throw ValidationError("weight denominator must be >= 1");
    }
    std::vector<std::size_t> counts(max_support, 0);
    counts.back() = denominator;
    do {
        std::vector<double> values;
        for (std::size_t p = 0; p < counts.size(); ++p) {
            values.insert(values.end(), counts[p], static_cast<double>(p));
        }
        if (!md_threshold_exists(UnivariateDepth::simplicial, UnivariateSample(values))) {
            return values;
        }
    } while (next_composition(counts));
    return std::nullopt;
}

} // namespace fbox
