#include "fbox/boxplot.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fbox {

std::string_view to_string(WhiskerAnchor a) {
    return a == WhiskerAnchor::median ? "median" : "midline";
}

WhiskerAnchor parse_whisker_anchor(std::string_view name) {
    if (name == "median") {
        return WhiskerAnchor::median;
    }
    if (name == "midline" || name == "fence") {
        return WhiskerAnchor::midline;
    }
    throw ValidationError("unknown whisker anchor '" + std::string(name) + "'");
}

void BoxplotOptions::validate() const {
    if (!(tau > 0.0 && tau < 1.0)) {
        throw ValidationError("tau must lie in (0,1)");
    }
    if (!(factor >= 1.0)) {
        throw ValidationError("inflation factor must be >= 1");
    }
    if (depth == FunctionalDepth::band && refinement != Refinement::none) {
        throw ValidationError("band depth cannot be combined with a rank refinement");
    }
}

std::size_t central_size(double tau, std::size_t n) {
    // tolerate representation error in tau * n, e.g. 0.1 * 30
    const double k = std::ceil(tau * static_cast<double>(n) - 1e-9);
    return std::clamp(static_cast<std::size_t>(std::max(k, 1.0)), std::size_t{1}, n);
}

Boxplot build_boxplot(const FunctionalSample& sample, const BoxplotOptions& options) {
    options.validate();
    const std::size_t n = sample.size();
    if (n < 4) {
        throw ValidationError("a boxplot needs at least 4 functions");
    }

    DepthRanking ranking = rank_sample(sample, options.depth, options.base, options.refinement);
    const std::size_t k = central_size(options.tau, n);

    std::vector<std::size_t> central_idx(ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(k));
    if (options.refinement == Refinement::none) {
        const double cut = ranking.depth.values[ranking.order[k - 1]];
        for (std::size_t p = k; p < n && ranking.depth.values[ranking.order[p]] == cut; ++p) {
            central_idx.push_back(ranking.order[p]);
        }
    }

    const std::size_t median = ranking.order.front();
    Band central = band_of(sample, central_idx);
    std::vector<double> anchor = options.anchor == WhiskerAnchor::median
                                     ? std::vector<double>(sample.row(median).begin(), sample.row(median).end())
                                     : midline(central);
    Band whiskers = inflate(central, anchor, options.factor);

    std::vector<double> index(n);
    std::vector<std::size_t> outliers;
    for (std::size_t i = 0; i < n; ++i) {
        index[i] = outlyingness_index(central, anchor, sample.row(i));
        if (index[i] > options.factor) {
            outliers.push_back(i);
        }
    }

    return Boxplot{options,
                   std::move(ranking),
                   median,
                   std::move(central_idx),
                   std::move(central),
                   std::move(whiskers),
                   std::move(anchor),
                   std::move(outliers),
                   std::move(index)};
}

namespace {

double coverage(const Band& band, const FunctionalSample& functions) {
    if (!(functions.grid() == band.grid())) {
        throw ValidationError("grid mismatch between boxplot and functions");
    }
    std::size_t inside = 0;
    for (std::size_t i = 0; i < functions.size(); ++i) {
        inside += contains(band, functions.row(i)) ? 1 : 0;
    }
    return 100.0 * static_cast<double>(inside) / static_cast<double>(functions.size());
}

} // namespace

double central_coverage(const Boxplot& boxplot, const FunctionalSample& functions) {
    return coverage(boxplot.central, functions);
}

double whisker_coverage(const Boxplot& boxplot, const FunctionalSample& functions) {
    return coverage(boxplot.whiskers, functions);
}

std::vector<std::size_t> check_band_convexity(const Boxplot& boxplot, const FunctionalSample& sample) {
    const DepthRanking& r = boxplot.ranking;
    // shallowest member of the central region
    const std::size_t cut = *std::min_element(
        boxplot.central_indices.begin(), boxplot.central_indices.end(),
        [&](std::size_t a, std::size_t b) { return r.strictly_shallower(a, b); });
    std::vector<std::size_t> violations;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        if (r.strictly_shallower(i, cut) && contains(boxplot.central, sample.row(i))) {
            violations.push_back(i);
        }
    }
    return violations;
}

std::vector<std::size_t> check_band_convexity(const FunctionalSample& sample, const BoxplotOptions& options) {
    return check_band_convexity(build_boxplot(sample, options), sample);
}

} // namespace fbox
