#include "fbox/fdepth.hpp"

#include <algorithm>
#include <cstdint>

namespace fbox {

std::string_view to_string(FunctionalDepth kind) {
    switch (kind) {
    case FunctionalDepth::integrated:
        return "integrated";
    case FunctionalDepth::infimal:
        return "infimal";
    case FunctionalDepth::band:
        return "band";
    case FunctionalDepth::modified_band:
        return "mbd";
    }
    return "?";
}

FunctionalDepth parse_functional_depth(std::string_view name) {
    if (name == "integrated") {
        return FunctionalDepth::integrated;
    }
    if (name == "infimal") {
        return FunctionalDepth::infimal;
    }
    if (name == "band") {
        return FunctionalDepth::band;
    }
    if (name == "mbd") {
        return FunctionalDepth::modified_band;
    }
    throw ValidationError("unknown functional depth '" + std::string(name) + "'");
}

std::string depth_label(FunctionalDepth kind, UnivariateDepth base) {
    switch (kind) {
    case FunctionalDepth::band:
        return "band-depth";
    case FunctionalDepth::modified_band:
        return "mbd";
    default:
        return std::string(to_string(kind)) + "-" + std::string(to_string(base));
    }
}

PointwiseDepthMatrix::PointwiseDepthMatrix(Grid grid, std::size_t n, std::vector<double> values)
    : grid_(std::move(grid)), n_(n), values_(std::move(values)) {
    if (values_.size() != n_ * grid_.size()) {
        throw ValidationError("pointwise depth matrix is not n x m");
    }
}

Marginals::Marginals(const FunctionalSample& sample)
    : grid_(sample.grid()), n_(sample.size()), sorted_(sample.size() * sample.points()) {
    const std::size_t m = sample.points();
    for (std::size_t t = 0; t < m; ++t) {
        auto first = sorted_.begin() + static_cast<std::ptrdiff_t>(t * n_);
        for (std::size_t i = 0; i < n_; ++i) {
            first[static_cast<std::ptrdiff_t>(i)] = sample(i, t);
        }
        std::sort(first, first + static_cast<std::ptrdiff_t>(n_));
    }
}

double Marginals::depth(UnivariateDepth kind, std::size_t t, double u) const {
    const auto first = sorted_.begin() + static_cast<std::ptrdiff_t>(t * n_);
    const auto last = first + static_cast<std::ptrdiff_t>(n_);
    const auto below = static_cast<std::size_t>(std::lower_bound(first, last, u) - first);
    const auto above = static_cast<std::size_t>(last - std::upper_bound(first, last, u));
    return depth_from_counts(kind, below, above, n_);
}

std::vector<double> Marginals::pointwise(UnivariateDepth kind, std::span<const double> f) const {
    detail::check_length(f.size(), grid_.size(), "function");
    std::vector<double> out(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
        out[t] = depth(kind, t, f[t]);
    }
    return out;
}

PointwiseDepthMatrix pointwise_depths(const FunctionalSample& sample, UnivariateDepth kind) {
    const Marginals marg(sample);
    const std::size_t n = sample.size();
    const std::size_t m = sample.points();
    std::vector<double> values(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < m; ++t) {
            values[i * m + t] = marg.depth(kind, t, sample(i, t));
        }
    }
    return PointwiseDepthMatrix(sample.grid(), n, std::move(values));
}

namespace {

double aggregate_integrated(const Grid& grid, std::span<const double> pointwise) {
    return grid.integrate(pointwise);
}

double aggregate_infimal(std::span<const double> pointwise) {
    return *std::min_element(pointwise.begin(), pointwise.end());
}

/**
 * Strictly-above / strictly-below bitmasks of every sample row relative to `f`.
 * The band of rows i and j contains f iff the two rows are never both strictly
 * above f and never both strictly below f at the same grid point.
 */
struct SideMasks {
    std::size_t words;
    std::vector<std::uint64_t> above;
    std::vector<std::uint64_t> below;
};

SideMasks side_masks(const FunctionalSample& sample, std::span<const double> f) {
    const std::size_t m = sample.points();
    const std::size_t words = (m + 63) / 64;
    SideMasks masks{words, std::vector<std::uint64_t>(sample.size() * words, 0),
                    std::vector<std::uint64_t>(sample.size() * words, 0)};
    for (std::size_t i = 0; i < sample.size(); ++i) {
        auto row = sample.row(i);
        for (std::size_t t = 0; t < m; ++t) {
            const std::uint64_t bit = std::uint64_t{1} << (t % 64);
            if (row[t] > f[t]) {
                masks.above[i * words + t / 64] |= bit;
            } else if (row[t] < f[t]) {
                masks.below[i * words + t / 64] |= bit;
            }
        }
    }
    return masks;
}

bool disjoint(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        if (a[w] & b[w]) {
            return false;
        }
    }
    return true;
}

} // namespace

double integrated_depth(const FunctionalSample& sample, std::span<const double> f, UnivariateDepth kind) {
    const Marginals marg(sample);
    return aggregate_integrated(sample.grid(), marg.pointwise(kind, f));
}

double integrated_depth(const FunctionalSample& sample, std::size_t index, UnivariateDepth kind) {
    return integrated_depth(sample, sample.row(index), kind);
}

double infimal_depth(const FunctionalSample& sample, std::span<const double> f, UnivariateDepth kind) {
    const Marginals marg(sample);
    return aggregate_infimal(marg.pointwise(kind, f));
}

double infimal_depth(const FunctionalSample& sample, std::size_t index, UnivariateDepth kind) {
    return infimal_depth(sample, sample.row(index), kind);
}

double mbd(const FunctionalSample& sample, std::span<const double> f) {
    return integrated_depth(sample, f, UnivariateDepth::simplicial);
}

double band_depth(const FunctionalSample& sample, std::span<const double> f) {
    detail::check_length(f.size(), sample.points(), "function");
    const SideMasks masks = side_masks(sample, f);
    const std::size_t n = sample.size();
    const std::size_t w = masks.words;
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const bool in = disjoint(&masks.above[i * w], &masks.above[j * w], w) &&
                            disjoint(&masks.below[i * w], &masks.below[j * w], w);
            if (in) {
                hits += (i == j) ? 1 : 2;
            }
        }
    }
    const auto nn = static_cast<double>(n) * static_cast<double>(n);
    return static_cast<double>(hits) / nn;
}

DepthVector compute_depths(const FunctionalSample& sample, FunctionalDepth kind, UnivariateDepth base) {
    const std::size_t n = sample.size();
    DepthVector out{kind, base, std::vector<double>(n)};
    if (kind == FunctionalDepth::band) {
        for (std::size_t i = 0; i < n; ++i) {
            out.values[i] = band_depth(sample, sample.row(i));
        }
        return out;
    }
    if (kind == FunctionalDepth::modified_band) {
        out.base = UnivariateDepth::simplicial;
    }
    const PointwiseDepthMatrix pw = pointwise_depths(sample, out.base);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = (kind == FunctionalDepth::infimal) ? aggregate_infimal(pw.row(i))
                                                           : aggregate_integrated(sample.grid(), pw.row(i));
    }
    return out;
}

double depth_of(const FunctionalSample& sample, std::span<const double> f, FunctionalDepth kind, UnivariateDepth base) {
    switch (kind) {
    case FunctionalDepth::integrated:
        return integrated_depth(sample, f, base);
    case FunctionalDepth::infimal:
        return infimal_depth(sample, f, base);
    case FunctionalDepth::band:
        return band_depth(sample, f);
    case FunctionalDepth::modified_band:
        return mbd(sample, f);
    }
    return 0.0;
}

} // namespace fbox
