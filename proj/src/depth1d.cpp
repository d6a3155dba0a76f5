#include "fbox/depth1d.hpp"

#include "fbox/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace fbox {

std::string_view to_string(UnivariateDepth kind) {
    switch (kind) {
    case UnivariateDepth::halfspace:
        return "halfspace";
    case UnivariateDepth::simplicial:
        return "simplicial";
    }
    return "?";
}

UnivariateDepth parse_univariate_depth(std::string_view name) {
    if (name == "halfspace") {
        return UnivariateDepth::halfspace;
    }
    if (name == "simplicial") {
        return UnivariateDepth::simplicial;
    }
    throw ValidationError("unknown one-dimensional depth '" + std::string(name) + "'");
}

UnivariateSample::UnivariateSample(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty()) {
        throw ValidationError("univariate sample is empty");
    }
    for (double v : sorted_) {
        if (!std::isfinite(v)) {
            throw ValidationError("univariate sample contains a non-finite value");
        }
    }
    std::sort(sorted_.begin(), sorted_.end());
}

std::size_t UnivariateSample::count_below(double u) const {
    return static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), u) - sorted_.begin());
}

std::size_t UnivariateSample::count_above(double u) const {
    return static_cast<std::size_t>(sorted_.end() - std::upper_bound(sorted_.begin(), sorted_.end(), u));
}

double depth_from_counts(UnivariateDepth kind, std::size_t below, std::size_t above, std::size_t n) {
    switch (kind) {
    case UnivariateDepth::halfspace: {
        // #{y <= u} = n - above, #{y >= u} = n - below
        const std::size_t k = n - std::max(below, above);
        return static_cast<double>(k) / static_cast<double>(n);
    }
    case UnivariateDepth::simplicial: {
        const auto nn = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);
        const auto lt = static_cast<std::int64_t>(below);
        const auto gt = static_cast<std::int64_t>(above);
        return static_cast<double>(nn - lt * lt - gt * gt) / static_cast<double>(nn);
    }
    }
    return 0.0;
}

double halfspace_depth(double u, const UnivariateSample& q) {
    return depth_from_counts(UnivariateDepth::halfspace, q.count_below(u), q.count_above(u), q.size());
}

double simplicial_depth(double u, const UnivariateSample& q) {
    return depth_from_counts(UnivariateDepth::simplicial, q.count_below(u), q.count_above(u), q.size());
}

double depth(UnivariateDepth kind, double u, const UnivariateSample& q) {
    return depth_from_counts(kind, q.count_below(u), q.count_above(u), q.size());
}

Interval median_set(const UnivariateSample& q) {
    // F(u-) <= 1/2 <= F(u): the lower median is the smallest order statistic
    // with F >= 1/2; the set extends to the next order statistic only when F
    // equals 1/2 exactly there.
    const auto s = q.sorted();
    const std::size_t n = s.size();
    const std::size_t lo_idx = (n + 1) / 2 - 1; // ceil(n/2)-th order statistic
    const std::size_t hi_idx = (n % 2 == 0) ? n / 2 : lo_idx;
    return {s[lo_idx], s[hi_idx]};
}

std::vector<double> probe_points(const UnivariateSample& q) {
    const auto s = q.sorted();
    std::vector<double> probes;
    probes.reserve(2 * s.size() + 2);
    probes.push_back(s.front() - 1.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && s[i] == s[i - 1]) {
            continue;
        }
        if (i > 0) {
            probes.push_back(0.5 * (s[i - 1] + s[i]));
        }
        probes.push_back(s[i]);
    }
    probes.push_back(s.back() + 1.0);
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    return probes;
}

bool check_md(UnivariateDepth kind, const UnivariateSample& q, double c) {
    const Interval med = median_set(q);
    for (double u : probe_points(q)) {
        if ((depth(kind, u, q) >= c) != med.contains(u)) {
            return false;
        }
    }
    return true;
}

bool md_threshold_exists(UnivariateDepth kind, const UnivariateSample& q) {
    const Interval med = median_set(q);
    double inside = 1.0;
    double outside = 0.0;
    for (double u : probe_points(q)) {
        const double d = depth(kind, u, q);
        if (med.contains(u)) {
            inside = std::min(inside, d);
        } else {
            outside = std::max(outside, d);
        }
    }
    return inside > outside && inside > 0.0;
}

} // namespace fbox
