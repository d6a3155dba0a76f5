#include "fbox/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fbox {

std::string_view to_string(Refinement r) {
    switch (r) {
    case Refinement::none:
        return "none";
    case Refinement::erl:
        return "erl";
    case Refinement::area:
        return "area";
    }
    return "?";
}

Refinement parse_refinement(std::string_view name) {
    if (name == "none") {
        return Refinement::none;
    }
    if (name == "erl") {
        return Refinement::erl;
    }
    if (name == "area") {
        return Refinement::area;
    }
    throw ValidationError("unknown refinement '" + std::string(name) + "'");
}

bool DepthRanking::strictly_shallower(std::size_t i, std::size_t j) const {
    const double di = depth.values[i];
    const double dj = depth.values[j];
    if (di != dj) {
        return di < dj;
    }
    return !scores.empty() && scores[i] < scores[j];
}

DepthRanking rank_by_depth(DepthVector depth) {
    return rank_by_depth(std::move(depth), Refinement::none, {});
}

DepthRanking rank_by_depth(DepthVector depth, Refinement refinement, std::vector<double> scores) {
    const std::size_t n = depth.values.size();
    if (refinement == Refinement::none) {
        scores.clear();
    } else if (scores.size() != n) {
        throw ValidationError("refinement scores do not match the number of functions");
    }

    DepthRanking out;
    out.depth = std::move(depth);
    out.refinement = refinement;
    out.scores = std::move(scores);
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return out.strictly_shallower(b, a); });

    out.ranks.assign(n, 0.0);
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && !out.strictly_shallower(out.order[end], out.order[start])) {
            ++end;
        }
        // positions start..end-1 hold 1-based ranks start+1..end
        const double mean_rank = 0.5 * static_cast<double>(start + 1 + end);
        for (std::size_t p = start; p < end; ++p) {
            out.ranks[out.order[p]] = mean_rank;
        }
        start = end;
    }
    return out;
}

namespace {

/// Row indices of column `t` sorted by value.
std::vector<std::size_t> column_order(const FunctionalSample& sample, std::size_t t) {
    std::vector<std::size_t> idx(sample.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sample(a, t) < sample(b, t); });
    return idx;
}

void require_pairs(const FunctionalSample& sample) {
    if (sample.size() < 2) {
        throw ValidationError("rank refinements need at least 2 functions");
    }
}

/// Continuous lower ranks of a sorted column with tie groups already resolved.
double lower_continuous(const std::vector<double>& v, std::size_t pos) {
    const std::size_t n = v.size();
    const std::size_t k = pos + 1;
    if (k == n) {
        return static_cast<double>(n);
    }
    if (k == 1) {
        if (n < 3) {
            return 1.0;
        }
        const double gap = v[1] - v[0];
        const double next = v[2] - v[1];
        if (!(next > 0.0)) {
            return 1.0;
        }
        return std::exp(-gap / next);
    }
    return static_cast<double>(k - 1) + (v[pos] - v[pos - 1]) / (v[pos + 1] - v[pos - 1]);
}

} // namespace

std::vector<std::size_t> two_sided_ranks(const FunctionalSample& sample) {
    const std::size_t n = sample.size();
    const std::size_t m = sample.points();
    std::vector<std::size_t> ranks(n * m);
    for (std::size_t t = 0; t < m; ++t) {
        const auto idx = column_order(sample, t);
        std::size_t a = 0;
        while (a < n) {
            std::size_t b = a + 1;
            while (b < n && sample(idx[b], t) == sample(idx[a], t)) {
                ++b;
            }
            // tie group occupies sorted positions a..b-1
            const std::size_t le = b;
            const std::size_t ge = n - a;
            for (std::size_t p = a; p < b; ++p) {
                ranks[idx[p] * m + t] = std::min(le, ge);
            }
            a = b;
        }
    }
    return ranks;
}

std::vector<double> erl_scores(const FunctionalSample& sample) {
    require_pairs(sample);
    const std::size_t n = sample.size();
    const std::size_t m = sample.points();
    auto ranks = two_sided_ranks(sample);
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(ranks.begin() + static_cast<std::ptrdiff_t>(i * m),
                  ranks.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
    }
    auto less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(ranks.begin() + static_cast<std::ptrdiff_t>(a * m),
                                            ranks.begin() + static_cast<std::ptrdiff_t>((a + 1) * m),
                                            ranks.begin() + static_cast<std::ptrdiff_t>(b * m),
                                            ranks.begin() + static_cast<std::ptrdiff_t>((b + 1) * m));
    };
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), less);

    std::vector<double> scores(n);
    std::size_t a = 0;
    while (a < n) {
        std::size_t b = a + 1;
        while (b < n && !less(idx[a], idx[b])) {
            ++b;
        }
        for (std::size_t p = a; p < b; ++p) {
            scores[idx[p]] = static_cast<double>(b) / static_cast<double>(n);
        }
        a = b;
    }
    return scores;
}

std::vector<double> continuous_ranks(const FunctionalSample& sample) {
    require_pairs(sample);
    const std::size_t n = sample.size();
    const std::size_t m = sample.points();
    std::vector<double> out(n * m);
    std::vector<double> asc(n), desc(n);
    for (std::size_t t = 0; t < m; ++t) {
        const auto idx = column_order(sample, t);
        for (std::size_t p = 0; p < n; ++p) {
            asc[p] = sample(idx[p], t);
        }
        for (std::size_t p = 0; p < n; ++p) {
            desc[p] = -asc[n - 1 - p];
        }
        std::size_t a = 0;
        while (a < n) {
            std::size_t b = a + 1;
            while (b < n && asc[b] == asc[a]) {
                ++b;
            }
            if (b - a > 1) {
                // mean of positions a+1..b from below, and from above
                const double lo = 0.5 * static_cast<double>(a + 1 + b);
                const double hi = 0.5 * static_cast<double>((n - b + 1) + (n - a));
                for (std::size_t p = a; p < b; ++p) {
                    out[idx[p] * m + t] = std::min(lo, hi);
                }
            } else {
                const double lo = lower_continuous(asc, a);
                const double hi = lower_continuous(desc, n - 1 - a);
                out[idx[a] * m + t] = std::min(lo, hi);
            }
            a = b;
        }
    }
    return out;
}

std::vector<double> area_scores(const FunctionalSample& sample) {
    require_pairs(sample);
    const std::size_t n = sample.size();
    const std::size_t m = sample.points();
    const auto ranks = two_sided_ranks(sample);
    const auto cont = continuous_ranks(sample);
    const auto w = sample.grid().weights();
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<double>(*std::min_element(ranks.begin() + static_cast<std::ptrdiff_t>(i * m),
                                                             ranks.begin() + static_cast<std::ptrdiff_t>((i + 1) * m)));
        double acc = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            acc += w[t] * std::min(cont[i * m + t], k);
        }
        scores[i] = acc / static_cast<double>(n);
    }
    return scores;
}

DepthRanking rank_sample(const FunctionalSample& sample, FunctionalDepth kind, UnivariateDepth base,
                         Refinement refinement) {
    DepthVector depth = compute_depths(sample, kind, base);
    switch (refinement) {
    case Refinement::none:
        return rank_by_depth(std::move(depth));
    case Refinement::erl:
        return rank_by_depth(std::move(depth), refinement, erl_scores(sample));
    case Refinement::area:
        return rank_by_depth(std::move(depth), refinement, area_scores(sample));
    }
    return rank_by_depth(std::move(depth));
}

double outlyingness_index(const Band& band, std::span<const double> anchor, std::span<const double> f) {
    const std::size_t m = band.grid().size();
    detail::check_length(anchor.size(), m, "anchor");
    detail::check_length(f.size(), m, "function");
    constexpr double inf = std::numeric_limits<double>::infinity();
    double index = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        const double a = anchor[t];
        double ratio = 0.0;
        if (f[t] > a) {
            const double half = band.upper()[t] - a;
            ratio = half > 0.0 ? (f[t] - a) / half : inf;
        } else if (f[t] < a) {
            const double half = a - band.lower()[t];
            ratio = half > 0.0 ? (a - f[t]) / half : inf;
        }
        index = std::max(index, ratio);
    }
    return index;
}

} // namespace fbox
