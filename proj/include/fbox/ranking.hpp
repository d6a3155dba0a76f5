#ifndef FBOX_RANKING_HPP
#define FBOX_RANKING_HPP

#include "fbox/fdepth.hpp"
#include "fbox/grid.hpp"

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

/**
 * @file ranking.hpp
 *
 * @brief Depth-based ordering of sample functions, tie-breaking refinements
 * and the outlyingness index.
 */

namespace fbox {

enum class Refinement { none, erl, area };

std::string_view to_string(Refinement r);
Refinement parse_refinement(std::string_view name);

/**
 * @brief Sample functions ordered from deepest to shallowest.
 *
 * Functions are compared by depth, then by refinement score (when present),
 * then by original index (lower index ranks deeper).
 */
struct DepthRanking {
    DepthVector depth;
    Refinement refinement = Refinement::none;
    /// Empty when `refinement == none`.
    std::vector<double> scores;
    /// Row indices, deepest first.
    std::vector<std::size_t> order;
    /// 1-based ranks; functions tied on (depth, score) share the mean rank.
    std::vector<double> ranks;

    /// Whether row `i` is strictly shallower than row `j` on (depth, score).
    bool strictly_shallower(std::size_t i, std::size_t j) const;
};

DepthRanking rank_by_depth(DepthVector depth);
DepthRanking rank_by_depth(DepthVector depth, Refinement refinement, std::vector<double> scores);

/**
 * Two-sided pointwise ranks, row-major n x m: `min(#{x_j(t) <= x_i(t)}, #{x_j(t) >= x_i(t)})`.
 * Ties take the full count of their group, so `R_i(t) / n` is the halfspace depth.
 */
std::vector<std::size_t> two_sided_ranks(const FunctionalSample& sample);

/**
 * Extreme rank length. Each function's two-sided rank vector is sorted
 * ascending and the vectors are compared lexicographically; the score of `i`
 * is the fraction of functions whose vector precedes or equals that of `i`.
 * Higher is deeper. Requires n >= 2.
 */
std::vector<double> erl_scores(const FunctionalSample& sample);

/**
 * Continuous two-sided pointwise ranks, row-major n x m.
 *
 * In a column sorted ascending, a unique value at 1-based position `k` with
 * `1 < k < n` gets lower rank `k - 1 + (v_k - v_{k-1}) / (v_{k+1} - v_{k-1})`;
 * the minimum gets `exp(-(v_2 - v_1) / (v_3 - v_2))` (or 1 when undefined) and
 * the maximum gets `n`. The upper rank is the same construction on the
 * negated column, and the two-sided rank is the smaller of the two. A group of
 * tied values shares the mean of its positions.
 */
std::vector<double> continuous_ranks(const FunctionalSample& sample);

/**
 * Area index: `(1/n) * sum_t w_t * min(c_i(t), k_i)` with `c_i` the continuous
 * ranks and `k_i = min_t R_i(t)` the extreme two-sided rank. Scores lie in
 * `((k_i - 1)/n, k_i/n]` for tie-free columns, so they refine the infimal
 * halfspace ordering. Requires n >= 2.
 */
std::vector<double> area_scores(const FunctionalSample& sample);

/// Ranks the sample with the given depth and refinement.
DepthRanking rank_sample(const FunctionalSample& sample, FunctionalDepth kind, UnivariateDepth base,
                         Refinement refinement);

/**
 * Smallest inflation factor of `band` around `anchor` that contains `f`.
 *
 * Per point the ratio of the deviation of `f` from the anchor to the band's
 * half-width on that side; the index is the maximum over the grid. A deviation
 * against a zero half-width gives +infinity.
 */
double outlyingness_index(const Band& band, std::span<const double> anchor, std::span<const double> f);

} // namespace fbox

#endif
