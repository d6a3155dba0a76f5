#ifndef FBOX_BOXPLOT_HPP
#define FBOX_BOXPLOT_HPP

#include "fbox/fdepth.hpp"
#include "fbox/grid.hpp"
#include "fbox/ranking.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

/**
 * @file boxplot.hpp
 *
 * @brief Functional boxplot: median, central region, whiskers and outliers.
 */

namespace fbox {

/// Function the whiskers are inflated around.
enum class WhiskerAnchor {
    /// The median function.
    median,
    /// Midpoint of the central band, i.e. the fence rule `lower - (c-1)/2 w`, `upper + (c-1)/2 w`.
    midline,
};

std::string_view to_string(WhiskerAnchor a);
WhiskerAnchor parse_whisker_anchor(std::string_view name);

struct BoxplotOptions {
    FunctionalDepth depth = FunctionalDepth::infimal;
    UnivariateDepth base = UnivariateDepth::halfspace;
    Refinement refinement = Refinement::none;
    double tau = 0.5;
    double factor = 4.0;
    WhiskerAnchor anchor = WhiskerAnchor::median;

    /// Throws ValidationError on invalid combinations.
    void validate() const;
};

struct Boxplot {
    BoxplotOptions options;
    DepthRanking ranking;
    std::size_t median_index;
    /// Rows spanning the central band, deepest first.
    std::vector<std::size_t> central_indices;
    Band central;
    Band whiskers;
    /// Anchor the whiskers and outlyingness are measured from.
    std::vector<double> anchor;
    /// Rows with outlyingness strictly above the inflation factor, ascending.
    std::vector<std::size_t> outliers;
    std::vector<double> outlyingness;
};

/// Number of functions `ceil(tau * n)` defining the central region.
std::size_t central_size(double tau, std::size_t n);

/**
 * Build the boxplot of `sample`. Requires n >= 4.
 *
 * Without refinement every function tied with the depth at the cut enters the
 * central region; with a refinement exactly `ceil(tau n)` functions do.
 */
Boxplot build_boxplot(const FunctionalSample& sample, const BoxplotOptions& options = {});

/// Percentage of rows of `functions` lying inside the central band.
double central_coverage(const Boxplot& boxplot, const FunctionalSample& functions);

/// Percentage of rows of `functions` lying inside the whiskers band.
double whisker_coverage(const Boxplot& boxplot, const FunctionalSample& functions);

/**
 * Rows strictly shallower than every central function that still lie inside
 * the central band. Empty iff band convexity holds on this sample.
 */
std::vector<std::size_t> check_band_convexity(const FunctionalSample& sample, const BoxplotOptions& options = {});
std::vector<std::size_t> check_band_convexity(const Boxplot& boxplot, const FunctionalSample& sample);

} // namespace fbox

#endif
