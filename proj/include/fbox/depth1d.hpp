#ifndef FBOX_DEPTH1D_HPP
#define FBOX_DEPTH1D_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

/**
 * @file depth1d.hpp
 *
 * @brief One-dimensional depths of a point w.r.t. an empirical distribution.
 */

namespace fbox {

enum class UnivariateDepth { halfspace, simplicial };

std::string_view to_string(UnivariateDepth kind);
UnivariateDepth parse_univariate_depth(std::string_view name);

/**
 * @brief Empirical distribution giving mass 1/n to each of n finite values.
 *
 * Values are kept sorted, so every depth query is two binary searches.
 */
class UnivariateSample {
public:
    explicit UnivariateSample(std::vector<double> values);

    std::size_t size() const { return sorted_.size(); }
    std::span<const double> sorted() const { return sorted_; }
    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }

    /// Number of values strictly below `u`.
    std::size_t count_below(double u) const;
    /// Number of values strictly above `u`.
    std::size_t count_above(double u) const;

private:
    std::vector<double> sorted_;
};

/// `min(#{y <= u}, #{y >= u}) / n`.
double halfspace_depth(double u, const UnivariateSample& q);

/**
 * Probability that `u` lies between two independent draws (with replacement)
 * from `q`, i.e. `1 - (#{y < u}/n)^2 - (#{y > u}/n)^2`.
 *
 * Evaluated in integer arithmetic so the result is the exact pair count over n^2.
 */
double simplicial_depth(double u, const UnivariateSample& q);

double depth(UnivariateDepth kind, double u, const UnivariateSample& q);

/// Depth from the counts of sample values strictly below and strictly above `u`.
double depth_from_counts(UnivariateDepth kind, std::size_t below, std::size_t above, std::size_t n);

/// Closed interval `[lo, hi]`.
struct Interval {
    double lo;
    double hi;
    bool contains(double u) const { return lo <= u && u <= hi; }
    bool operator==(const Interval&) const = default;
};

/// Median in the broad sense: all `u` with `F(u-) <= 1/2 <= F(u)`.
Interval median_set(const UnivariateSample& q);

/// Sample values, midpoints of adjacent distinct values, and `min - 1`, `max + 1`.
std::vector<double> probe_points(const UnivariateSample& q);

/**
 * Check on the probe set whether `depth >= c` holds exactly on the median set.
 *
 * Both depths are piecewise constant between order statistics, so the probes
 * see every distinct depth level.
 */
bool check_md(UnivariateDepth kind, const UnivariateSample& q, double c);

/**
 * Whether some threshold `c` in (0,1] makes `{depth >= c}` equal the median set.
 * Holds iff the smallest depth on the median probes exceeds the largest depth
 * elsewhere.
 */
bool md_threshold_exists(UnivariateDepth kind, const UnivariateSample& q);

} // namespace fbox

#endif
