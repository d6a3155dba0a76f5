#ifndef FBOX_FDEPTH_HPP
#define FBOX_FDEPTH_HPP

#include "fbox/depth1d.hpp"
#include "fbox/grid.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file fdepth.hpp
 *
 * @brief Functional depths built from one-dimensional marginal depths.
 *
 * Integrated and infimal depths aggregate the marginal depth of `x(t)` w.r.t.
 * the empirical distribution of the sample at `t`. The band depth and MBD use
 * ordered pairs of sample functions drawn with replacement.
 */

namespace fbox {

enum class FunctionalDepth {
    integrated,
    infimal,
    band,
    /// Modified band depth; identical to integrated simplicial depth.
    modified_band,
};

std::string_view to_string(FunctionalDepth kind);
FunctionalDepth parse_functional_depth(std::string_view name);

/// e.g. "infimal-halfspace", "mbd", "band-depth".
std::string depth_label(FunctionalDepth kind, UnivariateDepth base);

/// Per-function depth values, one per sample row.
struct DepthVector {
    FunctionalDepth kind;
    UnivariateDepth base;
    std::vector<double> values;
};

/// Entry `(i, t)` is the depth of `X_i(t)` in the sample column at `t`.
class PointwiseDepthMatrix {
public:
    PointwiseDepthMatrix(Grid grid, std::size_t n, std::vector<double> values);

    const Grid& grid() const { return grid_; }
    std::size_t rows() const { return n_; }
    std::span<const double> row(std::size_t i) const { return {values_.data() + i * grid_.size(), grid_.size()}; }
    double operator()(std::size_t i, std::size_t t) const { return values_[i * grid_.size() + t]; }

private:
    Grid grid_;
    std::size_t n_;
    std::vector<double> values_;
};

/**
 * @brief Sorted marginal columns of a sample, for repeated depth queries.
 *
 * Building costs O(m n log n); each marginal query is O(log n).
 */
class Marginals {
public:
    explicit Marginals(const FunctionalSample& sample);

    std::size_t size() const { return n_; }
    const Grid& grid() const { return grid_; }

    double depth(UnivariateDepth kind, std::size_t t, double u) const;
    /// Marginal depths of `f` at every grid point.
    std::vector<double> pointwise(UnivariateDepth kind, std::span<const double> f) const;

private:
    Grid grid_;
    std::size_t n_;
    std::vector<double> sorted_; // column-major, each column ascending
};

PointwiseDepthMatrix pointwise_depths(const FunctionalSample& sample, UnivariateDepth kind);

double integrated_depth(const FunctionalSample& sample, std::span<const double> f, UnivariateDepth kind);
double integrated_depth(const FunctionalSample& sample, std::size_t index, UnivariateDepth kind);

double infimal_depth(const FunctionalSample& sample, std::span<const double> f, UnivariateDepth kind);
double infimal_depth(const FunctionalSample& sample, std::size_t index, UnivariateDepth kind);

/// Modified band depth: integrated simplicial depth.
double mbd(const FunctionalSample& sample, std::span<const double> f);

/// Fraction of ordered pairs `(i, j)` whose band contains `f` entirely.
double band_depth(const FunctionalSample& sample, std::span<const double> f);

/// Depth of every sample row. `base` is ignored for band depth and MBD.
DepthVector compute_depths(const FunctionalSample& sample, FunctionalDepth kind,
                           UnivariateDepth base = UnivariateDepth::halfspace);

/// Depth of an external function w.r.t. the sample. `base` as above.
double depth_of(const FunctionalSample& sample, std::span<const double> f, FunctionalDepth kind,
                UnivariateDepth base = UnivariateDepth::halfspace);

} // namespace fbox

#endif
