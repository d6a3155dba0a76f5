#ifndef FBOX_GRID_HPP
#define FBOX_GRID_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * @file grid.hpp
 *
 * @brief Discretization grid, functional samples and bands of functions.
 */

namespace fbox {

/// Thrown when an argument violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * @brief Ordered evaluation points on [0,1] with quadrature weights.
 *
 * Integrals over the domain become weighted sums over the points, and
 * infima become minima over the points.
 */
class Grid {
public:
    /// Uniform weights 1/m.
    explicit Grid(std::vector<double> points);
    Grid(std::vector<double> points, std::vector<double> weights);

    /// `m` equispaced points including both endpoints.
    static Grid equispaced(std::size_t m);

    std::size_t size() const { return points_.size(); }
    std::span<const double> points() const { return points_; }
    std::span<const double> weights() const { return weights_; }

    /// Weighted mean of `values` over the grid.
    double integrate(std::span<const double> values) const;

    bool operator==(const Grid&) const = default;

private:
    std::vector<double> points_;
    std::vector<double> weights_;
};

/**
 * @brief n functions evaluated on a shared grid, stored row-major.
 */
class FunctionalSample {
public:
    FunctionalSample(Grid grid, std::size_t n, std::vector<double> values);
    FunctionalSample(Grid grid, const std::vector<std::vector<double>>& rows);

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return n_; }
    std::size_t points() const { return grid_.size(); }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * grid_.size(), grid_.size()};
    }
    double operator()(std::size_t i, std::size_t t) const { return values_[i * grid_.size() + t]; }

    /// Values of all functions at grid index `t`.
    std::vector<double> column(std::size_t t) const;
    std::span<const double> values() const { return values_; }

private:
    Grid grid_;
    std::size_t n_;
    std::vector<double> values_;
};

/**
 * @brief Region between a lower and an upper envelope over the grid.
 *
 * Envelopes may take infinite values. Containment is closed: touching an
 * envelope counts as being inside.
 */
class Band {
public:
    Band(Grid grid, std::vector<double> lower, std::vector<double> upper);

    const Grid& grid() const { return grid_; }
    std::span<const double> lower() const { return lower_; }
    std::span<const double> upper() const { return upper_; }

    bool operator==(const Band&) const = default;

private:
    Grid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Pointwise min/max envelope of the selected rows.
Band band_of(const FunctionalSample& sample, std::span<const std::size_t> indices);

/// Whether `lower(t) <= f(t) <= upper(t)` at every grid point.
bool contains(const Band& band, std::span<const double> f);

/// Whether `inner` lies inside `outer` pointwise.
bool is_subband(const Band& inner, const Band& outer);

/// Weighted mean of `upper - lower`. Throws on an unbounded band.
double width(const Band& band);

/**
 * Inflate a band by `factor` around an anchor function:
 * `lower_c = a - c (a - lower)` and `upper_c = a + c (upper - a)`.
 * The anchor must lie inside the band and `factor >= 1`.
 */
Band inflate(const Band& band, std::span<const double> anchor, double factor);

/// Pointwise midpoint of a bounded band.
std::vector<double> midline(const Band& band);

namespace detail {
void check_length(std::size_t got, std::size_t want, const char* what);
}

} // namespace fbox

#endif
