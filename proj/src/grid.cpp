#include "fbox/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fbox {

namespace detail {
void check_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw ValidationError(std::string(what) + ": length " + std::to_string(got) +
                              " does not match grid size " + std::to_string(want));
    }
}
} // namespace detail

namespace {

std::vector<double> uniform_weights(std::size_t m) {
    return std::vector<double>(m, m ? 1.0 / static_cast<double>(m) : 0.0);
}

} // namespace

Grid::Grid(std::vector<double> points) : Grid(points, uniform_weights(points.size())) {}

Grid::Grid(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.size() < 2) {
        throw ValidationError("grid needs at least 2 points");
    }
    if (weights_.size() != points_.size()) {
        throw ValidationError("grid weights and points differ in length");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double t = points_[i];
        if (!std::isfinite(t) || t < 0.0 || t > 1.0) {
            throw ValidationError("grid point " + std::to_string(i) + " outside [0,1]");
        }
        if (i > 0 && !(points_[i - 1] < t)) {
            throw ValidationError("grid points not strictly increasing at index " + std::to_string(i));
        }
        if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) {
            throw ValidationError("grid weight " + std::to_string(i) + " is negative or not finite");
        }
    }
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("grid weights must sum to 1");
    }
}

Grid Grid::equispaced(std::size_t m) {
    if (m < 2) {
        throw ValidationError("grid needs at least 2 points");
    }
    std::vector<double> pts(m);
    for (std::size_t i = 0; i < m; ++i) {
        pts[i] = static_cast<double>(i) / static_cast<double>(m - 1);
    }
    return Grid(std::move(pts));
}

double Grid::integrate(std::span<const double> values) const {
    detail::check_length(values.size(), size(), "integrand");
    double acc = 0.0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        acc += weights_[t] * values[t];
    }
    return acc;
}

FunctionalSample::FunctionalSample(Grid grid, std::size_t n, std::vector<double> values)
    : grid_(std::move(grid)), n_(n), values_(std::move(values)) {
    if (n_ < 1) {
        throw ValidationError("functional sample needs at least one function");
    }
    if (values_.size() != n_ * grid_.size()) {
        throw ValidationError("functional sample values are not n x m");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw ValidationError("non-finite value in function " + std::to_string(k / grid_.size()) +
                                  " at grid index " + std::to_string(k % grid_.size()));
        }
    }
}

namespace {
std::vector<double> flatten(const std::vector<std::vector<double>>& rows, std::size_t m) {
    std::vector<double> out;
    out.reserve(rows.size() * m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m) {
            throw ValidationError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                  ", expected " + std::to_string(m));
        }
        out.insert(out.end(), rows[i].begin(), rows[i].end());
    }
    return out;
}
} // namespace

FunctionalSample::FunctionalSample(Grid grid, const std::vector<std::vector<double>>& rows)
    : FunctionalSample(grid, rows.size(), flatten(rows, grid.size())) {}

std::vector<double> FunctionalSample::column(std::size_t t) const {
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        out[i] = (*this)(i, t);
    }
    return out;
}

Band::Band(Grid grid, std::vector<double> lower, std::vector<double> upper)
    : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {
    detail::check_length(lower_.size(), grid_.size(), "band lower envelope");
    detail::check_length(upper_.size(), grid_.size(), "band upper envelope");
    for (std::size_t t = 0; t < lower_.size(); ++t) {
        if (std::isnan(lower_[t]) || std::isnan(upper_[t]) || lower_[t] > upper_[t]) {
            throw ValidationError("band envelopes cross at grid index " + std::to_string(t));
        }
    }
}

Band band_of(const FunctionalSample& sample, std::span<const std::size_t> indices) {
    if (indices.empty()) {
        throw ValidationError("empty band");
    }
    const std::size_t m = sample.points();
    std::vector<double> lo(m, std::numeric_limits<double>::infinity());
    std::vector<double> hi(m, -std::numeric_limits<double>::infinity());
    for (auto i : indices) {
        if (i >= sample.size()) {
            throw std::out_of_range("band index " + std::to_string(i) + " out of range");
        }
        auto row = sample.row(i);
        for (std::size_t t = 0; t < m; ++t) {
            lo[t] = std::min(lo[t], row[t]);
            hi[t] = std::max(hi[t], row[t]);
        }
    }
    return Band(sample.grid(), std::move(lo), std::move(hi));
}

bool contains(const Band& band, std::span<const double> f) {
    detail::check_length(f.size(), band.grid().size(), "function");
    auto lo = band.lower();
    auto hi = band.upper();
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (f[t] < lo[t] || f[t] > hi[t]) {
            return false;
        }
    }
    return true;
}

bool is_subband(const Band& inner, const Band& outer) {
    detail::check_length(inner.grid().size(), outer.grid().size(), "band");
    for (std::size_t t = 0; t < inner.grid().size(); ++t) {
        if (inner.lower()[t] < outer.lower()[t] || inner.upper()[t] > outer.upper()[t]) {
            return false;
        }
    }
    return true;
}

double width(const Band& band) {
    const std::size_t m = band.grid().size();
    std::vector<double> w(m);
    for (std::size_t t = 0; t < m; ++t) {
        if (!std::isfinite(band.lower()[t]) || !std::isfinite(band.upper()[t])) {
            throw ValidationError("unbounded band");
        }
        w[t] = band.upper()[t] - band.lower()[t];
    }
    return band.grid().integrate(w);
}

Band inflate(const Band& band, std::span<const double> anchor, double factor) {
    detail::check_length(anchor.size(), band.grid().size(), "anchor");
    if (!(factor >= 1.0)) {
        throw ValidationError("inflation factor must be >= 1");
    }
    if (!contains(band, anchor)) {
        throw ValidationError("anchor function lies outside the band");
    }
    if (factor == 1.0) {
        return band;
    }
    const std::size_t m = anchor.size();
    std::vector<double> lo(m), hi(m);
    for (std::size_t t = 0; t < m; ++t) {
        const double a = anchor[t];
        lo[t] = a - factor * (a - band.lower()[t]);
        hi[t] = a + factor * (band.upper()[t] - a);
    }
    return Band(band.grid(), std::move(lo), std::move(hi));
}

std::vector<double> midline(const Band& band) {
    const std::size_t m = band.grid().size();
    std::vector<double> mid(m);
    for (std::size_t t = 0; t < m; ++t) {
        if (!std::isfinite(band.lower()[t]) || !std::isfinite(band.upper()[t])) {
            throw ValidationError("unbounded band");
        }
        mid[t] = 0.5 * (band.lower()[t] + band.upper()[t]);
    }
    return mid;
}

} // namespace fbox
