#ifndef FBOX_GPSIM_HPP
#define FBOX_GPSIM_HPP

#include "fbox/grid.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <random>

/**
 * @file gpsim.hpp
 *
 * @brief Seeded sampling of centred Gaussian processes with the squared
 * exponential covariance `exp(-(s-t)^2 / h)`.
 *
 * Random numbers come from `std::mt19937_64`, whose output sequence is fixed by
 * the C++ standard; standard normals use the Marsaglia polar method on 53-bit
 * uniforms. Samples are therefore reproducible across platforms.
 */

namespace fbox {

struct GPModel {
    double h;
    Grid grid;
    double jitter = 1e-10;

    void validate() const;
};

/// Kernel matrix on the grid, with `jitter` added to the diagonal.
Eigen::MatrixXd covariance(const GPModel& model);

/// Uniform on [0,1) from the top 53 bits of one engine output.
inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Standard normal variates (Marsaglia polar method).
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
    double operator()();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// splitmix64 finaliser.
std::uint64_t mix_seed(std::uint64_t x);

/// Independent seed for stream `stream` derived from `base`.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream);

/**
 * @brief A GP model with its covariance already factorised.
 *
 * Factorisation retries with jitter multiplied by 10 up to 1e-6 before giving
 * up with "covariance not PD".
 */
class GaussianProcess {
public:
    explicit GaussianProcess(GPModel model);

    const GPModel& model() const { return model_; }
    /// Jitter that made the factorisation succeed.
    double jitter() const { return jitter_; }
    const Eigen::MatrixXd& factor() const { return factor_; }

    /// `n` independent draws `L z`, deterministic in `seed`.
    FunctionalSample sample(std::size_t n, std::uint64_t seed) const;

private:
    GPModel model_;
    double jitter_;
    Eigen::MatrixXd factor_;
};

FunctionalSample sample_gp(const GPModel& model, std::size_t n, std::uint64_t seed);

} // namespace fbox

#endif
