#include "fbox/gpsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fbox {

void GPModel::validate() const {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw ValidationError("GP bandwidth h must be positive");
    }
    if (!(jitter >= 0.0)) {
        throw ValidationError("GP jitter must be nonnegative");
    }
}

Eigen::MatrixXd covariance(const GPModel& model) {
    model.validate();
    const auto t = model.grid.points();
    const auto m = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd cov(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double d = t[static_cast<std::size_t>(i)] - t[static_cast<std::size_t>(j)];
            const double k = std::exp(-d * d / model.h);
            cov(i, j) = k;
            cov(j, i) = k;
        }
        cov(i, i) += model.jitter;
    }
    return cov;
}

double NormalStream::operator()() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01(engine_) - 1.0;
        v = 2.0 * uniform01(engine_) - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t stream) {
    return mix_seed(mix_seed(base) ^ stream);
}

GaussianProcess::GaussianProcess(GPModel model) : model_(std::move(model)), jitter_(model_.jitter) {
    model_.validate();
    GPModel trial = model_;
    constexpr double max_jitter = 1e-6;
    for (;;) {
        Eigen::LLT<Eigen::MatrixXd> llt(covariance(trial));
        if (llt.info() == Eigen::Success) {
            factor_ = llt.matrixL();
            jitter_ = trial.jitter;
            return;
        }
        if (trial.jitter >= max_jitter) {
            throw std::runtime_error("covariance not PD");
        }
        trial.jitter = trial.jitter > 0.0 ? std::min(trial.jitter * 10.0, max_jitter) : 1e-10;
    }
}

FunctionalSample GaussianProcess::sample(std::size_t n, std::uint64_t seed) const {
    if (n < 1) {
        throw ValidationError("GP sample size must be at least 1");
    }
    const std::size_t m = model_.grid.size();
    NormalStream normal(seed);
    std::vector<double> values(n * m);
    std::vector<double> z(m);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& zi : z) {
            zi = normal();
        }
        double* row = values.data() + i * m;
        for (std::size_t t = 0; t < m; ++t) {
            double acc = 0.0;
            for (std::size_t s = 0; s <= t; ++s) {
                acc += factor_(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) * z[s];
            }
            row[t] = acc;
        }
    }
    return FunctionalSample(model_.grid, n, std::move(values));
}

FunctionalSample sample_gp(const GPModel& model, std::size_t n, std::uint64_t seed) {
    return GaussianProcess(model).sample(n, seed);
}

} // namespace fbox
