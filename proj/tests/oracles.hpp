// Brute-force reference implementations used as test oracles.
// Nothing here calls into the library's depth code.

#ifndef FBOX_TESTS_ORACLES_HPP
#define FBOX_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<double>>;

inline double halfspace(double u, const std::vector<double>& q) {
    std::size_t le = 0, ge = 0;
    for (double x : q) {
        le += x <= u;
        ge += x >= u;
    }
    return static_cast<double>(std::min(le, ge)) / static_cast<double>(q.size());
}

// Ordered pairs with replacement whose closed segment contains u.
inline std::size_t simplicial_pairs(double u, const std::vector<double>& q) {
    std::size_t hits = 0;
    for (double a : q) {
        for (double b : q) {
            hits += std::min(a, b) <= u && u <= std::max(a, b);
        }
    }
    return hits;
}

inline double simplicial(double u, const std::vector<double>& q) {
    const double n = static_cast<double>(q.size());
    return static_cast<double>(simplicial_pairs(u, q)) / (n * n);
}

inline std::vector<double> column(const Rows& rows, std::size_t t) {
    std::vector<double> c;
    for (const auto& r : rows) {
        c.push_back(r[t]);
    }
    return c;
}

// Ordered pairs whose band contains f at every grid point.
inline double band_depth(const Rows& rows, const std::vector<double>& f) {
    std::size_t hits = 0;
    for (const auto& a : rows) {
        for (const auto& b : rows) {
            bool inside = true;
            for (std::size_t t = 0; t < f.size() && inside; ++t) {
                inside = std::min(a[t], b[t]) <= f[t] && f[t] <= std::max(a[t], b[t]);
            }
            hits += inside;
        }
    }
    const double n = static_cast<double>(rows.size());
    return static_cast<double>(hits) / (n * n);
}

// Weighted share of grid points covered, averaged over ordered pairs.
inline double mbd(const Rows& rows, const std::vector<double>& f, const std::vector<double>& w) {
    double total = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        total += w[t] * simplicial(f[t], column(rows, t));
    }
    return total;
}

inline double integrated(const Rows& rows, const std::vector<double>& f, const std::vector<double>& w, bool simpl) {
    double total = 0.0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        const auto c = column(rows, t);
        total += w[t] * (simpl ? simplicial(f[t], c) : halfspace(f[t], c));
    }
    return total;
}

inline double infimal(const Rows& rows, const std::vector<double>& f, bool simpl) {
    double best = 1.0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        const auto c = column(rows, t);
        best = std::min(best, simpl ? simplicial(f[t], c) : halfspace(f[t], c));
    }
    return best;
}

// Two-sided rank min(#<=, #>=) of every entry.
inline std::vector<std::vector<std::size_t>> two_sided_ranks(const Rows& rows) {
    std::vector<std::vector<std::size_t>> r(rows.size(), std::vector<std::size_t>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t t = 0; t < rows[0].size(); ++t) {
            std::size_t le = 0, ge = 0;
            for (const auto& o : rows) {
                le += o[t] <= rows[i][t];
                ge += o[t] >= rows[i][t];
            }
            r[i][t] = std::min(le, ge);
        }
    }
    return r;
}

// Share of functions whose sorted rank vector is lexicographically <= own.
inline std::vector<double> erl(const Rows& rows) {
    auto r = two_sided_ranks(rows);
    for (auto& v : r) {
        std::sort(v.begin(), v.end());
    }
    std::vector<double> s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            c += !(r[i] < r[j]);
        }
        s[i] = static_cast<double>(c) / static_cast<double>(rows.size());
    }
    return s;
}

// Small integers make ties frequent.
inline Rows random_integer_rows(std::mt19937_64& rng, std::size_t n, std::size_t m, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Rows rows(n, std::vector<double>(m));
    for (auto& r : rows) {
        for (auto& x : r) {
            x = d(rng);
        }
    }
    return rows;
}

inline Rows random_real_rows(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::normal_distribution<double> d;
    Rows rows(n, std::vector<double>(m));
    for (auto& r : rows) {
        for (auto& x : r) {
            x = d(rng);
        }
    }
    return rows;
}

} // namespace oracle

#endif
