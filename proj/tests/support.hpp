#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "reco/model.hpp"

namespace reco::prop {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    // Every component at least `floor`.
    QualityDistribution quality(double floor = 0.0) {
        std::exponential_distribution<double> e(1.0);
        std::array<double, 4> w{};
        double total = 0.0;
        for (auto& x : w) total += (x = e(rng_));
        const double scale = 1.0 - 4.0 * floor;
        for (auto& x : w) x = floor + scale * x / total;
        w[3] = 1.0 - w[0] - w[1] - w[2];
        return QualityDistribution(w);
    }

    double threshold() { return uniform(0.02, 0.98); }

    // Symmetric CDFs with full support.
    TypeDistribution symmetric_type() {
        switch (integer(0, 2)) {
            case 0: return TypeDistribution::uniform();
            case 1: return TypeDistribution::piecewise_symmetric(uniform(0.05, 0.45), uniform(0.55, 0.95));
            default: {
                const double x = uniform(0.05, 0.45);
                const double fx = uniform(0.05, 0.45) * (0.5 - x) / 0.5 + 0.02;
                return TypeDistribution::tabulated({{-0.5, 0.0}, {-x, fx}, {0.0, 0.5}, {x, 1.0 - fx}, {0.5, 1.0}});
            }
        }
    }

    TypeDistribution power(double lo = 0.3, double hi = 3.0) { return TypeDistribution::power(uniform(lo, hi)); }

    TypeDistribution asymmetric_tabulated() {
        const int n = integer(1, 4);
        std::vector<double> xs, fs;
        for (int k = 0; k < n; ++k) {
            xs.push_back(uniform(-0.45, 0.45));
            fs.push_back(uniform(0.02, 0.98));
        }
        std::sort(xs.begin(), xs.end());
        std::sort(fs.begin(), fs.end());
        std::vector<std::pair<double, double>> pts{{-0.5, 0.0}};
        for (int k = 0; k < n; ++k) {
            if (xs[static_cast<std::size_t>(k)] > pts.back().first + 1e-3) pts.emplace_back(xs[static_cast<std::size_t>(k)], fs[static_cast<std::size_t>(k)]);
        }
        pts.emplace_back(0.5, 1.0);
        return TypeDistribution::tabulated(pts);
    }

    TypeDistribution any_type() {
        switch (integer(0, 2)) {
            case 0: return symmetric_type();
            case 1: return power();
            default: return asymmetric_tabulated();
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline bool is_prob(const ProbVec& p, double tol = 1e-12) {
    double s = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) return false;
        s += x;
    }
    return std::abs(s - 1.0) <= tol;
}

}  // namespace reco::prop
