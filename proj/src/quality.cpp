#include "reco/quality.hpp"

#include <cmath>
#include <numeric>

#include "reco/errors.hpp"

namespace reco {

std::string to_string(Version v) {
    switch (v) {
        case Version::Good: return "(1,1)";
        case Version::Pref1: return "(1,0)";
        case Version::Pref2: return "(0,1)";
        case Version::Bad: return "(0,0)";
    }
    return "?";
}

bool is_probability_vector(const ProbVec& p, double tol) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) return false;
        sum += x;
    }
    return std::abs(sum - 1.0) <= tol;
}

QualityDistribution::QualityDistribution(double q_high, double q_1, double q_2, double q_low)
    : q_{q_high, q_1, q_2, q_low} {
    for (double x : q_) {
        if (!std::isfinite(x) || x < 0.0) {
            throw DomainError("quality distribution: components must be finite and >= 0");
        }
    }
    const double sum = std::accumulate(q_.begin(), q_.end(), 0.0);
    if (std::abs(sum - 1.0) > kProbSumTol) {
        throw DomainError("quality distribution: components must sum to 1");
    }
}

std::optional<double> QualityDistribution::good_odds() const noexcept {
    if (q_[3] <= 0.0) return std::nullopt;
    return q_[0] / q_[3];
}

std::optional<double> QualityDistribution::controversial_odds() const noexcept {
    if (q_[2] <= 0.0) return std::nullopt;
    return q_[1] / q_[2];
}

}  // namespace reco
