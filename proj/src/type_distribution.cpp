#include "reco/type_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reco/errors.hpp"

namespace reco {
namespace {

double clamp_type(double i) { return std::clamp(i, kTypeMin, kTypeMax); }

// Integral of i dF over [x0, x1] where F has constant slope on the interval.
double segment_moment(double x0, double x1, double slope) {
    return slope * 0.5 * (x1 * x1 - x0 * x0);
}

}  // namespace

TypeDistribution TypeDistribution::uniform() {
    TypeDistribution d;
    d.family_ = Family::Uniform;
    d.a_ = 1.0;
    return d;
}

TypeDistribution TypeDistribution::power(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("power type distribution: shape a must be positive");
    }
    TypeDistribution d;
    d.family_ = Family::Power;
    d.a_ = a;
    return d;
}

TypeDistribution TypeDistribution::piecewise_symmetric(double beta_target, double r_ref) {
    if (!(beta_target >= 0.0 && beta_target <= 0.5)) {
        throw DomainError("piecewise_symmetric: beta must lie in [0, 1/2]");
    }
    if (!(r_ref > 0.5 && r_ref < 1.0)) {
        throw DomainError("piecewise_symmetric: R_ref must lie in (1/2, 1)");
    }
    TypeDistribution d;
    d.family_ = Family::PiecewiseSymmetric;
    d.beta_ = beta_target;
    d.r_ref_ = r_ref;
    const double k = r_ref - 0.5;
    d.knots_ = {{kTypeMin, 0.0}, {-k, beta_target}, {k, 1.0 - beta_target}, {kTypeMax, 1.0}};
    return d;
}

TypeDistribution TypeDistribution::tabulated(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw DomainError("tabulated type distribution: need at least two points");
    }
    if (points.front() != std::pair{kTypeMin, 0.0} || points.back() != std::pair{kTypeMax, 1.0}) {
        throw DomainError("tabulated type distribution: must be anchored at (-1/2, 0) and (1/2, 1)");
    }
    for (std::size_t k = 1; k < points.size(); ++k) {
        if (!(points[k].first > points[k - 1].first)) {
            throw DomainError("tabulated type distribution: types must be strictly increasing");
        }
        if (!(points[k].second >= points[k - 1].second) || points[k].second > 1.0) {
            throw DomainError("tabulated type distribution: CDF values must be non-decreasing in [0, 1]");
        }
    }
    TypeDistribution d;
    d.family_ = Family::Tabulated;
    d.knots_ = std::move(points);
    return d;
}

std::string TypeDistribution::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Uniform: os << "uniform"; break;
        case Family::Power: os << "power(a=" << a_ << ")"; break;
        case Family::PiecewiseSymmetric:
            os << "piecewise_symmetric(beta=" << beta_ << ", R_ref=" << r_ref_ << ")";
            break;
        case Family::Tabulated: os << "tabulated(" << knots_.size() << " points)"; break;
    }
    return os.str();
}

double TypeDistribution::linear_cdf(double i) const {
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), i,
                                     [](double x, const auto& k) { return x < k.first; });
    if (it == knots_.begin()) return 0.0;
    if (it == knots_.end()) return 1.0;
    const auto& [x0, f0] = *(it - 1);
    const auto& [x1, f1] = *it;
    return f0 + (f1 - f0) * (i - x0) / (x1 - x0);
}

double TypeDistribution::cdf(double i) const {
    const double x = clamp_type(i);
    switch (family_) {
        case Family::Uniform: return x + 0.5;
        case Family::Power: return std::pow(x + 0.5, a_);
        case Family::PiecewiseSymmetric:
        case Family::Tabulated: return linear_cdf(x);
    }
    return 0.0;
}

double TypeDistribution::quantile(double u) const {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("quantile: probability must lie in [0, 1]");
    }
    if (u == 0.0) return kTypeMin;
    switch (family_) {
        case Family::Uniform: return u - 0.5;
        case Family::Power: return std::pow(u, 1.0 / a_) - 0.5;
        case Family::PiecewiseSymmetric:
        case Family::Tabulated:
            for (std::size_t k = 1; k < knots_.size(); ++k) {
                const auto& [x0, f0] = knots_[k - 1];
                const auto& [x1, f1] = knots_[k];
                if (u <= f1 && f1 > f0) {
                    return x0 + (x1 - x0) * (u - f0) / (f1 - f0);
                }
            }
            return kTypeMax;
    }
    return kTypeMax;
}

double TypeDistribution::mean() const { return partial_moment(kTypeMin, kTypeMax); }

double TypeDistribution::mass(double lo, double hi) const {
    return std::max(0.0, cdf(hi) - cdf(lo));
}

double TypeDistribution::linear_partial_moment(double lo, double hi) const {
    double total = 0.0;
    for (std::size_t k = 1; k < knots_.size(); ++k) {
        const auto& [x0, f0] = knots_[k - 1];
        const auto& [x1, f1] = knots_[k];
        const double a = std::max(lo, x0);
        const double b = std::min(hi, x1);
        if (b > a) total += segment_moment(a, b, (f1 - f0) / (x1 - x0));
    }
    return total;
}

double TypeDistribution::partial_moment(double lo, double hi) const {
    lo = clamp_type(lo);
    hi = clamp_type(hi);
    if (hi <= lo) return 0.0;
    switch (family_) {
        case Family::Uniform:
        case Family::Power: {
            const auto antiderivative = [a = a_](double x) {
                return a / (a + 1.0) * std::pow(x, a + 1.0) - 0.5 * std::pow(x, a);
            };
            return antiderivative(hi + 0.5) - antiderivative(lo + 0.5);
        }
        case Family::PiecewiseSymmetric:
        case Family::Tabulated: return linear_partial_moment(lo, hi);
    }
    return 0.0;
}

double TypeDistribution::conditional_mean(double lo, double hi) const {
    const double m = mass(lo, hi);
    if (!(m > 0.0)) {
        throw EmptyInterval("conditional mean over an interval with zero probability mass");
    }
    return partial_moment(lo, hi) / m;
}

double TypeDistribution::integrate(const std::function<double(double)>& g, double lo, double hi,
                                   QuadratureOptions opts) const {
    lo = clamp_type(lo);
    hi = clamp_type(hi);
    if (!(hi > lo)) return 0.0;
    switch (family_) {
        case Family::Uniform: return adaptive_simpson(g, lo, hi, opts);
        case Family::Power:
            if (a_ >= 1.0) {
                // Density is bounded here; the quantile is not smooth at u = 0.
                const double a = a_;
                return adaptive_simpson(
                    [&](double i) { return g(i) * a * std::pow(i + 0.5, a - 1.0); }, lo, hi, opts);
            }
            return adaptive_simpson([&](double u) { return g(quantile(std::clamp(u, 0.0, 1.0))); },
                                    cdf(lo), cdf(hi), opts);
        case Family::PiecewiseSymmetric:
        case Family::Tabulated: {
            // Constant density on each segment.
            double total = 0.0;
            for (std::size_t k = 1; k < knots_.size(); ++k) {
                const auto& [x0, f0] = knots_[k - 1];
                const auto& [x1, f1] = knots_[k];
                const double a = std::max(lo, x0);
                const double b = std::min(hi, x1);
                if (b > a && f1 > f0) {
                    total += (f1 - f0) / (x1 - x0) * adaptive_simpson(g, a, b, opts);
                }
            }
            return total;
        }
    }
    return 0.0;
}

bool TypeDistribution::is_symmetric() const {
    switch (family_) {
        case Family::Uniform:
        case Family::PiecewiseSymmetric: return true;
        case Family::Power: return a_ == 1.0;
        case Family::Tabulated:
            return std::all_of(knots_.begin(), knots_.end(), [this](const auto& k) {
                return std::abs(linear_cdf(-k.first) - (1.0 - k.second)) <= 1e-12;
            });
    }
    return false;
}

}  // namespace reco
