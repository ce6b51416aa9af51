#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reco/quadrature.hpp"

namespace reco {

inline constexpr double kTypeMin = -0.5;
inline constexpr double kTypeMax = 0.5;

// Continuous CDF of consumer types on [-1/2, 1/2].
//
// Families:
//   uniform                  F(i) = i + 1/2
//   power(a)                 F(i) = (i + 1/2)^a, a > 0
//   piecewise_symmetric(b,R) three linear segments with knots at +-(R - 1/2) and
//                            F(-(R - 1/2)) = b; flat segments appear at b = 0 and b = 1/2
//   tabulated(points)        linear interpolation of (i, F(i)) anchored at (-1/2, 0), (1/2, 1)
//
// Uniform, power and piecewise answer moment queries in closed form; tabulated CDFs use
// adaptive Simpson quadrature and invert by bisection.
class TypeDistribution {
public:
    enum class Family { Uniform, Power, PiecewiseSymmetric, Tabulated };

    static TypeDistribution uniform();
    static TypeDistribution power(double a);
    static TypeDistribution piecewise_symmetric(double beta_target, double r_ref);
    static TypeDistribution tabulated(std::vector<std::pair<double, double>> points);

    Family family() const noexcept { return family_; }
    std::string describe() const;

    // Family parameters; meaningful only for the matching family.
    double shape() const noexcept { return a_; }
    double beta_target() const noexcept { return beta_; }
    double r_ref() const noexcept { return r_ref_; }
    const std::vector<std::pair<double, double>>& points() const noexcept { return knots_; }

    // F(i); arguments outside [-1/2, 1/2] are clamped.
    double cdf(double i) const;
    // Smallest i with F(i) >= u, for u in [0, 1].
    double quantile(double u) const;

    double mean() const;
    // F(hi) - F(lo).
    double mass(double lo, double hi) const;
    // Integral of i dF(i) over [lo, hi].
    double partial_moment(double lo, double hi) const;
    // E[i | lo <= i <= hi]; throws EmptyInterval when the interval has no mass.
    double conditional_mean(double lo, double hi) const;

    // Integral of g(i) dF(i) over [lo, hi] by adaptive quadrature; does not use the
    // closed-form moments.
    double integrate(const std::function<double(double)>& g, double lo, double hi,
                     QuadratureOptions opts = {}) const;

    // F(-i) = 1 - F(i) for all i (checked exactly for built-in families, at knots for tables).
    bool is_symmetric() const;

private:
    TypeDistribution() = default;

    double linear_cdf(double i) const;
    double linear_partial_moment(double lo, double hi) const;

    Family family_ = Family::Uniform;
    double a_ = 1.0;
    double beta_ = 0.0;
    double r_ref_ = 0.0;
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace reco
