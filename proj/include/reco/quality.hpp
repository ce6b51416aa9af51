#pragma once

#include <array>
#include <optional>
#include <string>

namespace reco {

// Product versions, identified with their quality vectors (Q1, Q2).
enum class Version { Good = 0, Pref1 = 1, Pref2 = 2, Bad = 3 };  // (1,1) (1,0) (0,1) (0,0)

inline constexpr std::array<Version, 4> kVersions{Version::Good, Version::Pref1, Version::Pref2,
                                                  Version::Bad};

std::string to_string(Version v);

// Probability 4-vector indexed by Version: (H, 1, 2, L).
using ProbVec = std::array<double, 4>;

inline constexpr double kProbSumTol = 1e-12;

bool is_probability_vector(const ProbVec& p, double tol = kProbSumTol);

// Prior over the four product versions.
class QualityDistribution {
public:
    // Throws DomainError unless every component is >= 0 and they sum to 1 within 1e-12.
    QualityDistribution(double q_high, double q_1, double q_2, double q_low);
    explicit QualityDistribution(const ProbVec& q) : QualityDistribution(q[0], q[1], q[2], q[3]) {}

    double high() const noexcept { return q_[0]; }
    double pref1() const noexcept { return q_[1]; }
    double pref2() const noexcept { return q_[2]; }
    double low() const noexcept { return q_[3]; }
    double operator[](Version v) const noexcept { return q_[static_cast<int>(v)]; }
    const ProbVec& probs() const noexcept { return q_; }

    // Q = (q_1 + q_2) / 2, the prevalence of controversial products.
    double controversial_prevalence() const noexcept { return 0.5 * (q_[1] + q_[2]); }
    // sigma = q_H / q_L; empty when q_L = 0.
    std::optional<double> good_odds() const noexcept;
    // lambda = q_1 / q_2; empty when q_2 = 0.
    std::optional<double> controversial_odds() const noexcept;

    friend bool operator==(const QualityDistribution&, const QualityDistribution&) = default;

private:
    ProbVec q_;
};

}  // namespace reco
