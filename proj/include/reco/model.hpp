#pragma once

#include <string>

#include "reco/quality.hpp"
#include "reco/type_distribution.hpp"

namespace reco {

// Thresholds are validated to this closed range; symbolic limits R -> 0 / R -> 1 are
// evaluated at kExtremeLow / kExtremeHigh.
inline constexpr double kThresholdMin = 1e-9;
inline constexpr double kThresholdMax = 1.0 - 1e-9;
inline constexpr double kExtremeLow = 1e-6;
inline constexpr double kExtremeHigh = 1.0 - 1e-6;

enum class Recommendation { Buy, DontBuy, Neutral, None };

std::string to_string(Recommendation r);

void validate_threshold(double r);
void validate_type(double i);

// Decision environment (q, F) plus a threshold. `receiver` defaults to the sender
// population; when they differ the system is in distinct-populations mode.
struct RecommendationSystem {
    QualityDistribution quality;
    TypeDistribution sender;
    TypeDistribution receiver;
    double threshold;

    RecommendationSystem(QualityDistribution q, TypeDistribution f, double r);
    RecommendationSystem(QualityDistribution q, TypeDistribution f, TypeDistribution g, double r);

    RecommendationSystem with_threshold(double r) const;
    bool distinct_populations() const noexcept { return distinct_; }

private:
    bool distinct_ = false;
};

struct Posterior {
    Recommendation recommendation = Recommendation::None;
    ProbVec probs{};

    double operator[](Version v) const noexcept { return probs[static_cast<int>(v)]; }
};

// v(Q1, Q2, i) = (1/2 + i) Q1 + (1/2 - i) Q2.
double payoff(Version v, double i);

// Buy iff the sender's payoff is at least R (ties give Buy).
Recommendation sender_recommendation(Version v, double i, double r);

// Probability of a buy recommendation given version (1,0) and (0,1).
struct PhiPair {
    double phi1;
    double phi2;
};

PhiPair phi_pair(const TypeDistribution& f, double r);

struct RecommendationProbabilities {
    double buy;
    double dont_buy;
};

RecommendationProbabilities recommendation_probabilities(const RecommendationSystem& sys);

// Bayesian posterior after a Buy or DontBuy recommendation. Throws
// UnreachableRecommendation when the recommendation has probability zero.
Posterior posterior(const RecommendationSystem& sys, Recommendation r);

// Splits p^B - q into three steps: removal of the bad version (q -> q'), promotion of
// the good version at fixed controversial odds (q' -> q''), and the odds shift between
// controversial versions (q'' -> p^B).
struct BeliefDecomposition {
    ProbVec prior;
    ProbVec step1;      // q'
    ProbVec step2;      // q''
    ProbVec posterior;  // p^B
    double k;

    // (p^B - q'') + (q'' - q') + (q' - q), component-wise.
    ProbVec telescoped_total() const;
};

BeliefDecomposition belief_decomposition(const RecommendationSystem& sys);

}  // namespace reco
