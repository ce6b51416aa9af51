#include "reco/model.hpp"

#include <cmath>

#include "reco/errors.hpp"

namespace reco {

std::string to_string(Recommendation r) {
    switch (r) {
        case Recommendation::Buy: return "Buy";
        case Recommendation::DontBuy: return "DontBuy";
        case Recommendation::Neutral: return "Neutral";
        case Recommendation::None: return "None";
    }
    return "?";
}

void validate_threshold(double r) {
    if (!(r >= kThresholdMin && r <= kThresholdMax)) {
        throw DomainError("threshold out of (0,1)");
    }
}

void validate_type(double i) {
    if (!(i >= kTypeMin && i <= kTypeMax)) {
        throw DomainError("receiver type outside [-1/2, 1/2]");
    }
}

RecommendationSystem::RecommendationSystem(QualityDistribution q, TypeDistribution f, double r)
    : quality(q), sender(f), receiver(std::move(f)), threshold(r) {
    validate_threshold(r);
}

RecommendationSystem::RecommendationSystem(QualityDistribution q, TypeDistribution f,
                                           TypeDistribution g, double r)
    : quality(q), sender(std::move(f)), receiver(std::move(g)), threshold(r), distinct_(true) {
    validate_threshold(r);
}

RecommendationSystem RecommendationSystem::with_threshold(double r) const {
    RecommendationSystem copy = *this;
    validate_threshold(r);
    copy.threshold = r;
    return copy;
}

double payoff(Version v, double i) {
    validate_type(i);
    switch (v) {
        case Version::Good: return 1.0;
        case Version::Pref1: return 0.5 + i;
        case Version::Pref2: return 0.5 - i;
        case Version::Bad: return 0.0;
    }
    return 0.0;
}

Recommendation sender_recommendation(Version v, double i, double r) {
    validate_threshold(r);
    return payoff(v, i) >= r ? Recommendation::Buy : Recommendation::DontBuy;
}

PhiPair phi_pair(const TypeDistribution& f, double r) {
    validate_threshold(r);
    return {1.0 - f.cdf(r - 0.5), f.cdf(0.5 - r)};
}

RecommendationProbabilities recommendation_probabilities(const RecommendationSystem& sys) {
    const auto [phi1, phi2] = phi_pair(sys.sender, sys.threshold);
    const auto& q = sys.quality;
    const double buy = q.high() + q.pref1() * phi1 + q.pref2() * phi2;
    const double dont = q.pref1() * (1.0 - phi1) + q.pref2() * (1.0 - phi2) + q.low();
    return {buy, dont};
}

Posterior posterior(const RecommendationSystem& sys, Recommendation r) {
    const auto [phi1, phi2] = phi_pair(sys.sender, sys.threshold);
    const auto& q = sys.quality;
    ProbVec w{};
    switch (r) {
        case Recommendation::Buy:
            w = {q.high(), q.pref1() * phi1, q.pref2() * phi2, 0.0};
            break;
        case Recommendation::DontBuy:
            w = {0.0, q.pref1() * (1.0 - phi1), q.pref2() * (1.0 - phi2), q.low()};
            break;
        default:
            throw DomainError("single-threshold posterior requires Buy or DontBuy");
    }
    const double total = w[0] + w[1] + w[2] + w[3];
    if (!(total > 0.0)) {
        throw UnreachableRecommendation("unreachable recommendation: " + to_string(r) +
                                        " has probability zero");
    }
    for (double& x : w) x /= total;
    return {r, w};
}

ProbVec BeliefDecomposition::telescoped_total() const {
    ProbVec out{};
    for (int s = 0; s < 4; ++s) {
        out[s] = (posterior[s] - step2[s]) + (step2[s] - step1[s]) + (step1[s] - prior[s]);
    }
    return out;
}

BeliefDecomposition belief_decomposition(const RecommendationSystem& sys) {
    const auto& q = sys.quality;
    const double controversial = q.pref1() + q.pref2();
    if (!(controversial > 0.0)) {
        throw DecompositionUndefined("belief decomposition undefined: q_1 + q_2 = 0");
    }
    if (!(q.low() < 1.0)) {
        throw DecompositionUndefined("belief decomposition undefined: q_L = 1");
    }
    const Posterior pb = posterior(sys, Recommendation::Buy);
    const double keep = 1.0 - q.low();
    const double k = (1.0 - pb.probs[0]) * keep / controversial;

    BeliefDecomposition out;
    out.prior = q.probs();
    out.step1 = {q.high() / keep, q.pref1() / keep, q.pref2() / keep, 0.0};
    out.step2 = {pb.probs[0], k * q.pref1() / keep, k * q.pref2() / keep, 0.0};
    out.posterior = pb.probs;
    out.k = k;
    return out;
}

}  // namespace reco
