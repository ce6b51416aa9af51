#include "reco/receiver.hpp"

#include <cmath>

namespace reco {

double expected_utility(double i, const ProbVec& belief) {
    validate_type(i);
    return belief[0] + (0.5 + i) * belief[1] + (0.5 - i) * belief[2];
}

EffectPair effects_of(const ProbVec& prior, const Posterior& post) {
    const auto& p = post.probs;
    EffectPair e;
    e.recommendation = post.recommendation;
    e.objective = (p[0] - prior[0]) + 0.5 * (p[1] - prior[1]) + 0.5 * (p[2] - prior[2]);
    e.subjective = (p[2] - prior[2]) - (p[1] - prior[1]);
    return e;
}

EffectPair effects(const RecommendationSystem& sys, Recommendation r) {
    return effects_of(sys.quality.probs(), posterior(sys, r));
}

BeliefState belief_state(const RecommendationSystem& sys) {
    const auto probs = recommendation_probabilities(sys);
    BeliefState s{probs.buy,
                  posterior(sys, Recommendation::Buy),
                  posterior(sys, Recommendation::DontBuy),
                  {},
                  {}};
    s.buy_effects = effects_of(sys.quality.probs(), s.buy);
    s.dont_buy_effects = effects_of(sys.quality.probs(), s.dont_buy);
    return s;
}

bool accepts(const EffectPair& buy, double i) {
    validate_type(i);
    return buy.objective >= i * buy.subjective;
}

bool accepts(const RecommendationSystem& sys, double i) {
    return accepts(effects(sys, Recommendation::Buy), i);
}

std::optional<double> indifferent_type(const EffectPair& buy) {
    if (std::abs(buy.subjective) < kSubjectiveZero) return std::nullopt;
    return buy.objective / buy.subjective;
}

std::optional<double> indifferent_type(const RecommendationSystem& sys) {
    return indifferent_type(effects(sys, Recommendation::Buy));
}

bool AcceptanceRegion::contains(double i) const {
    switch (kind) {
        case Kind::All: return true;
        case Kind::UpperSet: return i >= i_tilde;
        case Kind::LowerSet: return i <= i_tilde;
    }
    return true;
}

std::string to_string(AcceptanceRegion::Kind k) {
    switch (k) {
        case AcceptanceRegion::Kind::All: return "All";
        case AcceptanceRegion::Kind::UpperSet: return "UpperSet";
        case AcceptanceRegion::Kind::LowerSet: return "LowerSet";
    }
    return "?";
}

AcceptanceRegion acceptance_region(const EffectPair& buy) {
    const double d_o = buy.objective;
    const double d_s = std::abs(buy.subjective) < kSubjectiveZero ? 0.0 : buy.subjective;
    if (std::abs(d_s) <= 2.0 * d_o + kRegionTol) return {};
    const double i_tilde = d_o / d_s;
    if (d_s < 0.0) {
        if (i_tilde <= kTypeMin) return {};
        return {AcceptanceRegion::Kind::UpperSet, i_tilde};
    }
    if (i_tilde >= kTypeMax) return {};
    return {AcceptanceRegion::Kind::LowerSet, i_tilde};
}

AcceptanceRegion acceptance_region(const RecommendationSystem& sys) {
    return acceptance_region(effects(sys, Recommendation::Buy));
}

}  // namespace reco
