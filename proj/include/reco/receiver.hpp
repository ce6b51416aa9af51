#pragma once

#include <optional>
#include <string>

#include "reco/model.hpp"

namespace reco {

inline constexpr double kRegionTol = 1e-12;
inline constexpr double kSubjectiveZero = 1e-12;

// U_i = p_H + (1/2 + i) p_1 + (1/2 - i) p_2 for a belief p (posterior or prior).
double expected_utility(double i, const ProbVec& belief);

// Objective and subjective effect of a recommendation, in payoff units.
struct EffectPair {
    Recommendation recommendation = Recommendation::None;
    double objective = 0.0;   // Delta_O
    double subjective = 0.0;  // Delta_S
};

EffectPair effects_of(const ProbVec& prior, const Posterior& post);
EffectPair effects(const RecommendationSystem& sys, Recommendation r);

// Everything a receiver needs to decide; computed once per system.
struct BeliefState {
    double pi_buy;
    Posterior buy;
    Posterior dont_buy;
    EffectPair buy_effects;
    EffectPair dont_buy_effects;
};

BeliefState belief_state(const RecommendationSystem& sys);

// Acceptance of a buy recommendation is equivalent to acceptance of a don't-buy one;
// type i accepts iff Delta_O^B >= i Delta_S^B, indifferent types accept.
bool accepts(const EffectPair& buy, double i);
bool accepts(const RecommendationSystem& sys, double i);

// Delta_O^B / Delta_S^B; empty when |Delta_S^B| < 1e-12.
std::optional<double> indifferent_type(const EffectPair& buy);
std::optional<double> indifferent_type(const RecommendationSystem& sys);

struct AcceptanceRegion {
    enum class Kind { All, UpperSet, LowerSet };

    Kind kind = Kind::All;
    // Indifferent type; meaningful for UpperSet ({i >= i_tilde}) and LowerSet ({i <= i_tilde}).
    double i_tilde = 0.0;

    bool contains(double i) const;
};

std::string to_string(AcceptanceRegion::Kind k);

AcceptanceRegion acceptance_region(const EffectPair& buy);
AcceptanceRegion acceptance_region(const RecommendationSystem& sys);

}  // namespace reco
