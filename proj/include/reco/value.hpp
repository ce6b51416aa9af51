#pragma once

#include <optional>
#include <string>

#include "reco/receiver.hpp"
#include "reco/record.hpp"

namespace reco {

// Agreement required between the case-wise closed form and the direct integral.
inline constexpr double kIntegralAgreementTol = 1e-9;

// V_0(i) = U_i^0: expected payoff when buying on prior beliefs.
double value_no_rec(double i, const QualityDistribution& q);
// V_A(i) = pi^B U_i^B + (1 - pi^B) U_i^0.
double value_accepting(const RecommendationSystem& sys, double i);
// V_N(i) = pi^B U_i^0 + (1 - pi^B) U_i^D.
double value_rejecting(const RecommendationSystem& sys, double i);

enum class ValueCase { AllAccept, UpperAccept, LowerAccept };

std::string to_string(ValueCase c);

struct ValueReport {
    double value = 0.0;
    double pi_buy = 0.0;
    EffectPair buy;
    EffectPair dont_buy;
    AcceptanceRegion region;
    std::optional<double> i_tilde;  // raw Delta_O^B / Delta_S^B, before region normalization
    double accepting_term = 0.0;    // contribution of types accepting the recommendation
    double rejecting_term = 0.0;    // contribution of types rejecting it
    ValueCase case_label = ValueCase::AllAccept;
};

// Value of the recommendation system: sender effects weighted by the receiver population,
// with the acceptance region fixing which closed-form case applies.
ValueReport system_value(const RecommendationSystem& sys);

// The same value as the receiver-weighted integral of V_A - V_0 over accepting types plus
// V_N - V_0 over rejecting types, evaluated by quadrature.
double value_by_integration(const RecommendationSystem& sys, QuadratureOptions opts = {});

// system_value followed by the integral cross-check; throws std::logic_error when the two
// disagree by more than kIntegralAgreementTol.
ValueReport system_value_checked(const RecommendationSystem& sys);

Record to_record(const ValueReport& report);

// (Q, sigma, beta) parameterization of a symmetric system; lambda = q_1 / q_2.
struct SymmetricParams {
    double Q = 0.0;
    double sigma = 1.0;
    double beta = 0.5;
    double lambda = 1.0;
};

// Closed-form value pi^B Delta_O^B of a symmetric system.
double symmetric_value(const SymmetricParams& p);

struct QualityParams {
    double Q;
    std::optional<double> sigma;   // undefined when q_L = 0
    std::optional<double> lambda;  // undefined when q_2 = 0
};

QualityParams reparameterize(const QualityDistribution& q);
QualityDistribution quality_from_params(double Q, double sigma, double lambda = 1.0);

}  // namespace reco
