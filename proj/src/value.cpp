#include "reco/value.hpp"

#include <cmath>
#include <stdexcept>

#include "reco/errors.hpp"

namespace reco {

double value_no_rec(double i, const QualityDistribution& q) {
    return expected_utility(i, q.probs());
}

double value_accepting(const RecommendationSystem& sys, double i) {
    const double pi_b = recommendation_probabilities(sys).buy;
    const double u0 = expected_utility(i, sys.quality.probs());
    if (pi_b <= 0.0) return u0;
    return pi_b * expected_utility(i, posterior(sys, Recommendation::Buy).probs) +
           (1.0 - pi_b) * u0;
}

double value_rejecting(const RecommendationSystem& sys, double i) {
    const double pi_b = recommendation_probabilities(sys).buy;
    const double u0 = expected_utility(i, sys.quality.probs());
    if (pi_b >= 1.0) return u0;
    return pi_b * u0 +
           (1.0 - pi_b) * expected_utility(i, posterior(sys, Recommendation::DontBuy).probs);
}

std::string to_string(ValueCase c) {
    switch (c) {
        case ValueCase::AllAccept: return "AllAccept";
        case ValueCase::UpperAccept: return "UpperAccept";
        case ValueCase::LowerAccept: return "LowerAccept";
    }
    return "?";
}

namespace {

// Effect of a recommendation integrated over the types in [lo, hi]:
// mass * Delta_O - Delta_S * int i dG, i.e. G-mass times [Delta_O - Delta_S E[i | lo..hi]].
// Empty intervals contribute zero.
double weighted_effect(const EffectPair& e, const TypeDistribution& g, double lo, double hi) {
    return g.mass(lo, hi) * e.objective - e.subjective * g.partial_moment(lo, hi);
}

}  // namespace

ValueReport system_value(const RecommendationSystem& sys) {
    const auto& g = sys.receiver;
    const auto probs = recommendation_probabilities(sys);
    ValueReport r;
    r.pi_buy = probs.buy;
    if (probs.buy > 0.0) r.buy = effects(sys, Recommendation::Buy);
    if (probs.dont_buy > 0.0) r.dont_buy = effects(sys, Recommendation::DontBuy);
    r.i_tilde = indifferent_type(r.buy);
    r.region = acceptance_region(r.buy);

    const double pi_b = probs.buy;
    const double pi_d = 1.0 - probs.buy;
    switch (r.region.kind) {
        case AcceptanceRegion::Kind::All:
            r.case_label = ValueCase::AllAccept;
            r.accepting_term = pi_b * (r.buy.objective - r.buy.subjective * g.mean());
            r.rejecting_term = 0.0;
            break;
        case AcceptanceRegion::Kind::UpperSet:
            r.case_label = ValueCase::UpperAccept;
            r.accepting_term = pi_b * weighted_effect(r.buy, g, r.region.i_tilde, kTypeMax);
            r.rejecting_term = pi_d * weighted_effect(r.dont_buy, g, kTypeMin, r.region.i_tilde);
            break;
        case AcceptanceRegion::Kind::LowerSet:
            r.case_label = ValueCase::LowerAccept;
            r.accepting_term = pi_b * weighted_effect(r.buy, g, kTypeMin, r.region.i_tilde);
            r.rejecting_term = pi_d * weighted_effect(r.dont_buy, g, r.region.i_tilde, kTypeMax);
            break;
    }
    r.value = r.accepting_term + r.rejecting_term;
    return r;
}

double value_by_integration(const RecommendationSystem& sys, QuadratureOptions opts) {
    const auto& g = sys.receiver;
    const auto& prior = sys.quality.probs();
    const auto probs = recommendation_probabilities(sys);
    const double pi_b = probs.buy;
    const double pi_d = 1.0 - probs.buy;
    const ProbVec p_buy = pi_b > 0.0 ? posterior(sys, Recommendation::Buy).probs : prior;
    const ProbVec p_dont = pi_d > 0.0 ? posterior(sys, Recommendation::DontBuy).probs : prior;

    const auto gain_accept = [&](double i) {
        return pi_b * (expected_utility(i, p_buy) - expected_utility(i, prior));
    };
    const auto gain_reject = [&](double i) {
        return pi_d * (expected_utility(i, p_dont) - expected_utility(i, prior));
    };

    const AcceptanceRegion region = acceptance_region(effects_of(prior, {Recommendation::Buy, p_buy}));
    switch (region.kind) {
        case AcceptanceRegion::Kind::All:
            return g.integrate(gain_accept, kTypeMin, kTypeMax, opts);
        case AcceptanceRegion::Kind::UpperSet:
            return g.integrate(gain_reject, kTypeMin, region.i_tilde, opts) +
                   g.integrate(gain_accept, region.i_tilde, kTypeMax, opts);
        case AcceptanceRegion::Kind::LowerSet:
            return g.integrate(gain_accept, kTypeMin, region.i_tilde, opts) +
                   g.integrate(gain_reject, region.i_tilde, kTypeMax, opts);
    }
    return 0.0;
}

ValueReport system_value_checked(const RecommendationSystem& sys) {
    ValueReport r = system_value(sys);
    const double integral = value_by_integration(sys);
    if (!(std::abs(integral - r.value) <= kIntegralAgreementTol)) {
        throw std::logic_error("value closed form and integral disagree: " +
                               format_number(r.value) + " vs " + format_number(integral));
    }
    return r;
}

Record to_record(const ValueReport& report) {
    Record rec;
    rec.add("value", report.value)
        .add("pi_buy", report.pi_buy)
        .add("delta_O_B", report.buy.objective)
        .add("delta_S_B", report.buy.subjective)
        .add("delta_O_D", report.dont_buy.objective)
        .add("delta_S_D", report.dont_buy.subjective)
        .add("region", to_string(report.region.kind));
    if (report.i_tilde) {
        rec.add("i_tilde", *report.i_tilde);
    } else {
        rec.add("i_tilde", nullptr);
    }
    rec.add("case", to_string(report.case_label))
        .add("accepting_term", report.accepting_term)
        .add("rejecting_term", report.rejecting_term);
    return rec;
}

double symmetric_value(const SymmetricParams& p) {
    const double s = p.sigma;
    return (1.0 - 2.0 * p.Q) * (s + p.Q * (p.beta - s + s * s * (1.0 - p.beta))) /
           ((s + 1.0) * (s + 1.0));
}

QualityParams reparameterize(const QualityDistribution& q) {
    return {q.controversial_prevalence(), q.good_odds(), q.controversial_odds()};
}

QualityDistribution quality_from_params(double Q, double sigma, double lambda) {
    if (!(Q >= 0.0 && Q < 0.5)) throw DomainError("Q must lie in [0, 1/2)");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("lambda must be positive");
    const double uncontroversial = 1.0 - 2.0 * Q;
    return {uncontroversial * sigma / (1.0 + sigma), 2.0 * Q * lambda / (lambda + 1.0),
            2.0 * Q / (lambda + 1.0), uncontroversial / (1.0 + sigma)};
}

}  // namespace reco
