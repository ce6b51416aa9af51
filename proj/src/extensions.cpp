#include "reco/extensions.hpp"

#include <algorithm>
#include <cmath>

#include "reco/errors.hpp"

namespace reco {

namespace {

void require_symmetric(const TypeDistribution& f) {
    if (!f.is_symmetric()) {
        throw UnsupportedConfiguration("sender distribution must be symmetric, got " + f.describe());
    }
}

Posterior normalized(Recommendation r, const ProbVec& w, const char* what) {
    const double total = w[0] + w[1] + w[2] + w[3];
    if (!(total > 0.0)) throw UnreachableRecommendation(what);
    Posterior p{r, {}};
    for (std::size_t k = 0; k < 4; ++k) p.probs[k] = w[k] / total;
    return p;
}

}  // namespace

ValueReport distinct_value(const QualityDistribution& q, const TypeDistribution& sender,
                           const TypeDistribution& receiver, double r) {
    require_symmetric(sender);
    return system_value(RecommendationSystem(q, sender, receiver, r));
}

double distinct_ratio(const QualityDistribution& q, double receiver_mean) {
    const double Q = q.controversial_prevalence();
    if (!(Q > 0.0)) throw DomainError("distinct-population test needs Q > 0");
    const double diff = q.pref1() - q.pref2();
    // dV/dbeta = q_L (Q + diff E) - q_H (Q - diff E).
    const double num = Q + diff * receiver_mean;
    const double den = Q - diff * receiver_mean;
    if (!(den > 0.0)) {
        throw UnsupportedConfiguration("monotonicity undetermined: ratio denominator " +
                                       format_number(den) + " is not positive");
    }
    return num / den;
}

VerdictKind distinct_monotonicity(const QualityDistribution& q, double receiver_mean) {
    const double ratio = distinct_ratio(q, receiver_mean);
    const auto sigma = q.good_odds();
    if (!sigma) return VerdictKind::IncreasingInR;
    if (std::abs(*sigma - ratio) < 1e-12) return VerdictKind::ConstantInR;
    return *sigma < ratio ? VerdictKind::DecreasingInR : VerdictKind::IncreasingInR;
}

ThresholdPair::ThresholdPair(double r1_, double r2_) : r1(r1_), r2(r2_) {
    validate_threshold(r1);
    validate_threshold(r2);
    if (r2 < r1) throw DomainError("threshold pair needs R1 <= R2");
}

ThreeLevelProbabilities three_level_probabilities(const QualityDistribution& q,
                                                  const TypeDistribution& f,
                                                  const ThresholdPair& pair) {
    const PhiPair hi = phi_pair(f, pair.r2);
    const PhiPair lo = phi_pair(f, pair.r1);
    ThreeLevelProbabilities out{};
    out.gamma1 = f.cdf(pair.r2 - 0.5) - f.cdf(pair.r1 - 0.5);
    out.gamma2 = f.cdf(0.5 - pair.r1) - f.cdf(0.5 - pair.r2);
    out.buy = q.high() + q.pref1() * hi.phi1 + q.pref2() * hi.phi2;
    out.neutral = q.pref1() * out.gamma1 + q.pref2() * out.gamma2;
    out.dont_buy = q.pref1() * (1.0 - lo.phi1) + q.pref2() * (1.0 - lo.phi2) + q.low();
    return out;
}

Posterior three_level_posterior(const QualityDistribution& q, const TypeDistribution& f,
                                const ThresholdPair& pair, Recommendation r) {
    switch (r) {
        case Recommendation::Buy: {
            const PhiPair hi = phi_pair(f, pair.r2);
            return normalized(r, {q.high(), q.pref1() * hi.phi1, q.pref2() * hi.phi2, 0.0},
                              "buy recommendation has probability zero");
        }
        case Recommendation::Neutral: {
            const auto p = three_level_probabilities(q, f, pair);
            return normalized(r, {0.0, q.pref1() * p.gamma1, q.pref2() * p.gamma2, 0.0},
                              "neutral recommendation has probability zero");
        }
        case Recommendation::DontBuy: {
            const PhiPair lo = phi_pair(f, pair.r1);
            return normalized(
                r, {0.0, q.pref1() * (1.0 - lo.phi1), q.pref2() * (1.0 - lo.phi2), q.low()},
                "don't-buy recommendation has probability zero");
        }
        case Recommendation::None: break;
    }
    throw DomainError("three-level posterior needs Buy, Neutral or DontBuy");
}

double intermediate_indifferent_type(const QualityDistribution& q) {
    const double q1 = q.pref1(), q2 = q.pref2();
    const double uncontroversial = q.high() + q.low();
    if (q1 == q2 || uncontroversial == 0.0) return q.low() >= q.high() ? -0.5 : 0.5;
    return 0.5 * (q.high() - q.low()) * (q1 + q2) / ((q1 - q2) * uncontroversial);
}

double neutral_gain_integral(const QualityDistribution& q, const TypeDistribution& f) {
    const double Q = q.controversial_prevalence();
    if (!(Q > 0.0)) return 0.0;
    const double intercept = 0.5 * (q.low() - q.high());
    const double slope = (1.0 - 2.0 * Q) * (q.pref1() - q.pref2()) / (2.0 * Q);
    const double cut = std::clamp(intermediate_indifferent_type(q), kTypeMin, kTypeMax);
    const double lo = q.pref1() >= q.pref2() ? cut : kTypeMin;
    const double hi = q.pref1() >= q.pref2() ? kTypeMax : cut;
    return intercept * f.mass(lo, hi) + slope * f.partial_moment(lo, hi);
}

double two_threshold_value(const QualityDistribution& q, const TypeDistribution& f, double beta1,
                           double beta2) {
    require_symmetric(f);
    if (!(beta2 >= 0.0 && beta1 <= 1.0 && beta2 <= beta1)) {
        throw DomainError("two-threshold value needs 0 <= beta2 <= beta1 <= 1");
    }
    const double qh = q.high();
    const double Q = q.controversial_prevalence();
    const double buy_gain = qh + Q * beta2 - (qh + 2.0 * Q * beta2) * (qh + Q);
    return buy_gain + 2.0 * Q * (beta1 - beta2) * neutral_gain_integral(q, f);
}

double two_threshold_value(const QualityDistribution& q, const TypeDistribution& f,
                           const ThresholdPair& pair) {
    return two_threshold_value(q, f, f.cdf(0.5 - pair.r1), f.cdf(0.5 - pair.r2));
}

TwoThresholdPartials two_threshold_partials(const QualityDistribution& q,
                                            const TypeDistribution& f) {
    require_symmetric(f);
    const double Q = q.controversial_prevalence();
    const double neutral = 2.0 * Q * neutral_gain_integral(q, f);
    return {Q * (q.low() - q.high()) - neutral, neutral};
}

MultiRecCount::MultiRecCount(int b_, int d_) : b(b_), d(d_) {
    if (b < 0 || d < 0 || b + d < 1) throw DomainError("counts need b, d >= 0 and b + d >= 1");
}

namespace {

ProbVec multi_weights(const QualityDistribution& q, const TypeDistribution& f, double r,
                      const MultiRecCount& c) {
    validate_threshold(r);
    const PhiPair phi = phi_pair(f, r);
    const auto lik = [&](double p) { return std::pow(p, c.b) * std::pow(1.0 - p, c.d); };
    return {c.d == 0 ? q.high() : 0.0, q.pref1() * lik(phi.phi1), q.pref2() * lik(phi.phi2),
            c.b == 0 ? q.low() : 0.0};
}

}  // namespace

Posterior multi_posterior(const QualityDistribution& q, const TypeDistribution& f, double r,
                          const MultiRecCount& counts) {
    const Recommendation label = counts.d == 0   ? Recommendation::Buy
                                 : counts.b == 0 ? Recommendation::DontBuy
                                                 : Recommendation::None;
    return normalized(label, multi_weights(q, f, r, counts),
                      "recommendation pattern has probability zero");
}

double multi_sequence_probability(const QualityDistribution& q, const TypeDistribution& f,
                                  double r, const MultiRecCount& counts) {
    const ProbVec w = multi_weights(q, f, r, counts);
    return w[0] + w[1] + w[2] + w[3];
}

bool InfinitePolicy::buys_controversial(double i) const {
    switch (kind) {
        case Kind::AllBuy: return true;
        case Kind::NoneBuy: return false;
        case Kind::UpperBuys: return i >= *i_tilde;
        case Kind::LowerBuys: return i <= *i_tilde;
    }
    return false;
}

std::string to_string(InfinitePolicy::Kind k) {
    switch (k) {
        case InfinitePolicy::Kind::UpperBuys: return "UpperBuys";
        case InfinitePolicy::Kind::LowerBuys: return "LowerBuys";
        case InfinitePolicy::Kind::AllBuy: return "AllBuy";
        case InfinitePolicy::Kind::NoneBuy: return "NoneBuy";
    }
    return "?";
}

InfinitePolicy infinite_learning_policy(const QualityDistribution& q) {
    const double q1 = q.pref1(), q2 = q.pref2();
    const double c = q1 + q2;
    if (q1 == q2 || c >= 1.0) {
        return {q.low() >= q.high() ? InfinitePolicy::Kind::AllBuy : InfinitePolicy::Kind::NoneBuy,
                std::nullopt};
    }
    const double cut = c * (2.0 * q.high() + c - 1.0) / (2.0 * (q1 - q2) * (1.0 - c));
    return {q1 > q2 ? InfinitePolicy::Kind::UpperBuys : InfinitePolicy::Kind::LowerBuys, cut};
}

double infinite_learning_value(const QualityDistribution& q, const TypeDistribution& f,
                               QuadratureOptions opts) {
    const double qh = q.high();
    const double c = q.pref1() + q.pref2();
    const double prior_utility = qh + 0.5 * c + (q.pref1() - q.pref2()) * f.mean();
    double value = qh * (1.0 - prior_utility);
    if (c <= 0.0) return value;

    const InfinitePolicy policy = infinite_learning_policy(q);
    double lo = kTypeMin, hi = kTypeMax;
    switch (policy.kind) {
        case InfinitePolicy::Kind::NoneBuy: return value;
        case InfinitePolicy::Kind::AllBuy: break;
        case InfinitePolicy::Kind::UpperBuys: lo = std::clamp(*policy.i_tilde, kTypeMin, kTypeMax); break;
        case InfinitePolicy::Kind::LowerBuys: hi = std::clamp(*policy.i_tilde, kTypeMin, kTypeMax); break;
    }
    const ProbVec& prior = q.probs();
    const double tilt = (q.pref1() - q.pref2()) / c;
    const auto gain = [&](double i) { return 0.5 + i * tilt - expected_utility(i, prior); };
    if (hi > lo) value += c * f.integrate(gain, lo, hi, opts);
    return value;
}

double infinite_learning_value_balanced(const QualityDistribution& q) {
    if (q.pref1() != q.pref2()) throw ClosedFormInapplicable("closed form needs q1 = q2");
    const double qh = q.high();
    const double Q = q.controversial_prevalence();
    return qh * (1.0 - qh - Q) + 2.0 * Q * std::max(0.5 - qh - Q, 0.0);
}

bool infinite_no_gain(double lambda, double sigma) {
    if (!(lambda > 0.0) || !(sigma > 0.0)) throw DomainError("lambda and sigma must be positive");
    if (lambda == 1.0) return true;
    const double lo = std::min(lambda, 1.0 / lambda);
    const double hi = std::max(lambda, 1.0 / lambda);
    return sigma < lo || sigma > hi;
}

}  // namespace reco
