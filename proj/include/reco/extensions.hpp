#pragma once

#include <optional>
#include <string>

#include "reco/design.hpp"

namespace reco {

// ---- distinct sender and receiver populations ----

// Value when senders follow the symmetric F and receivers are drawn from G. Throws
// UnsupportedConfiguration when F is not symmetric.
ValueReport distinct_value(const QualityDistribution& q, const TypeDistribution& sender,
                           const TypeDistribution& receiver, double r);

// Compares sigma with (Q + (q1 - q2) E_G[i]) / (Q - (q1 - q2) E_G[i]); equality within 1e-12
// is ConstantInR. Throws UnsupportedConfiguration when the denominator is not positive and
// DomainError when Q = 0.
VerdictKind distinct_monotonicity(const QualityDistribution& q, double receiver_mean);
double distinct_ratio(const QualityDistribution& q, double receiver_mean);

// ---- three-level recommendations ----

struct ThresholdPair {
    double r1;  // below: don't-buy
    double r2;  // at or above: buy; in between: neutral

    ThresholdPair(double r1, double r2);
};

struct ThreeLevelProbabilities {
    double buy;
    double neutral;
    double dont_buy;
    double gamma1;  // F(R2 - 1/2) - F(R1 - 1/2)
    double gamma2;  // F(1/2 - R1) - F(1/2 - R2)
};

ThreeLevelProbabilities three_level_probabilities(const QualityDistribution& q,
                                                  const TypeDistribution& f,
                                                  const ThresholdPair& pair);

// Posterior after Buy, Neutral or DontBuy; throws UnreachableRecommendation for events with
// probability zero.
Posterior three_level_posterior(const QualityDistribution& q, const TypeDistribution& f,
                                const ThresholdPair& pair, Recommendation r);

// Type indifferent between buying and not after a neutral recommendation. Values outside
// [-1/2, 1/2] mean everyone or no one buys. With q1 = q2: -1/2 if q_L >= q_H, else +1/2.
double intermediate_indifferent_type(const QualityDistribution& q);

// Integral over the neutral buyers of (q_L - q_H)/2 + i (1 - 2Q)(q1 - q2)/(2Q). Neutral
// buyers are i >= i_M when q1 >= q2 and i <= i_M otherwise.
double neutral_gain_integral(const QualityDistribution& q, const TypeDistribution& f);

// Value of a two-threshold system with symmetric F as a function of beta1 >= beta2.
double two_threshold_value(const QualityDistribution& q, const TypeDistribution& f, double beta1,
                           double beta2);
double two_threshold_value(const QualityDistribution& q, const TypeDistribution& f,
                           const ThresholdPair& pair);

struct TwoThresholdPartials {
    double d_beta2;
    double d_beta1;
};

TwoThresholdPartials two_threshold_partials(const QualityDistribution& q,
                                            const TypeDistribution& f);

// ---- multiple recommendations ----

struct MultiRecCount {
    int b;
    int d;

    MultiRecCount(int b, int d);
};

// Posterior after b buy and d don't-buy recommendations from independent senders.
Posterior multi_posterior(const QualityDistribution& q, const TypeDistribution& f, double r,
                          const MultiRecCount& counts);

// Probability of observing the count pattern in a given order.
double multi_sequence_probability(const QualityDistribution& q, const TypeDistribution& f,
                                  double r, const MultiRecCount& counts);

struct InfinitePolicy {
    enum class Kind { UpperBuys, LowerBuys, AllBuy, NoneBuy };

    // Policy for controversial products; good products are always bought, bad ones never.
    Kind kind;
    std::optional<double> i_tilde;  // raw cutoff, may lie outside [-1/2, 1/2]

    bool buys_controversial(double i) const;
};

std::string to_string(InfinitePolicy::Kind k);

InfinitePolicy infinite_learning_policy(const QualityDistribution& q);

// Payoff gain of a receiver who learns whether the product is good, bad or controversial.
double infinite_learning_value(const QualityDistribution& q, const TypeDistribution& f,
                               QuadratureOptions opts = {});

// Closed form for q1 = q2: q_H (1 - q_H - Q) + 2Q max(1/2 - q_H - Q, 0).
double infinite_learning_value_balanced(const QualityDistribution& q);

// True when infinite learning cannot beat the best single threshold. Boundary sigma values
// count as gain possible.
bool infinite_no_gain(double lambda, double sigma);

}  // namespace reco
