#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "reco/extensions.hpp"

namespace reco {

// Samples per random stream. Each block seeds its own generator from (seed, block index),
// so estimates do not depend on the number of worker threads.
inline constexpr std::uint64_t kBlockSize = 16384;
inline constexpr std::uint64_t kMinSamples = 1000;

enum class SimulationMode { SingleThreshold, TwoThreshold, MultiRec, InfiniteLearning };

std::string to_string(SimulationMode m);

struct SimulationConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    SimulationMode mode = SimulationMode::SingleThreshold;
    std::optional<ThresholdPair> pair;     // TwoThreshold
    std::optional<MultiRecCount> counts;   // MultiRec

    // Throws DomainError when samples < kMinSamples or the mode's parameters are missing.
    void validate() const;
};

enum class Execution { Parallel, Serial };

struct EstimateWithError {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;

    // |estimate - target| <= k * std_error.
    bool agrees_with(double target, double k = 3.0) const;
};

Record to_record(const std::string& quantity, const EstimateWithError& e, double analytic,
                 std::uint64_t seed);

double inverse_cdf_sample(const TypeDistribution& f, double u);

EstimateWithError estimate_pi_buy(const RecommendationSystem& sys, const SimulationConfig& cfg,
                                  Execution exec = Execution::Parallel);

// Empirical frequency of each version among Buy and among DontBuy recommendations. Missing
// when the recommendation never occurred.
struct PosteriorEstimates {
    EstimateWithError pi_buy;
    std::optional<std::array<EstimateWithError, 4>> buy;
    std::optional<std::array<EstimateWithError, 4>> dont_buy;
};

PosteriorEstimates estimate_posteriors(const RecommendationSystem& sys, const SimulationConfig& cfg,
                                       Execution exec = Execution::Parallel);

// Mean realized payoff gain of a receiver drawn from the receiver population who acts on a
// random sender's recommendation, against buying an independent prior-distributed alternative.
EstimateWithError estimate_value(const RecommendationSystem& sys, const SimulationConfig& cfg,
                                 Execution exec = Execution::Parallel);

// Same estimator with buy / neutral / don't-buy recommendations at cfg.pair; receivers buy
// whenever the posterior expected payoff beats the prior one.
EstimateWithError estimate_two_threshold_value(const RecommendationSystem& sys,
                                               const SimulationConfig& cfg,
                                               Execution exec = Execution::Parallel);

// b + d independent senders per product; frequency of exactly cfg.counts->b buys, and the
// version frequencies conditional on that pattern.
struct MultiEstimate {
    EstimateWithError pattern_probability;
    std::optional<std::array<EstimateWithError, 4>> posterior;
};

MultiEstimate estimate_multi(const RecommendationSystem& sys, const SimulationConfig& cfg,
                             Execution exec = Execution::Parallel);

// Receivers observe whether the product is good, bad or controversial and follow the
// infinite-learning policy.
EstimateWithError estimate_infinite_value(const RecommendationSystem& sys,
                                          const SimulationConfig& cfg,
                                          Execution exec = Execution::Parallel);

}  // namespace reco
