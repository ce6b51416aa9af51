#include "reco/mc_oracle.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "reco/errors.hpp"
#include "reco/parallel.hpp"

namespace reco {

std::string to_string(SimulationMode m) {
    switch (m) {
        case SimulationMode::SingleThreshold: return "SingleThreshold";
        case SimulationMode::TwoThreshold: return "TwoThreshold";
        case SimulationMode::MultiRec: return "MultiRec";
        case SimulationMode::InfiniteLearning: return "InfiniteLearning";
    }
    return "?";
}

void SimulationConfig::validate() const {
    if (samples < kMinSamples) throw DomainError("at least 1000 samples are required");
    if (mode == SimulationMode::TwoThreshold && !pair) throw DomainError("two-threshold mode needs R1, R2");
    if (mode == SimulationMode::MultiRec && !counts) throw DomainError("multi mode needs counts b, d");
}

bool EstimateWithError::agrees_with(double target, double k) const {
    return std::abs(estimate - target) <= k * std_error;
}

Record to_record(const std::string& quantity, const EstimateWithError& e, double analytic,
                 std::uint64_t seed) {
    Record rec;
    rec.add("quantity", quantity)
        .add("estimate", e.estimate)
        .add("stderr", e.std_error)
        .add("n", static_cast<std::int64_t>(e.n))
        .add("seed", static_cast<std::int64_t>(seed))
        .add("analytic", analytic)
        .add("z", e.std_error > 0.0 ? (e.estimate - analytic) / e.std_error : 0.0);
    return rec;
}

double inverse_cdf_sample(const TypeDistribution& f, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw DomainError("u must lie in [0, 1]");
    return f.quantile(u);
}

namespace {

class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t block)
        : engine_(make_seq(seed, block)) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    Version version(const ProbVec& q) {
        const double u = uniform();
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            acc += q[k];
            if (q[k] > 0.0 && u < acc) return static_cast<Version>(k);
        }
        return last_positive(q);
    }

private:
    static std::mt19937_64 make_seq(std::uint64_t seed, std::uint64_t block) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
        return std::mt19937_64(seq);
    }

    static Version last_positive(const ProbVec& q) {
        for (int k = 3; k >= 0; --k) {
            if (q[static_cast<std::size_t>(k)] > 0.0) return static_cast<Version>(k);
        }
        return Version::Good;
    }

    std::mt19937_64 engine_;
};

struct MeanAcc {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t n = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    void merge(const MeanAcc& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        n += o.n;
    }
    EstimateWithError finish() const {
        EstimateWithError e;
        e.n = n;
        if (n == 0) return e;
        const double nd = static_cast<double>(n);
        e.estimate = sum / nd;
        if (n > 1) {
            const double var = std::max(0.0, (sum_sq - nd * e.estimate * e.estimate) / (nd - 1.0));
            e.std_error = std::sqrt(var / nd);
        }
        return e;
    }
};

struct CountAcc {
    std::array<std::uint64_t, 4> versions{};
    std::uint64_t hits = 0;
    void merge(const CountAcc& o) {
        for (std::size_t k = 0; k < 4; ++k) versions[k] += o.versions[k];
        hits += o.hits;
    }
};

std::array<EstimateWithError, 4> proportions(const CountAcc& c) {
    std::array<EstimateWithError, 4> out{};
    const double n = static_cast<double>(c.hits);
    for (std::size_t k = 0; k < 4; ++k) {
        const double p = static_cast<double>(c.versions[k]) / n;
        out[k] = {p, std::sqrt(p * (1.0 - p) / n), c.hits};
    }
    return out;
}

// Runs kernel(stream, count, acc) per block and merges the accumulators in block order.
template <class Acc, class Kernel>
Acc run_blocks(const SimulationConfig& cfg, Execution exec, Kernel&& kernel) {
    cfg.validate();
    const std::uint64_t blocks = (cfg.samples + kBlockSize - 1) / kBlockSize;
    std::vector<Acc> partial(blocks);
    const auto body = [&](std::size_t b) {
        const std::uint64_t start = b * kBlockSize;
        const std::uint64_t count = std::min(kBlockSize, cfg.samples - start);
        Stream stream(cfg.seed, b);
        kernel(stream, count, partial[b]);
    };
    if (exec == Execution::Parallel) {
        parallel_for(blocks, body);
    } else {
        for (std::size_t b = 0; b < blocks; ++b) body(b);
    }
    Acc total{};
    for (const auto& p : partial) total.merge(p);
    return total;
}

struct PosteriorAcc {
    CountAcc buy;
    CountAcc dont_buy;
    void merge(const PosteriorAcc& o) {
        buy.merge(o.buy);
        dont_buy.merge(o.dont_buy);
    }
};

}  // namespace

PosteriorEstimates estimate_posteriors(const RecommendationSystem& sys, const SimulationConfig& cfg,
                                       Execution exec) {
    const ProbVec& q = sys.quality.probs();
    const auto acc = run_blocks<PosteriorAcc>(cfg, exec, [&](Stream& s, std::uint64_t n, PosteriorAcc& a) {
        for (std::uint64_t k = 0; k < n; ++k) {
            const Version v = s.version(q);
            const double sender = sys.sender.quantile(s.uniform());
            CountAcc& c = sender_recommendation(v, sender, sys.threshold) == Recommendation::Buy ? a.buy : a.dont_buy;
            ++c.versions[static_cast<std::size_t>(v)];
            ++c.hits;
        }
    });
    PosteriorEstimates out;
    const std::uint64_t total = acc.buy.hits + acc.dont_buy.hits;
    const double p = static_cast<double>(acc.buy.hits) / static_cast<double>(total);
    out.pi_buy = {p, std::sqrt(p * (1.0 - p) / static_cast<double>(total)), total};
    if (acc.buy.hits > 0) out.buy = proportions(acc.buy);
    if (acc.dont_buy.hits > 0) out.dont_buy = proportions(acc.dont_buy);
    return out;
}

EstimateWithError estimate_pi_buy(const RecommendationSystem& sys, const SimulationConfig& cfg,
                                  Execution exec) {
    const ProbVec& q = sys.quality.probs();
    return run_blocks<MeanAcc>(cfg, exec, [&](Stream& s, std::uint64_t n, MeanAcc& a) {
               for (std::uint64_t k = 0; k < n; ++k) {
                   const Version v = s.version(q);
                   const double sender = sys.sender.quantile(s.uniform());
                   a.add(sender_recommendation(v, sender, sys.threshold) == Recommendation::Buy ? 1.0 : 0.0);
               }
           })
        .finish();
}

EstimateWithError estimate_value(const RecommendationSystem& sys, const SimulationConfig& cfg,
                                 Execution exec) {
    const ProbVec& q = sys.quality.probs();
    const EffectPair buy = effects(sys, Recommendation::Buy);
    return run_blocks<MeanAcc>(cfg, exec, [&](Stream& s, std::uint64_t n, MeanAcc& a) {
               for (std::uint64_t k = 0; k < n; ++k) {
                   const Version v = s.version(q);
                   const Version alt = s.version(q);
                   const double sender = sys.sender.quantile(s.uniform());
                   const double i = sys.receiver.quantile(s.uniform());
                   const bool accept = accepts(buy, i);
                   const bool bought = sender_recommendation(v, sender, sys.threshold) == Recommendation::Buy
                                           ? accept
                                           : !accept;
                   a.add(bought ? payoff(v, i) - payoff(alt, i) : 0.0);
               }
           })
        .finish();
}

EstimateWithError estimate_two_threshold_value(const RecommendationSystem& sys,
                                               const SimulationConfig& cfg, Execution exec) {
    cfg.validate();
    if (!cfg.pair) throw DomainError("two-threshold estimate needs R1, R2");
    const ThresholdPair pair = *cfg.pair;
    const ProbVec& q = sys.quality.probs();
    const auto post = [&](Recommendation r) -> std::optional<ProbVec> {
        try {
            return three_level_posterior(sys.quality, sys.sender, pair, r).probs;
        } catch (const UnreachableRecommendation&) {
            return std::nullopt;
        }
    };
    const auto p_buy = post(Recommendation::Buy);
    const auto p_neutral = post(Recommendation::Neutral);
    const auto p_dont = post(Recommendation::DontBuy);

    return run_blocks<MeanAcc>(cfg, exec, [&](Stream& s, std::uint64_t n, MeanAcc& a) {
               for (std::uint64_t k = 0; k < n; ++k) {
                   const Version v = s.version(q);
                   const Version alt = s.version(q);
                   const double sender = sys.sender.quantile(s.uniform());
                   const double i = sys.receiver.quantile(s.uniform());
                   const double pv = payoff(v, sender);
                   const auto& belief = pv >= pair.r2 ? p_buy : pv >= pair.r1 ? p_neutral : p_dont;
                   const bool bought = belief && expected_utility(i, *belief) >= expected_utility(i, q);
                   a.add(bought ? payoff(v, i) - payoff(alt, i) : 0.0);
               }
           })
        .finish();
}

namespace {

struct MultiAcc {
    CountAcc matched;
    std::uint64_t total = 0;
    void merge(const MultiAcc& o) {
        matched.merge(o.matched);
        total += o.total;
    }
};

}  // namespace

MultiEstimate estimate_multi(const RecommendationSystem& sys, const SimulationConfig& cfg,
                             Execution exec) {
    cfg.validate();
    if (!cfg.counts) throw DomainError("multi estimate needs counts b, d");
    const int b = cfg.counts->b;
    const int senders = cfg.counts->b + cfg.counts->d;
    const ProbVec& q = sys.quality.probs();
    const auto acc = run_blocks<MultiAcc>(cfg, exec, [&](Stream& s, std::uint64_t n, MultiAcc& a) {
        for (std::uint64_t k = 0; k < n; ++k) {
            const Version v = s.version(q);
            int buys = 0;
            for (int j = 0; j < senders; ++j) {
                const double sender = sys.sender.quantile(s.uniform());
                if (sender_recommendation(v, sender, sys.threshold) == Recommendation::Buy) ++buys;
            }
            ++a.total;
            if (buys == b) {
                ++a.matched.versions[static_cast<std::size_t>(v)];
                ++a.matched.hits;
            }
        }
    });
    MultiEstimate out;
    const double n = static_cast<double>(acc.total);
    const double p = static_cast<double>(acc.matched.hits) / n;
    out.pattern_probability = {p, std::sqrt(p * (1.0 - p) / n), acc.total};
    if (acc.matched.hits > 0) out.posterior = proportions(acc.matched);
    return out;
}

EstimateWithError estimate_infinite_value(const RecommendationSystem& sys,
                                          const SimulationConfig& cfg, Execution exec) {
    const ProbVec& q = sys.quality.probs();
    const InfinitePolicy policy = infinite_learning_policy(sys.quality);
    return run_blocks<MeanAcc>(cfg, exec, [&](Stream& s, std::uint64_t n, MeanAcc& a) {
               for (std::uint64_t k = 0; k < n; ++k) {
                   const Version v = s.version(q);
                   const Version alt = s.version(q);
                   const double i = sys.receiver.quantile(s.uniform());
                   bool bought = false;
                   switch (v) {
                       case Version::Good: bought = true; break;
                       case Version::Bad: bought = false; break;
                       default: bought = policy.buys_controversial(i); break;
                   }
                   a.add(bought ? payoff(v, i) - payoff(alt, i) : 0.0);
               }
           })
        .finish();
}

}  // namespace reco
