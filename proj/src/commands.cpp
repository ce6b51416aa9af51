#include "reco/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "reco/errors.hpp"
#include "reco/parallel.hpp"

namespace reco {

namespace {

constexpr const char* kSuffix[4] = {"H", "1", "2", "L"};

void add_probs(Record& rec, const std::string& prefix, const ProbVec& p) {
    for (std::size_t k = 0; k < 4; ++k) rec.add(prefix + kSuffix[k], p[k]);
}

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

const Scenario& need(const std::optional<Scenario>& sc, const std::string& command) {
    if (!sc) throw ValidationError("--scenario", command + " needs a scenario file");
    return *sc;
}

std::optional<ThresholdPair> pair_of(const Scenario& sc, const CommandOptions& opts) {
    if (opts.r1 || opts.r2) {
        if (!opts.r1 || !opts.r2) throw ValidationError("--R1/--R2", "both thresholds are required");
        return ThresholdPair(*opts.r1, *opts.r2);
    }
    if (const auto* p = std::get_if<ThresholdPair>(&sc.threshold)) return *p;
    return std::nullopt;
}

std::optional<MultiRecCount> counts_of(const Scenario& sc, const CommandOptions& opts) {
    if (opts.b || opts.d) return MultiRecCount(opts.b.value_or(0), opts.d.value_or(0));
    if (const auto* m = std::get_if<MultiThreshold>(&sc.threshold)) return m->counts;
    return std::nullopt;
}

bool wants_infinite(const Scenario& sc, const CommandOptions& opts) {
    return opts.infinite || std::holds_alternative<InfiniteThreshold>(sc.threshold);
}

Record two_threshold_record(const Scenario& sc, const ThresholdPair& pair) {
    const auto probs = three_level_probabilities(sc.quality, sc.sender, pair);
    Record rec;
    rec.add("R1", pair.r1)
        .add("R2", pair.r2)
        .add("beta1", sc.sender.cdf(0.5 - pair.r1))
        .add("beta2", sc.sender.cdf(0.5 - pair.r2))
        .add("pi_buy", probs.buy)
        .add("pi_neutral", probs.neutral)
        .add("pi_dont_buy", probs.dont_buy)
        .add("i_M", intermediate_indifferent_type(sc.quality));
    if (sc.sender.is_symmetric()) {
        const auto partials = two_threshold_partials(sc.quality, sc.sender);
        rec.add("value", two_threshold_value(sc.quality, sc.sender, pair))
            .add("dV_dbeta1", partials.d_beta1)
            .add("dV_dbeta2", partials.d_beta2);
    } else {
        rec.add("value", nullptr).add("dV_dbeta1", nullptr).add("dV_dbeta2", nullptr);
    }
    return rec;
}

Record multi_record(const Scenario& sc, double r, const MultiRecCount& c) {
    const Posterior p = multi_posterior(sc.quality, sc.sender, r, c);
    Record rec;
    rec.add("R", r).add("b", std::int64_t{c.b}).add("d", std::int64_t{c.d});
    add_probs(rec, "p_", p.probs);
    rec.add("sequence_probability", multi_sequence_probability(sc.quality, sc.sender, r, c));
    return rec;
}

Record infinite_record(const Scenario& sc) {
    const InfinitePolicy policy = infinite_learning_policy(sc.quality);
    const double v_inf = infinite_learning_value(sc.quality, sc.receivers());
    const DesignVerdict best = optimize_threshold(sc.system_at(0.5));
    Record rec;
    rec.add("policy", to_string(policy.kind));
    if (policy.i_tilde) {
        rec.add("i_tilde_inf", *policy.i_tilde);
    } else {
        rec.add("i_tilde_inf", nullptr);
    }
    rec.add("value_infinite", v_inf)
        .add("value_single_optimum", best.value)
        .add("r_star", best.r_star)
        .add("gain", v_inf - best.value);
    const auto sigma = sc.quality.good_odds();
    const auto lambda = sc.quality.controversial_odds();
    if (sigma && lambda && *sigma > 0.0 && *lambda > 0.0) {
        rec.add("no_gain", infinite_no_gain(*lambda, *sigma));
    } else {
        rec.add("no_gain", nullptr);
    }
    return rec;
}

std::vector<Record> evaluate(const Scenario& sc, const CommandOptions& opts) {
    if (auto pair = pair_of(sc, opts)) return {two_threshold_record(sc, *pair)};
    if (wants_infinite(sc, opts)) return {infinite_record(sc)};
    if (auto counts = counts_of(sc, opts)) return {multi_record(sc, sc.single_threshold(), *counts)};
    const auto sys = sc.system_at(sc.single_threshold());
    Record rec = to_record(system_value_checked(sys));
    rec.add("value_integral", value_by_integration(sys));
    return {rec};
}

struct SweepSpec {
    double from;
    double to;
};

SweepSpec sweep_defaults(const std::string& param) {
    if (param == "R" || param == "beta") return {0.01, 0.99};
    if (param == "Q") return {0.01, 0.49};
    if (param == "sigma" || param == "a") return {0.1, 10.0};
    throw ValidationError("--param", "expected one of R, Q, sigma, beta, a");
}

RecommendationSystem sweep_system(const Scenario& sc, const std::string& param, double x) {
    if (param == "R") return sc.system_at(x);
    if (param == "beta") {
        if (!(x > 0.0 && x < 1.0)) throw DomainError("beta must lie in (0, 1)");
        return sc.system_at(0.5 - sc.sender.quantile(x));
    }
    const double r = sc.single_threshold();
    if (param == "a") {
        const auto f = TypeDistribution::power(x);
        if (sc.receiver) return RecommendationSystem(sc.quality, f, *sc.receiver, r);
        return RecommendationSystem(sc.quality, f, r);
    }
    const QualityParams qp = reparameterize(sc.quality);
    if (!qp.sigma || !qp.lambda) throw ValidationError("quality", "sigma and lambda must be defined");
    const QualityDistribution q = param == "Q" ? quality_from_params(x, *qp.sigma, *qp.lambda)
                                               : quality_from_params(qp.Q, x, *qp.lambda);
    if (sc.receiver) return RecommendationSystem(q, sc.sender, *sc.receiver, r);
    return RecommendationSystem(q, sc.sender, r);
}

std::vector<Record> sweep(const Scenario& sc, const CommandOptions& opts) {
    const SweepSpec def = sweep_defaults(opts.param);
    const auto xs = linspace(opts.from.value_or(def.from), opts.to.value_or(def.to), opts.steps);
    std::vector<Record> rows(xs.size());
    parallel_for(xs.size(), [&](std::size_t k) {
        const ValueReport v = system_value(sweep_system(sc, opts.param, xs[k]));
        Record rec;
        rec.add(opts.param, xs[k])
            .add("value", v.value)
            .add("pi_buy", v.pi_buy)
            .add("region", to_string(v.region.kind));
        rows[k] = std::move(rec);
    });
    return rows;
}

std::vector<Record> region(const std::optional<Scenario>& sc, const CommandOptions& opts) {
    const RegionFigure fig = parse_region_figure(opts.figure);
    RegionMapRequest req;
    req.Q = sc ? sc->quality.controversial_prevalence() : 0.1;
    req.x = {opts.from.value_or(0.05), opts.to.value_or(10.0), opts.steps};
    if (opts.lattice) {
        req.lattice = fig == RegionFigure::Interior ? GridRange{0.05, 10.0, *opts.lattice}
                                                     : GridRange{0.0, 1.0, *opts.lattice};
    }
    std::vector<Record> rows;
    for (const auto& p : region_map(fig, req)) rows.push_back(to_record(p));
    return rows;
}

SimulationConfig config_for(const CommandOptions& opts, SimulationMode mode) {
    SimulationConfig cfg;
    cfg.samples = opts.samples;
    cfg.seed = opts.seed;
    cfg.mode = mode;
    return cfg;
}

double binomial(int n, int k) {
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

std::vector<Record> simulate(const Scenario& sc, const CommandOptions& opts) {
    std::vector<Record> rows;
    const auto emit = [&](const std::string& name, const EstimateWithError& e, double analytic) {
        rows.push_back(to_record(name, e, analytic, opts.seed));
    };

    if (auto pair = pair_of(sc, opts)) {
        auto cfg = config_for(opts, SimulationMode::TwoThreshold);
        cfg.pair = *pair;
        const double analytic = sc.sender.is_symmetric() ? two_threshold_value(sc.quality, sc.sender, *pair) : nan();
        emit("value_two_threshold", estimate_two_threshold_value(sc.system_at(pair->r2), cfg), analytic);
        return rows;
    }
    if (wants_infinite(sc, opts)) {
        const auto cfg = config_for(opts, SimulationMode::InfiniteLearning);
        emit("value_infinite", estimate_infinite_value(sc.system_at(0.5), cfg),
             infinite_learning_value(sc.quality, sc.receivers()));
        return rows;
    }
    const double r = sc.single_threshold();
    const auto sys = sc.system_at(r);
    if (auto counts = counts_of(sc, opts)) {
        auto cfg = config_for(opts, SimulationMode::MultiRec);
        cfg.counts = *counts;
        const MultiEstimate est = estimate_multi(sys, cfg);
        const int n = counts->b + counts->d;
        emit("pattern_probability", est.pattern_probability,
             binomial(n, counts->b) * multi_sequence_probability(sc.quality, sc.sender, r, *counts));
        if (est.posterior) {
            const Posterior p = multi_posterior(sc.quality, sc.sender, r, *counts);
            for (std::size_t k = 0; k < 4; ++k) emit(std::string("p_") + kSuffix[k], (*est.posterior)[k], p.probs[k]);
        }
        return rows;
    }

    const auto cfg = config_for(opts, SimulationMode::SingleThreshold);
    const PosteriorEstimates post = estimate_posteriors(sys, cfg);
    emit("pi_buy", post.pi_buy, recommendation_probabilities(sys).buy);
    if (post.buy) {
        const Posterior p = posterior(sys, Recommendation::Buy);
        for (std::size_t k = 0; k < 4; ++k) emit(std::string("pB_") + kSuffix[k], (*post.buy)[k], p.probs[k]);
    }
    if (post.dont_buy) {
        const Posterior p = posterior(sys, Recommendation::DontBuy);
        for (std::size_t k = 0; k < 4; ++k) emit(std::string("pD_") + kSuffix[k], (*post.dont_buy)[k], p.probs[k]);
    }
    emit("value", estimate_value(sys, cfg), system_value(sys).value);
    return rows;
}

std::vector<Record> decompose(const Scenario& sc) {
    const BeliefDecomposition d = belief_decomposition(sc.system_at(sc.single_threshold()));
    Record rec;
    add_probs(rec, "prior_", d.prior);
    add_probs(rec, "step1_", d.step1);
    add_probs(rec, "step2_", d.step2);
    add_probs(rec, "posterior_", d.posterior);
    rec.add("k", d.k);
    return {rec};
}

std::vector<Record> multi(const Scenario& sc, const CommandOptions& opts) {
    if (wants_infinite(sc, opts)) return {infinite_record(sc)};
    const auto counts = counts_of(sc, opts);
    if (!counts) throw ValidationError("--b/--d", "give recommendation counts or --infinite");
    return {multi_record(sc, sc.single_threshold(), *counts)};
}

}  // namespace

std::vector<Record> run_command(const std::string& command, const std::optional<Scenario>& scenario,
                                const CommandOptions& opts) {
    if (opts.steps < 1) throw ValidationError("--steps", "must be at least 1");
    if (command == "region-map") return region(scenario, opts);
    const Scenario& sc = need(scenario, command);
    if (command == "evaluate") return evaluate(sc, opts);
    if (command == "sweep") return sweep(sc, opts);
    if (command == "optimize") return {to_record(optimize_threshold(sc.system_at(sc.single_threshold())))};
    if (command == "simulate") return simulate(sc, opts);
    if (command == "decompose") return decompose(sc);
    if (command == "multi") return multi(sc, opts);
    throw ValidationError("command", "unknown command '" + command + "'");
}

}  // namespace reco
