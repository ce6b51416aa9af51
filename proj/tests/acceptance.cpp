// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "reco/errors.hpp"
#include "reco/mc_oracle.hpp"
#include "support.hpp"

using namespace reco;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (++failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
    Outcome done() const {
        if (failures_ == 0) return {true, info_};
        return {false, info_ + (info_.empty() ? "" : " | ") + std::to_string(failures_) + " failures: " + notes_};
    }

private:
    int failures_ = 0;
    std::string notes_;
    std::string info_;
};

std::string fmt(double x) { return format_number(x); }

Outcome total_probability() {
    Check c;
    prop::Gen g(1001);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const RecommendationSystem sys(g.quality(), g.any_type(), g.threshold());
        const auto pr = recommendation_probabilities(sys);
        ProbVec total{};
        if (pr.buy > 0) {
            const auto p = posterior(sys, Recommendation::Buy);
            for (std::size_t k = 0; k < 4; ++k) total[k] += pr.buy * p.probs[k];
        }
        if (pr.dont_buy > 0) {
            const auto p = posterior(sys, Recommendation::DontBuy);
            for (std::size_t k = 0; k < 4; ++k) total[k] += pr.dont_buy * p.probs[k];
        }
        for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(sys.quality.probs()[k] - total[k]));
    }
    c.require(worst < 1e-12, "max error " + fmt(worst));
    c.note("max error " + fmt(worst));
    return c.done();
}

Outcome acceptance_equivalence() {
    Check c;
    prop::Gen g(1002);
    int decisions = 0;
    for (int n = 0; n < 200; ++n) {
        const RecommendationSystem sys(g.quality(0.001), g.any_type(), g.threshold());
        const ProbVec& q = sys.quality.probs();
        const ProbVec pb = posterior(sys, Recommendation::Buy).probs;
        const ProbVec pd = posterior(sys, Recommendation::DontBuy).probs;
        for (int k = 0; k <= 200; ++k) {
            const double i = -0.5 + k / 200.0;
            const bool buy_ok = expected_utility(i, pb) >= expected_utility(i, q);
            const bool dont_ok = expected_utility(i, q) >= expected_utility(i, pd);
            c.require(buy_ok == dont_ok && buy_ok == accepts(sys, i), "disagreement at i=" + fmt(i));
            ++decisions;
        }
    }
    c.note(std::to_string(decisions) + " decisions");
    return c.done();
}

Outcome extreme_thresholds() {
    Check c;
    prop::Gen g(1003);
    for (int n = 0; n < 100; ++n) {
        const RecommendationSystem sys(g.quality(), g.any_type(), 0.5);
        for (double r : {1e-6, 1.0 - 1e-6}) {
            c.require(acceptance_region(sys.with_threshold(r)).kind == AcceptanceRegion::Kind::All,
                      sys.sender.describe() + " R=" + fmt(r));
        }
    }
    return c.done();
}

Outcome symmetric_value_forms() {
    Check c;
    prop::Gen g(1004);
    double worst_collapse = 0.0, worst_closed = 0.0;
    for (int n = 0; n < 200; ++n) {
        const auto q = g.quality(0.001);
        const auto f = g.symmetric_type();
        const double r = g.threshold();
        const RecommendationSystem sys(q, f, r);
        const auto rep = system_value(sys);
        c.require(rep.case_label == ValueCase::AllAccept, "not all-accept for " + f.describe());
        worst_collapse = std::max(worst_collapse, std::abs(rep.value - rep.pi_buy * rep.buy.objective));
        const auto params = reparameterize(q);
        const double beta = f.cdf(0.5 - r);
        const double closed = symmetric_value({params.Q, *params.sigma, beta, params.lambda.value_or(1.0)});
        worst_closed = std::max(worst_closed, std::abs(closed - value_by_integration(sys)));
    }
    c.require(worst_collapse < 1e-10, "collapse error " + fmt(worst_collapse));
    c.require(worst_closed < 1e-10, "closed form vs integral " + fmt(worst_closed));
    const double reg = symmetric_value({0.2, 2.0, 0.5, 1.0});
    c.require(std::abs(reg - 0.14) < 1e-12, "regression point " + fmt(reg));
    c.note("collapse " + fmt(worst_collapse) + ", integral " + fmt(worst_closed) + ", V(0.2,2,0.5)=" + fmt(reg));
    return c.done();
}

Outcome symmetric_monotonicity() {
    Check c;
    prop::Gen g(1005);
    const double h = 1e-5;
    for (int n = 0; n < 50; ++n) {
        double sigma = g.uniform(0.1, 10.0);
        while (std::abs(sigma - 1.0) < 0.05) sigma = g.uniform(0.1, 10.0);
        const RecommendationSystem sys(quality_from_params(g.uniform(0.02, 0.48), sigma, g.uniform(0.2, 5.0)),
                                       g.symmetric_type(), 0.5);
        const auto kind = monotonicity_class_symmetric(sigma);
        for (int k = 1; k <= 99; ++k) {
            const double r = k / 100.0;
            const double d = system_value(sys.with_threshold(r + h)).value - system_value(sys.with_threshold(r - h)).value;
            const bool ok = kind == VerdictKind::IncreasingInR ? d > 0 : d < 0;
            c.require(ok, sys.sender.describe() + " sigma=" + fmt(sigma) + " R=" + fmt(r));
        }
    }
    double spread = 0.0;
    for (int n = 0; n < 20; ++n) {
        const RecommendationSystem sys(quality_from_params(g.uniform(0.02, 0.48), 1.0), g.symmetric_type(), 0.5);
        const auto vs = value_on_grid(sys, linspace(0.01, 0.99, 99));
        const auto [lo, hi] = std::minmax_element(vs.begin(), vs.end());
        spread = std::max(spread, *hi - *lo);
    }
    c.require(spread < 1e-9, "sigma=1 spread " + fmt(spread));
    c.note("sigma=1 spread " + fmt(spread));
    return c.done();
}

Outcome asymmetric_design() {
    Check c;
    const auto interior = optimize_threshold(power_system(2.0, 0.2, 1.0, 0.5));
    c.require(interior.kind == VerdictKind::InteriorOptimum, "verdict " + to_string(interior.kind));
    c.require(std::abs(interior.r_star - 0.5) < 1e-4, "R* " + fmt(interior.r_star));
    c.require(std::abs(interior.value - 1.0 / 6.0) < 1e-8, "V(R*) " + fmt(interior.value));
    c.require(std::abs(asymmetric_value_closed(2.0, 0.2, 1.0, interior.r_star) - interior.value) < 1e-8,
              "closed form at R*");
    const auto high = optimize_threshold(power_system(2.0, 0.01, 10.0, 0.5));
    const auto low = optimize_threshold(power_system(2.0, 0.01, 0.05, 0.5));
    c.require(high.kind == VerdictKind::IncreasingInR, "sigma=10 verdict " + to_string(high.kind));
    c.require(low.kind == VerdictKind::DecreasingInR, "sigma=0.05 verdict " + to_string(low.kind));
    c.require(interior_conditions(2.0, 0.01, 10.0).verdict == InteriorVerdict::BoundaryHigh, "sigma=10 conditions");
    c.require(interior_conditions(2.0, 0.01, 0.05).verdict == InteriorVerdict::BoundaryLow, "sigma=0.05 conditions");
    c.note("R*=" + fmt(interior.r_star) + ", V=" + fmt(interior.value) + ", " + to_string(high.kind) + ", " +
           to_string(low.kind));
    return c.done();
}

Outcome prevalence_statics() {
    Check c;
    const auto qs = linspace(0.0005, 0.4995, 1000);
    double best_q = 0.0, best_v = -1.0;
    for (double Q : qs) {
        const double v = symmetric_value({Q, 5.0, 0.1, 1.0});
        if (v > best_v) best_v = v, best_q = Q;
    }
    const auto statics = q_comparative_statics(5.0, 0.1);
    c.require(statics.kind == QStatics::Kind::InteriorQ, "statics kind");
    const double q_star = statics.q_star.value_or(-1.0);
    c.require(std::abs(q_star - 7.6 / 70.4) < 1e-12, "Q* " + fmt(q_star));
    c.require(std::abs(best_q - q_star) < 1e-3, "grid argmax " + fmt(best_q));
    for (double beta : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        double prev = symmetric_value({qs[0], 1.0, beta, 1.0});
        for (std::size_t k = 1; k < qs.size(); ++k) {
            const double v = symmetric_value({qs[k], 1.0, beta, 1.0});
            c.require(v < prev, "sigma=1 not decreasing at Q=" + fmt(qs[k]));
            prev = v;
        }
    }
    c.note("grid argmax " + fmt(best_q) + ", Q*=" + fmt(q_star));
    return c.done();
}

Outcome spread_effect() {
    Check c;
    for (double sigma : {0.5, 2.0}) {
        const auto q = quality_from_params(0.2, sigma);
        std::vector<double> vs;
        for (double beta : linspace(0.0, 0.5, 11)) {
            vs.push_back(system_value(RecommendationSystem(q, TypeDistribution::piecewise_symmetric(beta, 0.75), 0.75)).value);
        }
        for (std::size_t k = 1; k < vs.size(); ++k) {
            const bool ok = sigma < 1.0 ? vs[k] > vs[k - 1] : vs[k] < vs[k - 1];
            c.require(ok, "sigma=" + fmt(sigma) + " step " + std::to_string(k));
        }
        c.note("sigma=" + fmt(sigma) + ": " + fmt(vs.front()) + " -> " + fmt(vs.back()));
    }
    return c.done();
}

Outcome distinct_populations() {
    Check c;
    prop::Gen g(1009);
    const auto receivers = TypeDistribution::power(2.0);
    const double h = 1e-5;
    double worst = 0.0;
    int signs = 0, attempts = 0;
    while (signs < 50 && attempts < 10000) {
        ++attempts;
        const auto q = g.quality(0.01);
        const auto f = g.symmetric_type();
        const double r = g.threshold();
        const auto rep = distinct_value(q, f, receivers, r);
        const RecommendationSystem sys(q, f, receivers, r);
        const auto st = belief_state(sys);
        const double direct = receivers.integrate(
            [&](double i) { return st.pi_buy * (expected_utility(i, st.buy.probs) - value_no_rec(i, q)); }, -0.5, 0.5,
            {1e-13, 50});
        worst = std::max(worst, std::abs(rep.value - direct));
        c.require(rep.region.kind == AcceptanceRegion::Kind::All, "not all-accept");

        VerdictKind kind;
        try {
            kind = distinct_monotonicity(q, receivers.mean());
        } catch (const UnsupportedConfiguration&) {
            continue;
        }
        const double ratio = distinct_ratio(q, receivers.mean());
        if (std::abs(*q.good_odds() - ratio) < 1e-6) continue;
        const double d = distinct_value(q, f, receivers, r + h).value - distinct_value(q, f, receivers, r - h).value;
        if (std::abs(d) < 1e-13) continue;  // no sender mass at this threshold
        ++signs;
        c.require(kind == (d > 0 ? VerdictKind::IncreasingInR : VerdictKind::DecreasingInR),
                  "sign mismatch sigma=" + fmt(*q.good_odds()) + " ratio=" + fmt(ratio));
    }
    c.require(worst < 1e-9, "closed form vs integral " + fmt(worst));
    c.require(signs == 50, "only " + std::to_string(signs) + " sign checks");
    c.note("integral error " + fmt(worst) + ", " + std::to_string(signs) + " sign checks");
    return c.done();
}

Outcome two_thresholds() {
    Check c;
    const double h = 1e-5;
    const QualityDistribution s4(0.03, 0.7, 0.1, 0.17);
    prop::Gen g(1010);
    std::vector<QualityDistribution> qs{s4};
    for (int n = 0; n < 9; ++n) qs.push_back(g.quality(0.01));
    double worst = 0.0;
    const auto f = TypeDistribution::uniform();
    for (const auto& q : qs) {
        const auto p = two_threshold_partials(q, f);
        for (double b1 : linspace(0.3, 0.9, 10)) {
            for (double b2 : linspace(0.05, 0.28, 10)) {
                const double d1 = (two_threshold_value(q, f, b1 + h, b2) - two_threshold_value(q, f, b1 - h, b2)) / (2 * h);
                const double d2 = (two_threshold_value(q, f, b1, b2 + h) - two_threshold_value(q, f, b1, b2 - h)) / (2 * h);
                worst = std::max({worst, std::abs(d1 - p.d_beta1), std::abs(d2 - p.d_beta2)});
            }
        }
    }
    c.require(worst < 1e-6, "partials vs differences " + fmt(worst));
    int sign_checks = 0;
    for (int n = 0; n < 500; ++n) {
        const auto q = g.quality(0.01);
        const double sigma = *q.good_odds();
        const auto p = two_threshold_partials(q, g.symmetric_type());
        if (sigma > 1.0) {
            c.require(p.d_beta2 < 0.0, "not increasing in R2 at sigma=" + fmt(sigma));
            ++sign_checks;
        } else if (sigma < 1.0) {
            c.require(p.d_beta1 > 0.0, "not decreasing in R1 at sigma=" + fmt(sigma));
            ++sign_checks;
        }
    }
    const double im = intermediate_indifferent_type(s4);
    c.require(std::abs(im - -0.4667) < 1e-4, "i_M " + fmt(im));
    c.note("partials error " + fmt(worst) + ", " + std::to_string(sign_checks) + " sign checks, i_M=" + fmt(im));
    return c.done();
}

Outcome infinite_learning() {
    Check c;
    const auto f = TypeDistribution::uniform();
    const auto best_single = [&](const QualityDistribution& q) {
        return optimize_threshold(RecommendationSystem(q, f, 0.5)).value;
    };
    double worst = 0.0;
    for (double sigma : {0.5, 1.0, 2.0}) {
        for (double Q : {0.1, 0.3}) {
            const auto q = quality_from_params(Q, sigma);
            worst = std::max(worst, std::abs(infinite_learning_value(q, f) - best_single(q)));
            c.require(infinite_no_gain(1.0, sigma), "no_gain(1, " + fmt(sigma) + ")");
        }
    }
    c.require(worst < 1e-8, "lambda=1 gap " + fmt(worst));
    const auto eq = quality_from_params(0.2, 3.0, 2.0);
    const double eq_gap = std::abs(infinite_learning_value(eq, f) - best_single(eq));
    c.require(infinite_no_gain(2.0, 3.0) && eq_gap < 1e-8, "lambda=2 sigma=3 gap " + fmt(eq_gap));
    const auto gain_q = quality_from_params(0.2, 1.0, 2.0);
    const double gain = infinite_learning_value(gain_q, f) - best_single(gain_q);
    c.require(!infinite_no_gain(2.0, 1.0) && gain > 1e-4, "lambda=2 sigma=1 gain " + fmt(gain));
    c.note("lambda=1 gap " + fmt(worst) + ", (2,3) gap " + fmt(eq_gap) + ", (2,1) gain " + fmt(gain));
    return c.done();
}

struct McScenario {
    std::string name;
    RecommendationSystem sys;
    std::optional<ThresholdPair> pair;
};

std::vector<McScenario> regression_suite() {
    const auto u = TypeDistribution::uniform();
    return {
        {"S1", RecommendationSystem(QualityDistribution(0.4, 0.2, 0.2, 0.2), u, 0.5), std::nullopt},
        {"S2", RecommendationSystem(quality_from_params(0.2, 1.0), TypeDistribution::power(2.0), 0.5), std::nullopt},
        {"S3", RecommendationSystem(QualityDistribution(0.3, 0.3, 0.1, 0.3), u, TypeDistribution::power(2.0), 0.6),
         std::nullopt},
        {"S4", RecommendationSystem(QualityDistribution(0.03, 0.7, 0.1, 0.17), u, 0.8), ThresholdPair(0.4, 0.8)},
        {"S5", RecommendationSystem(QualityDistribution(0.02, 0.45, 0.45, 0.08), TypeDistribution::power(3.0), 0.5),
         std::nullopt},
        {"S6", RecommendationSystem(QualityDistribution(0.1, 0.1, 0.7, 0.1), TypeDistribution::power(0.3), 0.5),
         std::nullopt},
    };
}

// Every estimate of the suite, in a fixed order, with its analytic target.
std::vector<std::pair<std::string, std::pair<EstimateWithError, double>>> run_suite() {
    std::vector<std::pair<std::string, std::pair<EstimateWithError, double>>> out;
    std::uint64_t seed = 42;
    for (const auto& sc : regression_suite()) {
        SimulationConfig cfg;
        cfg.samples = 1'000'000;
        cfg.seed = seed++;
        const auto st = belief_state(sc.sys);
        const auto post = estimate_posteriors(sc.sys, cfg);
        out.push_back({sc.name + " pi_buy", {post.pi_buy, st.pi_buy}});
        const char* names[4] = {"H", "1", "2", "L"};
        for (std::size_t k = 0; k < 4; ++k) {
            if (post.buy) out.push_back({sc.name + " pB_" + names[k], {(*post.buy)[k], st.buy.probs[k]}});
            if (post.dont_buy) out.push_back({sc.name + " pD_" + names[k], {(*post.dont_buy)[k], st.dont_buy.probs[k]}});
        }
        out.push_back({sc.name + " value", {estimate_value(sc.sys, cfg), system_value(sc.sys).value}});
        out.push_back({sc.name + " value_infinite",
                       {estimate_infinite_value(sc.sys, cfg), infinite_learning_value(sc.sys.quality, sc.sys.receiver)}});
        if (sc.pair) {
            auto two = cfg;
            two.mode = SimulationMode::TwoThreshold;
            two.pair = sc.pair;
            out.push_back({sc.name + " value_two_threshold",
                           {estimate_two_threshold_value(sc.sys, two), two_threshold_value(sc.sys.quality, sc.sys.sender, *sc.pair)}});
        }
    }
    return out;
}

Outcome monte_carlo() {
    Check c;
    setenv("RECO_THREADS", "1", 1);
    const auto one = run_suite();
    setenv("RECO_THREADS", "3", 1);
    const auto three = run_suite();
    unsetenv("RECO_THREADS");
    double worst_z = 0.0;
    for (std::size_t k = 0; k < one.size(); ++k) {
        const auto& [name, pair] = one[k];
        const auto& [est, analytic] = pair;
        c.require(est.agrees_with(analytic), name + " estimate " + fmt(est.estimate) + " +- " + fmt(est.std_error) +
                                                 " vs " + fmt(analytic));
        if (est.std_error > 0) worst_z = std::max(worst_z, std::abs(est.estimate - analytic) / est.std_error);
        const auto& other = three[k].second.first;
        c.require(est.estimate == other.estimate && est.std_error == other.std_error,
                  name + " differs between 1 and 3 threads");
    }
    c.note(std::to_string(one.size()) + " estimates, max |z| " + fmt(worst_z));
    return c.done();
}

Outcome belief_decomposition_identity() {
    Check c;
    prop::Gen g(1013);
    double worst = 0.0;
    int evaluated = 0;
    while (evaluated < 1000) {
        const RecommendationSystem sys(g.quality(), g.any_type(), g.threshold());
        BeliefDecomposition d;
        try {
            d = belief_decomposition(sys);
        } catch (const DecompositionUndefined&) {
            continue;
        }
        ++evaluated;
        const auto t = d.telescoped_total();
        for (std::size_t s = 0; s < 4; ++s) worst = std::max(worst, std::abs(t[s] - (d.posterior[s] - d.prior[s])));
        c.require(prop::is_prob(d.step2), "q'' not a probability vector");
    }
    c.require(worst <= 1e-13, "telescoping error " + fmt(worst));
    c.note("telescoping error " + fmt(worst));
    return c.done();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"total probability identity", total_probability},
        {"buy and don't-buy acceptance agree", acceptance_equivalence},
        {"everyone accepts at extreme thresholds", extreme_thresholds},
        {"symmetric value closed forms", symmetric_value_forms},
        {"symmetric threshold monotonicity", symmetric_monotonicity},
        {"asymmetric interior and boundary optima", asymmetric_design},
        {"optimal prevalence of controversial products", prevalence_statics},
        {"mean-preserving spread direction", spread_effect},
        {"distinct sender and receiver populations", distinct_populations},
        {"two-threshold partials and directions", two_thresholds},
        {"infinite learning versus best single threshold", infinite_learning},
        {"Monte Carlo concordance and reproducibility", monte_carlo},
        {"belief decomposition telescopes", belief_decomposition_identity},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!out.pass) ++failed;
        std::printf("[%s] %2d %s (%.2fs) %s\n", out.pass ? "PASS" : "FAIL", index, name.c_str(), secs,
                    out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
