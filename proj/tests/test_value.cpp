#include <gtest/gtest.h>

#include "reco/design.hpp"
#include "reco/errors.hpp"
#include "reco/value.hpp"
#include "support.hpp"

using namespace reco;

namespace {

const QualityDistribution kS1(0.4, 0.2, 0.2, 0.2);

}  // namespace

TEST(ValueNoRec, Examples) {
    EXPECT_NEAR(value_no_rec(0.2, QualityDistribution(0.25, 0.25, 0.25, 0.25)), 0.5, 1e-15);
    EXPECT_NEAR(value_no_rec(0.5, kS1), 0.6, 1e-15);
    EXPECT_NEAR(value_no_rec(0.0, kS1), 0.6, 1e-15);
}

TEST(ValueAccepting, GainAtCentreType) {
    const RecommendationSystem sys(kS1, TypeDistribution::uniform(), 0.5);
    EXPECT_NEAR(value_accepting(sys, 0.0) - value_no_rec(0.0, kS1), 0.14, 1e-15);
    prop::Gen g(41);
    for (int n = 0; n < 100; ++n) {
        const RecommendationSystem s(g.quality(0.001), g.any_type(), g.threshold());
        const double i = g.uniform(-0.5, 0.5);
        const auto pr = recommendation_probabilities(s);
        const double u0 = value_no_rec(i, s.quality);
        EXPECT_NEAR(value_accepting(s, i) - u0,
                    pr.buy * (expected_utility(i, posterior(s, Recommendation::Buy).probs) - u0), 1e-14);
        EXPECT_NEAR(value_rejecting(s, i) - u0,
                    pr.dont_buy * (expected_utility(i, posterior(s, Recommendation::DontBuy).probs) - u0), 1e-14);
    }
}

TEST(SystemValue, Examples) {
    const auto s1 = system_value(RecommendationSystem(kS1, TypeDistribution::uniform(), 0.5));
    EXPECT_NEAR(s1.value, 0.14, 1e-15);
    EXPECT_EQ(s1.region.kind, AcceptanceRegion::Kind::All);
    EXPECT_EQ(s1.case_label, ValueCase::AllAccept);

    const auto s2 = system_value(power_system(2.0, 0.2, 1.0, 0.5));
    EXPECT_NEAR(s2.value, 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(s2.pi_buy, 0.5, 1e-15);

    const auto q = quality_from_params(0.25, 1.0);
    for (double beta : {0.1, 0.3, 0.45}) {
        const auto v = system_value(RecommendationSystem(q, TypeDistribution::piecewise_symmetric(beta, 0.75), 0.75));
        EXPECT_NEAR(v.value, 0.125, 1e-15);
    }
}

TEST(SystemValue, ClosedFormMatchesIntegral) {
    prop::Gen g(42);
    int upper = 0, lower = 0;
    for (int n = 0; n < 300; ++n) {
        const auto f = g.coin() ? g.power(0.1, 8.0) : g.any_type();
        const RecommendationSystem sys(g.quality(0.001), f, g.threshold());
        const auto rep = system_value(sys);
        EXPECT_NEAR(rep.value, value_by_integration(sys), 1e-9) << f.describe();
        EXPECT_NEAR(rep.accepting_term + rep.rejecting_term, rep.value, 1e-10);
        EXPECT_GE(rep.value, -1e-12);
        switch (rep.region.kind) {
            case AcceptanceRegion::Kind::All: EXPECT_EQ(rep.case_label, ValueCase::AllAccept); break;
            case AcceptanceRegion::Kind::UpperSet: EXPECT_EQ(rep.case_label, ValueCase::UpperAccept); ++upper; break;
            case AcceptanceRegion::Kind::LowerSet: EXPECT_EQ(rep.case_label, ValueCase::LowerAccept); ++lower; break;
        }
        EXPECT_NO_THROW(system_value_checked(sys));
    }
    EXPECT_GT(upper, 0);
    EXPECT_GT(lower, 0);
}

TEST(SystemValue, DistinctPopulationsUseReceiverWeights) {
    prop::Gen g(43);
    for (int n = 0; n < 100; ++n) {
        const RecommendationSystem sys(g.quality(0.001), g.any_type(), g.any_type(), g.threshold());
        EXPECT_TRUE(sys.distinct_populations());
        EXPECT_NEAR(system_value(sys).value, value_by_integration(sys), 1e-9);
    }
}

TEST(SystemValue, SymmetricCollapse) {
    prop::Gen g(44);
    for (int n = 0; n < 300; ++n) {
        const auto f = g.symmetric_type();
        const double r = g.threshold();
        const auto q = quality_from_params(g.uniform(0.0, 0.49), g.uniform(0.1, 10.0));
        const auto rep = system_value(RecommendationSystem(q, f, r));
        EXPECT_EQ(rep.case_label, ValueCase::AllAccept);
        EXPECT_LT(std::abs(rep.value - rep.pi_buy * rep.buy.objective), 1e-10);
        const auto qp = reparameterize(q);
        const double closed = symmetric_value({qp.Q, *qp.sigma, f.cdf(0.5 - r), 1.0});
        EXPECT_LT(std::abs(rep.value - closed), 1e-10);
    }
}

TEST(SymmetricValue, Examples) {
    EXPECT_NEAR(symmetric_value({0.2, 2.0, 0.5, 1.0}), 0.14, 1e-15);
    for (double beta : {0.0, 0.4, 1.0}) EXPECT_NEAR(symmetric_value({0.25, 1.0, beta, 1.0}), 0.125, 1e-15);
    for (double sigma : {0.3, 1.0, 4.0}) {
        const double h = sigma / (sigma + 1.0);
        EXPECT_NEAR(symmetric_value({0.0, sigma, 0.3, 1.0}), h * (1.0 - h), 1e-15);
    }
}

TEST(Reparameterize, RoundTrip) {
    const auto p = reparameterize(kS1);
    EXPECT_DOUBLE_EQ(p.Q, 0.2);
    EXPECT_DOUBLE_EQ(*p.sigma, 2.0);
    EXPECT_DOUBLE_EQ(*p.lambda, 1.0);
    const auto even = quality_from_params(0.25, 1.0, 1.0);
    for (double x : even.probs()) EXPECT_DOUBLE_EQ(x, 0.25);
    const auto fn = reparameterize(QualityDistribution(0.03, 0.7, 0.1, 0.17));
    EXPECT_NEAR(*fn.lambda, 7.0, 1e-14);
    EXPECT_NEAR(*fn.sigma, 3.0 / 17.0, 1e-15);
    EXPECT_FALSE(reparameterize(QualityDistribution(0.5, 0.5, 0, 0)).sigma);

    prop::Gen g(45);
    for (int n = 0; n < 200; ++n) {
        const auto q = g.quality(0.01);
        const auto r = reparameterize(q);
        const auto back = quality_from_params(r.Q, *r.sigma, *r.lambda);
        for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(back.probs()[k], q.probs()[k], 1e-14);
    }
    EXPECT_THROW(quality_from_params(0.5, 1.0), DomainError);
    EXPECT_THROW(quality_from_params(0.2, 0.0), DomainError);
}

TEST(ValueRecord, Fields) {
    const auto rec = to_record(system_value(RecommendationSystem(kS1, TypeDistribution::uniform(), 0.5)));
    for (const char* key : {"value", "pi_buy", "delta_O_B", "delta_S_B", "delta_O_D", "delta_S_D", "region", "i_tilde"}) {
        EXPECT_NE(rec.find(key), nullptr) << key;
    }
}
