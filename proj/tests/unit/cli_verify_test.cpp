// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <json.hpp>

#include "symice/sampling.hpp"
#include "symice/suites.hpp"

namespace symice {
namespace {

TEST(Sampler, SameSeedSameSequence) {
    PointSampler a(99), b(99), c(100);
    std::vector<Rational> sa, sb, sc;
    for (int i = 0; i < 50; ++i) {
        sa.push_back(a.draw());
        sb.push_back(b.draw());
        sc.push_back(c.draw());
    }
    EXPECT_EQ(sa, sb);
    EXPECT_NE(sa, sc);
}

TEST(Sampler, SpectralPointsAvoidDegenerateValues) {
    PointSampler s(5);
    for (int i = 0; i < 10000; ++i) {
        const auto zs = s.sample(3, spectral_constraints());
        for (const auto& z : zs) {
            EXPECT_FALSE(z.is_zero());
            EXPECT_NE(z, Rational(1));
            EXPECT_NE(z, Rational(-1));
        }
        ASSERT_TRUE(pairwise_generic(zs));
    }
}

TEST(Sampler, PairwiseGenericity) {
    EXPECT_TRUE(pairwise_generic({Rational(2), Rational(3)}));
    EXPECT_FALSE(pairwise_generic({Rational(2), Rational(-2)}));
    EXPECT_FALSE(pairwise_generic({Rational(2), Rational(1, 2)}));
    EXPECT_FALSE(pairwise_generic({Rational(2), Rational(-1, 2)}));
    EXPECT_TRUE(pairwise_generic({Rational(2)}));
}

TEST(Sampler, RejectionLimitSignals) {
    PointSampler s(1);
    SampleConstraints never;
    never.accept = [](const std::vector<Rational>&) { return false; };
    EXPECT_THROW(s.sample(1, never), std::runtime_error);
}

TEST(Suites, CatalogIsComplete) {
    std::vector<std::string> ids;
    for (const auto& info : suite_catalog()) ids.push_back(info.id);
    const std::vector<std::string> expected{"ybe",       "thm-3-2", "thm-4-1",    "thm-5-2", "thm-5-3",  "lemma-4-2",
                                            "lemma-4-3", "eq-4-20", "eq-4-37",    "appendix-a", "cor-a-9", "five-vertex"};
    EXPECT_EQ(ids, expected);
    EXPECT_THROW(suite_info("nope"), std::invalid_argument);
}

TEST(Suites, SpecValidation) {
    auto spec = SuiteSpec::defaults("thm-3-2");
    spec.trials = 0;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = SuiteSpec::defaults("thm-3-2");
    spec.m_max = 25;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec.suite = "unknown";
    EXPECT_THROW(spec.validate(), std::invalid_argument);
}

SuiteSpec small_thm32(std::uint64_t seed) {
    SuiteSpec spec;
    spec.suite = "thm-3-2";
    spec.m_max = 4;
    spec.n_max = 2;
    spec.trials = 2;
    spec.seed = seed;
    return spec;
}

TEST(Suites, InstanceCount) {
    const Report r = run_suite(small_thm32(7));
    EXPECT_TRUE(r.passed());
    // Configurations with 1 <= N <= min(2, M) over M = 1..4: 1+3+6+10 = 20, twice.
    EXPECT_EQ(r.instances_checked, 40);
}

TEST(Suites, JsonHasExactlyTheReportFields) {
    const Report r = run_suite(small_thm32(7));
    const auto j = nlohmann::json::parse(report_json(r));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    EXPECT_EQ(keys, (std::vector<std::string>{"elapsed_ms", "failures", "instances_checked", "seed", "suite"}));
    EXPECT_EQ(j["suite"], "thm-3-2");
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["instances_checked"], 40);
    EXPECT_TRUE(j["failures"].is_array());
    EXPECT_TRUE(j["failures"].empty());
}

TEST(Suites, ReproducibleUnderSeed) {
    auto a = run_suite(small_thm32(11)), b = run_suite(small_thm32(11));
    EXPECT_EQ(a.instances_checked, b.instances_checked);
    a.elapsed_ms = b.elapsed_ms = 0;
    EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Suites, CorruptedWeightsAreDetected) {
    WeightTable<Rational> bad;
    bad.l = [](LOperatorKind kind, Variant variant, int a, int s, int ao, int so, const OperatorParams<Rational>& p,
               int site) {
        const Rational w = l_weight(kind, variant, a, s, ao, so, p, site);
        return kind == LOperatorKind::first && a == 0 && s == 1 && ao == 0 && so == 1 ? w * Rational(2) : w;
    };
    for (const char* id : {"thm-3-2", "ybe", "appendix-a"}) {
        auto spec = SuiteSpec::defaults(id, 3);
        spec.m_max = std::min(spec.m_max, 4);
        spec.trials = std::min(spec.trials, 5);
        spec.weights = &bad;
        const Report r = run_suite(spec);
        ASSERT_FALSE(r.passed()) << id;
        EXPECT_NE(r.failures.front().lhs, r.failures.front().rhs) << id;
    }
}

}  // namespace
}  // namespace symice
