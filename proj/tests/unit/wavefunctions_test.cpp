// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symice/config.hpp"
#include "symice/wavefunctions.hpp"

namespace symice {
namespace {

TEST(Config, ParticleState) {
    const Config x(5, {2, 3, 5});
    EXPECT_EQ(config_state(x).str(), "01101");
}

TEST(Config, HoleState) {
    const Config holes(5, {1, 2, 4}, ConfigRole::holes);
    EXPECT_EQ(config_state(holes).str(), "00101");
    EXPECT_EQ(particles_of(config_state(holes)), Config(5, {3, 5}));
    EXPECT_EQ(holes_of(config_state(holes)), holes);
}

TEST(Config, RejectsBadPositions) {
    EXPECT_THROW(Config(4, {2, 2}), std::invalid_argument);
    EXPECT_THROW(Config(4, {3, 1}), std::invalid_argument);
    EXPECT_THROW(Config(4, {0, 2}), std::invalid_argument);
    EXPECT_THROW(Config(4, {2, 5}), std::invalid_argument);
}

TEST(Partition, Examples) {
    EXPECT_EQ(config_to_partition(Config(5, {2, 3, 5})), YoungDiagram({2, 1, 1}));
    EXPECT_EQ(partition_to_config(YoungDiagram({2, 1, 1}), 5), Config(5, {2, 3, 5}));
    EXPECT_EQ(partition_to_config(YoungDiagram({0, 0}), 4), Config(4, {1, 2}));
    EXPECT_THROW(partition_to_config(YoungDiagram({3}), 3), std::invalid_argument);
    EXPECT_THROW(YoungDiagram({1, 2}), std::invalid_argument);
}

TEST(Partition, RoundTripEverySubset) {
    for (int m = 1; m <= 8; ++m) {
        for (int n = 0; n <= m; ++n) {
            const auto configs = all_configs(m, n, ConfigRole::particles);
            std::size_t expected = 1;
            for (int k = 0; k < n; ++k) expected = expected * static_cast<std::size_t>(m - k) / static_cast<std::size_t>(k + 1);
            ASSERT_EQ(configs.size(), expected);
            for (const auto& c : configs) {
                const auto lambda = config_to_partition(c);
                EXPECT_LE(lambda.largest(), m - n);
                EXPECT_EQ(partition_to_config(lambda, m), c);
                EXPECT_EQ(particles_of(config_state(c)), c);
            }
        }
    }
}

TEST(Wavefunction, SingleSite) {
    const Config x(1, {1});
    EXPECT_EQ(wavefunction(1, {Rational(2)}, Rational(3), x), Rational(13, 2));
}

TEST(Wavefunction, SingleParticleTwoSitesSymbolic) {
    const LaurentT t = LaurentT::t();
    const LaurentT z(Rational(2));
    // Particle at site 2 and at site 1 on two sites.
    const auto at2 = wavefunction(2, {z}, t, Config(2, {2}));
    const auto at1 = wavefunction(2, {z}, t, Config(2, {1}));
    for (const Rational t0 : {Rational(3), Rational(-1, 4), Rational(7, 2)}) {
        const Rational zz(2);
        EXPECT_EQ(evaluate(at2, t0), (Rational(1) + t0 * zz * zz) * (Rational(1) + pow(zz, -2)));
        EXPECT_EQ(evaluate(at1, t0), oracle::chain_by_paths(2, 0b01, 0, {zz}, t0));
    }
}

TEST(Wavefunction, DualTwoSites) {
    const LaurentT t = LaurentT::t();
    const LaurentT z(Rational(2));
    const auto dual = dual_wavefunction(2, {z}, t, Config(2, {1}, ConfigRole::holes));
    EXPECT_EQ(dual.str(), "1/2*t^1 + 2*t^2");
    const Rational zz(5, 3), t0(-2, 7);
    EXPECT_EQ(dual_wavefunction(2, {zz}, t0, Config(2, {1}, ConfigRole::holes)), t0 * t0 * zz + t0 / zz);
}

TEST(Wavefunction, RoleChecks) {
    EXPECT_THROW(wavefunction(2, {Rational(2)}, Rational(3), Config(2, {1}, ConfigRole::holes)), std::invalid_argument);
    EXPECT_THROW(dual_wavefunction(2, {Rational(2)}, Rational(3), Config(2, {1})), std::invalid_argument);
    EXPECT_THROW(wavefunction(3, {Rational(2)}, Rational(3), Config(2, {1})), std::invalid_argument);
}

TEST(Wavefunction, FilledLatticeIsAnnihilated) {
    for (int m = 1; m <= 4; ++m) {
        const auto out = apply_double_row_chain(StateVector<Rational>::unit(OccupationState::full(m)),
                                                {Rational(2)}, Rational(3));
        EXPECT_TRUE(out.empty());
    }
}

TEST(Wavefunction, ParticleCountGrowsByOne) {
    const auto state = n_particle_state(4, {Rational(2), Rational(-3, 5)}, Rational(7));
    EXPECT_FALSE(state.empty());
    for (const auto& [bits, amp] : state) EXPECT_EQ(OccupationState(4, bits).particle_count(), 2);
}

TEST(Wavefunction, AgreesWithPathSumOracle) {
    oracle::SmallRationals gen(31, 20);
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= std::min(m, 2); ++n) {
            std::vector<Rational> zs;
            for (int k = 0; k < n; ++k) zs.push_back(gen.nonzero());
            const Rational t = gen.nonzero();
            for (const auto& x : all_configs(m, n, ConfigRole::particles)) {
                EXPECT_EQ(wavefunction(m, zs, t, x), oracle::chain_by_paths(m, config_state(x).bits(), 0, zs, t))
                    << "M=" << m << " x=" << x.str();
            }
            for (const auto& h : all_configs(m, n, ConfigRole::holes)) {
                EXPECT_EQ(dual_wavefunction(m, zs, t, h),
                          oracle::chain_by_paths(m, OccupationState::mask(m), config_state(h).bits(), zs, t))
                    << "M=" << m << " holes=" << h.str();
            }
        }
    }
}

TEST(Wavefunction, SymbolicAgreesWithNumeric) {
    const LaurentT t = LaurentT::t();
    const std::vector<LaurentT> zs{LaurentT(Rational(3)), LaurentT(Rational(-1, 2))};
    const std::vector<Rational> zr{Rational(3), Rational(-1, 2)};
    for (const auto& x : all_configs(4, 2, ConfigRole::particles)) {
        const auto sym = wavefunction(4, zs, t, x);
        for (const Rational t0 : {Rational(2), Rational(-5, 3)}) EXPECT_EQ(evaluate(sym, t0), wavefunction(4, zr, t0, x));
    }
}

TEST(Wavefunction, InhomogeneousAtZeroShifts) {
    const std::vector<Rational> zs{Rational(2), Rational(5, 7)};
    const std::vector<Rational> zero(5, Rational(0));
    for (const auto& x : all_configs(4, 2, ConfigRole::particles)) {
        EXPECT_EQ(wavefunction(4, zs, Rational(3), x, Variant::inhom, zero), wavefunction(4, zs, Rational(3), x));
    }
}

}  // namespace
}  // namespace symice
