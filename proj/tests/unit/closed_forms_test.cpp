// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symice/closed_forms.hpp"
#include "symice/wavefunctions.hpp"

namespace symice {
namespace {

Config holes(int m, std::vector<int> x) { return Config(m, std::move(x), ConfigRole::holes); }

Rational by_paths(RowKind kind, const Config& bra, const Config& ket, const Rational& z, const Rational& t) {
    const auto b = config_state(bra).bits(), k = config_state(ket).bits();
    const int m = bra.sites();
    switch (kind) {
        case RowKind::A: return oracle::row_element_by_paths(m, b, k, LOperatorKind::first, 0, 0, z, t);
        case RowKind::B: return oracle::row_element_by_paths(m, b, k, LOperatorKind::first, 1, 0, z, t);
        case RowKind::Atilde: return oracle::row_element_by_paths(m, b, k, LOperatorKind::second, 1, 1, z, t);
        case RowKind::Btilde: return oracle::row_element_by_paths(m, b, k, LOperatorKind::second, 1, 0, z, t);
        case RowKind::DoubleRowB: return oracle::double_row_by_paths(m, b, k, z, t);
    }
    return Rational(0);
}

struct Example {
    RowKind kind;
    int sites;
    std::vector<int> bra;
    std::vector<int> ket;
    RowMonomial expected;
};

TEST(RowMonomial, WorkedExamples) {
    const std::vector<Example> examples{
        {RowKind::A, 15, {3, 5, 8, 11}, {3, 6, 11, 13}, {2, 6, -6}},
        {RowKind::B, 10, {3, 6}, {1, 6, 8}, {1, 3, -5}},
        {RowKind::Atilde, 15, {2, 5, 10, 13}, {2, 8, 10, 15}, {2, 3, 5}},
        {RowKind::Btilde, 10, {5, 8}, {3, 5, 10}, {1, 3, 4}},
    };
    const Rational z(3, 2), t(-5, 3);
    for (const auto& ex : examples) {
        const Config bra = holes(ex.sites, ex.bra), ket = holes(ex.sites, ex.ket);
        const auto mono = row_monomial(ex.kind, bra, ket);
        ASSERT_TRUE(mono.has_value()) << to_string(ex.kind);
        EXPECT_EQ(*mono, ex.expected) << to_string(*mono);
        EXPECT_EQ(mono->evaluate(z, t), by_paths(ex.kind, bra, ket, z, t)) << to_string(ex.kind);
    }
}

TEST(RowMonomial, SmallExamples) {
    EXPECT_EQ(to_string(*row_monomial(RowKind::A, holes(2, {1}), holes(2, {1}))), "(t+1)^0 t^1 z^0");
    EXPECT_EQ(*row_monomial(RowKind::B, holes(1, {}), holes(1, {1})), (RowMonomial{0, 0, 0}));
    EXPECT_EQ(*row_monomial(RowKind::Btilde, holes(1, {}), holes(1, {1})), (RowMonomial{0, 0, 0}));
    EXPECT_EQ(me_A_closed(holes(2, {1}), holes(2, {1}), Rational(7), Rational(4)), Rational(4));
}

TEST(RowMonomial, NonInterlacingIsZero) {
    EXPECT_FALSE(row_monomial(RowKind::A, holes(4, {3}), holes(4, {1})).has_value());
    EXPECT_EQ(me_B_closed(holes(5, {4}), holes(5, {1, 2}), Rational(2), Rational(3)), Rational(0));
}

TEST(RowMonomial, CountMismatchSignals) {
    EXPECT_THROW(row_monomial(RowKind::A, holes(3, {1}), holes(3, {1, 2})), std::invalid_argument);
    EXPECT_THROW(row_monomial(RowKind::Btilde, holes(3, {1}), holes(3, {2})), std::invalid_argument);
    EXPECT_THROW(row_monomial(RowKind::DoubleRowB, holes(3, {1}), holes(3, {1, 2})), std::invalid_argument);
    EXPECT_THROW(row_monomial(RowKind::A, holes(3, {1}), holes(4, {1})), std::invalid_argument);
}

TEST(RowMonomial, EverySmallPairMatchesPathSum) {
    oracle::SmallRationals gen(51, 20);
    for (int m = 1; m <= 5; ++m) {
        const Rational z = gen.nonzero(), t = gen.nonzero();
        for (RowKind kind : {RowKind::A, RowKind::B, RowKind::Atilde, RowKind::Btilde}) {
            for (int nb = 0; nb + charge(kind) <= m; ++nb) {
                for (const auto& bra : all_configs(m, nb, ConfigRole::holes)) {
                    for (const auto& ket : all_configs(m, nb + charge(kind), ConfigRole::holes)) {
                        EXPECT_EQ(me_closed(kind, bra, ket, z, t), by_paths(kind, bra, ket, z, t))
                            << to_string(kind) << " " << bra.str() << "|" << ket.str();
                    }
                }
            }
        }
    }
}

TEST(DoubleRowClosedForm, SingleSite) {
    const Rational z(2), t(3);
    EXPECT_EQ(double_row_me_closed(holes(1, {}), holes(1, {1}), z, t), t * z + z.inverse());
}

TEST(DoubleRowClosedForm, NonInterlacingPairIsNonzero) {
    const Rational z(2), t(3);
    const Config bra = holes(3, {1}), ket = holes(3, {2, 3});
    const Rational value = double_row_me_closed(bra, ket, z, t);
    EXPECT_NE(value, Rational(0));
    EXPECT_EQ(value, by_paths(RowKind::DoubleRowB, bra, ket, z, t));
}

TEST(DoubleRowClosedForm, EverySmallPairMatchesPathSum) {
    oracle::SmallRationals gen(52, 20);
    for (int m = 1; m <= 4; ++m) {
        const Rational z = gen.nonzero(), t = gen.nonzero();
        for (int nb = 0; nb < m; ++nb) {
            for (const auto& bra : all_configs(m, nb, ConfigRole::holes)) {
                for (const auto& ket : all_configs(m, nb + 1, ConfigRole::holes)) {
                    EXPECT_EQ(double_row_me_closed(bra, ket, z, t), by_paths(RowKind::DoubleRowB, bra, ket, z, t))
                        << bra.str() << "|" << ket.str();
                }
            }
        }
    }
}

TEST(DoubleRowClosedForm, SymbolicMatchesNumeric) {
    const LaurentT t = LaurentT::t();
    const LaurentT z(Rational(5, 2));
    for (const auto& ket : all_configs(4, 2, ConfigRole::holes)) {
        const Config bra = holes(4, {2});
        const LaurentT sym = double_row_me_closed(bra, ket, z, t);
        for (const Rational t0 : {Rational(2), Rational(-3, 7)}) {
            EXPECT_EQ(evaluate(sym, t0), double_row_me_closed(bra, ket, Rational(5, 2), t0));
        }
    }
}

TEST(DualSum, MatchesChainOracle) {
    const std::vector<Rational> zs{Rational(2), Rational(-3, 4)};
    const Rational t(5, 3);
    for (int m = 2; m <= 4; ++m) {
        for (const auto& h : all_configs(m, 2, ConfigRole::holes)) {
            EXPECT_EQ(dual_wavefunction_sum(m, zs, t, h),
                      oracle::chain_by_paths(m, OccupationState::mask(m), config_state(h).bits(), zs, t))
                << h.str();
        }
    }
    EXPECT_THROW(dual_wavefunction_sum(3, {Rational(2)}, t, holes(3, {1, 2})), std::invalid_argument);
}

TEST(DualSum, SymplecticSide) {
    const Rational t(3, 2);
    const auto a = verify_a9(1, {Rational(2)}, t, YoungDiagram({0}));
    EXPECT_TRUE(a.holds);
    EXPECT_EQ(a.lhs, (Rational(1) + t * Rational(4)) / Rational(2));
    EXPECT_TRUE(verify_a9(3, {Rational(-5, 2)}, t, YoungDiagram({2})).holds);
    const auto c = verify_a9(4, {Rational(2), Rational(7, 3)}, Rational(-4), YoungDiagram({1, 1}));
    EXPECT_TRUE(c.holds) << c.lhs.str() << " vs " << c.rhs.str();
    EXPECT_THROW(verify_a9(4, {Rational(2)}, t, YoungDiagram({1, 1})), std::invalid_argument);
}

TEST(FiveVertex, Examples) {
    const Rational z(3);
    EXPECT_EQ(five_vertex_me_closed(RowKind::A, holes(4, {1, 3}), holes(4, {1, 3}), z), Rational(1));
    EXPECT_EQ(five_vertex_me_closed(RowKind::A, holes(4, {3}), holes(4, {3}), z), Rational(-1));
    EXPECT_EQ(five_vertex_me_closed(RowKind::Atilde, holes(4, {3}), holes(4, {3}), z), Rational(1));
    EXPECT_EQ(five_vertex_me_closed(RowKind::A, holes(4, {2}), holes(4, {3}), z), Rational(0));
    // Ket (2, 4), bra (2): the removed hole is the second one.
    EXPECT_EQ(five_vertex_me_closed(RowKind::B, holes(4, {2}), holes(4, {2, 4}), z), Rational(-1) * pow(z, -3));
    EXPECT_EQ(five_vertex_me_closed(RowKind::Btilde, holes(4, {2}), holes(4, {2, 4}), z), Rational(-27));
    EXPECT_EQ(five_vertex_me_closed(RowKind::DoubleRowB, holes(4, {2}), holes(4, {2, 4}), z),
              pow(z, 4) - pow(z, -4));
    EXPECT_EQ(five_vertex_me_closed(RowKind::B, holes(4, {1}), holes(4, {2, 4}), z), Rational(0));
}

TEST(FiveVertex, MatchesRescaledLatticeAtMinusOne) {
    for (int m = 1; m <= 5; ++m) {
        for (const Rational z : {Rational(2), Rational(-3, 5)}) {
            const OperatorParams<Rational> p{z, Rational(-1), {}};
            for (RowKind kind : {RowKind::A, RowKind::B, RowKind::Atilde, RowKind::Btilde, RowKind::DoubleRowB}) {
                const OperatorSpec<Rational> spec{kind, Variant::primed, p};
                for (int nb = 0; nb + charge(kind) <= m; ++nb) {
                    for (const auto& ket : all_configs(m, nb + charge(kind), ConfigRole::holes)) {
                        const auto image = apply(spec, StateVector<Rational>::unit(config_state(ket)));
                        for (const auto& bra : all_configs(m, nb, ConfigRole::holes)) {
                            EXPECT_EQ(five_vertex_me_closed(kind, bra, ket, z), image.amplitude(config_state(bra)))
                                << to_string(kind) << " " << bra.str() << "|" << ket.str();
                        }
                    }
                }
            }
        }
    }
}

}  // namespace
}  // namespace symice
