// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/yang_baxter.hpp"

#include <stdexcept>

namespace symice {

namespace {

int index_of(int a, int b, int j) { return 4 * a + 2 * b + j; }

}  // namespace

Matrix8 embed_ab(const TwoSpaceWeight& w) {
    Matrix8 m = Matrix8::Constant(Rational(0));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int ao = 0; ao < 2; ++ao)
                for (int bo = 0; bo < 2; ++bo)
                    for (int j = 0; j < 2; ++j) m(index_of(ao, bo, j), index_of(a, b, j)) = w(a, b, ao, bo);
    return m;
}

Matrix8 embed_aj(const TwoSpaceWeight& w) {
    Matrix8 m = Matrix8::Constant(Rational(0));
    for (int a = 0; a < 2; ++a)
        for (int j = 0; j < 2; ++j)
            for (int ao = 0; ao < 2; ++ao)
                for (int jo = 0; jo < 2; ++jo)
                    for (int b = 0; b < 2; ++b) m(index_of(ao, b, jo), index_of(a, b, j)) = w(a, j, ao, jo);
    return m;
}

Matrix8 embed_bj(const TwoSpaceWeight& w) {
    Matrix8 m = Matrix8::Constant(Rational(0));
    for (int b = 0; b < 2; ++b)
        for (int j = 0; j < 2; ++j)
            for (int bo = 0; bo < 2; ++bo)
                for (int jo = 0; jo < 2; ++jo)
                    for (int a = 0; a < 2; ++a) m(index_of(a, bo, jo), index_of(a, b, j)) = w(b, j, bo, jo);
    return m;
}

YangBaxterSides yang_baxter_sides(const Rational& z1, const Rational& z2, const Rational& t,
                                  const WeightTable<Rational>& table, const TwoSpaceWeight& r) {
    if (z1.is_zero() || z2.is_zero() || t.is_zero()) {
        throw std::invalid_argument("check_yang_baxter: z1, z2 and t must be nonzero");
    }
    const Rational ratio = z1 / z2;
    const TwoSpaceWeight r_default = [&](int a, int b, int ao, int bo) { return r_weight(a, b, ao, bo, ratio, t); };
    const OperatorParams<Rational> p1{z1, t, {}};
    const OperatorParams<Rational> p2{z2, t, {}};
    auto l_of = [&](const OperatorParams<Rational>& p) -> TwoSpaceWeight {
        return [&table, p](int a, int s, int ao, int so) {
            return table.l(LOperatorKind::first, Variant::plain, a, s, ao, so, p, 0);
        };
    };

    const Matrix8 R = embed_ab(r ? r : r_default);
    const Matrix8 La = embed_aj(l_of(p1));
    const Matrix8 Lb = embed_bj(l_of(p2));
    return {(R * La * Lb).eval(), (Lb * La * R).eval()};
}

bool check_yang_baxter(const Rational& z1, const Rational& z2, const Rational& t, const WeightTable<Rational>& table,
                       const TwoSpaceWeight& r) {
    const auto sides = yang_baxter_sides(z1, z2, t, table, r);
    return sides.lhs == sides.rhs;
}

}  // namespace symice
