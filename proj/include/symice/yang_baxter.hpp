// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include <Eigen/Core>

#include "symice/rational.hpp"
#include "symice/weights.hpp"

namespace symice {

/// Operator on W_a (x) W_b (x) F_j, basis index 4a + 2b + j.
using Matrix8 = Eigen::Matrix<Rational, 8, 8>;

/// 4x4 two-space weight, called as (a_in, b_in, a_out, b_out).
using TwoSpaceWeight = std::function<Rational(int, int, int, int)>;

Matrix8 embed_ab(const TwoSpaceWeight& w);
Matrix8 embed_aj(const TwoSpaceWeight& w);
Matrix8 embed_bj(const TwoSpaceWeight& w);

struct YangBaxterSides {
    Matrix8 lhs;  // R_ab(z1/z2) L_aj(z1) L_bj(z2)
    Matrix8 rhs;  // L_bj(z2) L_aj(z1) R_ab(z1/z2)
};

/// Builds both sides of the RLL relation for the first L-operator. `r`
/// replaces the R-matrix when given (negative controls).
YangBaxterSides yang_baxter_sides(const Rational& z1, const Rational& z2, const Rational& t,
                                  const WeightTable<Rational>& table = WeightTable<Rational>::standard(),
                                  const TwoSpaceWeight& r = {});

/// Exact entrywise equality of the two sides. Throws std::invalid_argument
/// when any parameter is zero.
bool check_yang_baxter(const Rational& z1, const Rational& z2, const Rational& t,
                       const WeightTable<Rational>& table = WeightTable<Rational>::standard(),
                       const TwoSpaceWeight& r = {});

}  // namespace symice
