// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "symice/rational.hpp"

namespace symice {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact determinant of a square rational matrix.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer
/// matrix is reduced with Bareiss fraction-free elimination (row pivoting on
/// zero pivots), and the extracted row factors are divided back out. The 0x0
/// determinant is 1. Throws std::invalid_argument on a non-square input.
Rational determinant(const RatMatrix& m);

}  // namespace symice
