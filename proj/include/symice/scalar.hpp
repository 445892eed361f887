// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>

#include "symice/laurent.hpp"
#include "symice/rational.hpp"

namespace symice {

/// Exact commutative-ring scalar the lattice and determinant code is
/// templated on: Rational (all parameters numeric) or LaurentT (t symbolic).
template <class S>
concept ExactScalar = std::regular<S> && std::constructible_from<S, Rational> && requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<S>;
};

static_assert(ExactScalar<Rational>);
static_assert(ExactScalar<LaurentT>);

/// Integer power for any exact scalar; negative exponents go through
/// inverse(), which LaurentT only supports for monomials.
template <ExactScalar S>
S ipow(const S& base, int exponent) {
    if (exponent < 0) return ipow(base.inverse(), -exponent);
    S result(Rational(1));
    S b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result = result * b;
        if (e > 1) b = b * b;
    }
    return result;
}

/// Textual form used in reports and CLI output.
inline std::string to_text(const Rational& v) { return v.str(); }
inline std::string to_text(const LaurentT& v) { return v.str(); }

}  // namespace symice
