// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "symice/rational.hpp"

namespace symice {

/// Laurent polynomial in a single symbol t with Rational coefficients.
///
/// Sparse exponent -> coefficient storage; zero coefficients are never
/// stored, so the zero polynomial has an empty term map.
class LaurentT {
public:
    using Terms = std::map<int, Rational>;

    LaurentT() = default;
    LaurentT(const Rational& constant);  // NOLINT: constants embed implicitly
    LaurentT(long constant) : LaurentT(Rational(constant)) {}  // NOLINT
    LaurentT(int constant) : LaurentT(Rational(constant)) {}  // NOLINT

    static LaurentT monomial(const Rational& coefficient, int exponent);
    /// The symbol t itself.
    static LaurentT t() { return monomial(Rational(1), 1); }

    const Terms& terms() const { return terms_; }
    Rational coefficient(int exponent) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Inverse of a monomial c*t^k. Other polynomials are not units of the
    /// Laurent ring; those throw std::domain_error.
    LaurentT inverse() const;

    /// Exact substitution t -> t0. Throws std::domain_error when t0 = 0 and a
    /// negative exponent is present.
    Rational evaluate(const Rational& t0) const;

    /// (min exponent, max exponent); throws std::domain_error on zero.
    std::pair<int, int> exponent_range() const;

    /// Exponent-sorted "c*t^k" terms joined by " + "; "0" for zero.
    std::string str() const;

    LaurentT& operator+=(const LaurentT& rhs);
    LaurentT& operator-=(const LaurentT& rhs);
    LaurentT& operator*=(const LaurentT& rhs);

    friend LaurentT operator+(LaurentT a, const LaurentT& b) { return a += b; }
    friend LaurentT operator-(LaurentT a, const LaurentT& b) { return a -= b; }
    friend LaurentT operator*(const LaurentT& a, const LaurentT& b);
    LaurentT operator-() const;

    friend bool operator==(const LaurentT& a, const LaurentT& b) = default;

private:
    void add_term(int exponent, const Rational& coefficient);

    Terms terms_;
};

inline Rational evaluate(const LaurentT& a, const Rational& t0) { return a.evaluate(t0); }
inline std::pair<int, int> exponent_range(const LaurentT& a) { return a.exponent_range(); }

LaurentT pow(const LaurentT& base, int exponent);

std::ostream& operator<<(std::ostream& os, const LaurentT& value);

}  // namespace symice

namespace Eigen {

template <>
struct NumTraits<symice::LaurentT> : GenericNumTraits<symice::LaurentT> {
    using Real = symice::LaurentT;
    using NonInteger = symice::LaurentT;
    using Literal = symice::LaurentT;
    using Nested = symice::LaurentT;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
