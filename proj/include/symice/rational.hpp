// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace symice {

/// Arbitrary-precision rational number, always held in canonical form
/// (positive denominator, numerator and denominator coprime).
///
/// Wraps mpq_class but exposes plain value semantics with no expression
/// templates, so it can be used as an Eigen scalar.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: implicit from integers
    Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : q_(integer) {}
    explicit Rational(mpq_class q);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
    /// input and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational inverse() const;

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class q_{0};
};

/// Integer power, negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace symice

namespace Eigen {

template <>
struct NumTraits<symice::Rational> : GenericNumTraits<symice::Rational> {
    using Real = symice::Rational;
    using NonInteger = symice::Rational;
    using Literal = symice::Rational;
    using Nested = symice::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 3
    };

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
