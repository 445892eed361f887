// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace symice {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string buf(s);
    if (!buf.empty() && buf.front() == '+') buf.erase(0, 1);
    return mpz_class(buf, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(numerator, 1);
    q_ /= denominator;
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (sgn(q_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_integer_literal(num_text)) {
        throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
    }
    mpz_class num = parse_integer(num_text);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_integer_literal(den_text)) {
            throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
        }
        den = parse_integer(den_text);
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r = 1 / q_;
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational Rational::operator-() const {
    mpq_class r = -q_;
    return Rational(std::move(r));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace symice
