// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/laurent.hpp"

#include <ostream>
#include <stdexcept>

namespace symice {

LaurentT::LaurentT(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentT LaurentT::monomial(const Rational& coefficient, int exponent) {
    LaurentT r;
    if (!coefficient.is_zero()) r.terms_.emplace(exponent, coefficient);
    return r;
}

Rational LaurentT::coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentT LaurentT::inverse() const {
    if (!is_monomial()) {
        throw std::domain_error("LaurentT: only monomials are invertible, got " + str());
    }
    const auto& [exponent, coefficient] = *terms_.begin();
    return monomial(coefficient.inverse(), -exponent);
}

Rational LaurentT::evaluate(const Rational& t0) const {
    if (is_zero()) return Rational(0);
    if (t0.is_zero() && terms_.begin()->first < 0) {
        throw std::domain_error("LaurentT: evaluation at t = 0 with negative exponent");
    }
    // Horner over the exponent window [lo, hi], then shift by t0^lo.
    const int lo = terms_.begin()->first;
    const int hi = terms_.rbegin()->first;
    Rational acc(0);
    auto it = terms_.rbegin();
    for (int e = hi; e >= lo; --e) {
        acc *= t0;
        if (it != terms_.rend() && it->first == e) {
            acc += it->second;
            ++it;
        }
    }
    return lo == 0 ? acc : acc * pow(t0, lo);
}

std::pair<int, int> LaurentT::exponent_range() const {
    if (is_zero()) throw std::domain_error("LaurentT: exponent range of zero polynomial");
    return {terms_.begin()->first, terms_.rbegin()->first};
}

std::string LaurentT::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*t^" + std::to_string(e);
    }
    return out;
}

void LaurentT::add_term(int exponent, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentT& LaurentT::operator+=(const LaurentT& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentT& LaurentT::operator-=(const LaurentT& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentT& LaurentT::operator*=(const LaurentT& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentT operator*(const LaurentT& a, const LaurentT& b) {
    LaurentT r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
}

LaurentT LaurentT::operator-() const {
    LaurentT r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentT pow(const LaurentT& base, int exponent) {
    if (exponent < 0) return pow(base.inverse(), -exponent);
    LaurentT result(1);
    LaurentT b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentT& value) { return os << value.str(); }

}  // namespace symice
