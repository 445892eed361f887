// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symice/config.hpp"
#include "symice/operators.hpp"
#include "symice/schur.hpp"

namespace symice {

/// (t+1)^t_plus_one * t^t_power * z^z_power.
struct RowMonomial {
    int t_plus_one = 0;
    int t_power = 0;
    int z_power = 0;

    template <ExactScalar S>
    S evaluate(const S& z, const S& t) const {
        const S one(Rational(1));
        return ipow(t + one, t_plus_one) * ipow(t, t_power) * ipow(z, z_power);
    }

    friend bool operator==(const RowMonomial&, const RowMonomial&) = default;
};

std::string to_string(const RowMonomial& m);

/// Closed-form <xbar| O(z) |ybar> of a single row operator on hole
/// configurations, O in {A, B, Atilde, Btilde}. A and Atilde take equal hole
/// counts; B and Btilde take N bra holes and N+1 ket holes. Returns nullopt
/// when the pair does not interlace, in which case the element is 0.
std::optional<RowMonomial> row_monomial(RowKind kind, const Config& xbar, const Config& ybar);

/// Summands of z^{-1} <xN| Atilde(z) B(z) |xN1> as one monomial per
/// intermediate configuration.
std::vector<RowMonomial> alpha_terms(const Config& xN, const Config& xN1);

/// Summands of t z <xN| Btilde(z) A(z) |xN1>.
std::vector<RowMonomial> beta_terms(const Config& xN, const Config& xN1);

template <ExactScalar S>
S sum_terms(const std::vector<RowMonomial>& terms, const S& z, const S& t) {
    S total;
    for (const auto& m : terms) total = total + m.evaluate(z, t);
    return total;
}

template <ExactScalar S>
S me_closed(RowKind kind, const Config& xbar, const Config& ybar, const S& z, const S& t) {
    const auto m = row_monomial(kind, xbar, ybar);
    return m ? m->evaluate(z, t) : S();
}

template <ExactScalar S>
S me_A_closed(const Config& xbar, const Config& ybar, const S& z, const S& t) {
    return me_closed(RowKind::A, xbar, ybar, z, t);
}
template <ExactScalar S>
S me_B_closed(const Config& xbar, const Config& ybar, const S& z, const S& t) {
    return me_closed(RowKind::B, xbar, ybar, z, t);
}
template <ExactScalar S>
S me_Atilde_closed(const Config& xbar, const Config& ybar, const S& z, const S& t) {
    return me_closed(RowKind::Atilde, xbar, ybar, z, t);
}
template <ExactScalar S>
S me_Btilde_closed(const Config& xbar, const Config& ybar, const S& z, const S& t) {
    return me_closed(RowKind::Btilde, xbar, ybar, z, t);
}

/// <xN| B(z) |xN1> for the double-row operator as alpha + beta. Pairs
/// outside the interlacing pattern can still be nonzero (A moves holes to
/// the left), so no admissibility gate is applied; empty windows give 0.
template <ExactScalar S>
S double_row_me_closed(const Config& xN, const Config& xN1, const S& z, const S& t) {
    if (xN.sites() != xN1.sites()) throw std::invalid_argument("double_row_me_closed: site count mismatch");
    if (xN1.size() != xN.size() + 1) throw std::invalid_argument("double_row_me_closed: ket needs one more hole");
    return sum_terms(alpha_terms(xN, xN1), z, t) + sum_terms(beta_terms(xN, xN1), z, t);
}

namespace detail {

template <ExactScalar S>
S dual_sum_from(int level, const Config& upper, const std::vector<S>& zs, const S& t) {
    // <1^M| B(z_1) ... B(z_level) |upper>, upper carrying `level` holes.
    if (level == 0) return S(Rational(1));
    const S& z = zs[static_cast<std::size_t>(level - 1)];
    S total;
    for (const auto& lower : all_configs(upper.sites(), level - 1, ConfigRole::holes)) {
        const S factor = double_row_me_closed(lower, upper, z, t);
        if (factor.is_zero()) continue;
        total = total + factor * dual_sum_from(level - 1, lower, zs, t);
    }
    return total;
}

}  // namespace detail

/// Dual wavefunction as the sum over chains of hole configurations
/// () = x^0, x^1, ..., x^N = holes of prod_k <x^{k-1}| B(z_k) |x^k>, each
/// factor taken from double_row_me_closed. Every intermediate x^k with k
/// holes is visited; non-interlacing steps are not zero in general.
template <ExactScalar S>
S dual_wavefunction_sum(int sites, const std::vector<S>& zs, const S& t, const Config& holes) {
    if (holes.sites() != sites) throw std::invalid_argument("dual_wavefunction_sum: site count mismatch");
    if (static_cast<std::size_t>(holes.size()) != zs.size()) {
        throw std::invalid_argument("dual_wavefunction_sum: need one spectral parameter per hole");
    }
    return detail::dual_sum_from(holes.size(), holes, zs, t);
}

/// Matrix elements of the rescaled operators at t = -1, where the model
/// becomes a five-vertex model. `kind` selects A', B', Atilde', Btilde' or
/// the double-row B'.
Rational five_vertex_me_closed(RowKind kind, const Config& xbar, const Config& ybar, const Rational& z);

struct A9Check {
    Rational lhs;  // t^{N(M-N)} D(zs, t) sp_lambdabar(t zs)
    Rational rhs;  // interlacing-chain sum
    bool holds;
};

/// Compares the interlacing-chain dual wavefunction with the symplectic
/// Schur side at the hole configuration x_j = lambdabar_{N+1-j} + j.
A9Check verify_a9(int sites, const std::vector<Rational>& zs, const Rational& t, const YoungDiagram& lambda_bar);

}  // namespace symice
