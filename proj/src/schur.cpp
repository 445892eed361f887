// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/schur.hpp"

#include <stdexcept>
#include <string>

namespace symice {

namespace {

std::vector<int> shifted_exponents(const YoungDiagram& lambda) {
    // lambda_k + N - k + 1 for k = 1..N
    const int n = lambda.size();
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) e[static_cast<std::size_t>(k - 1)] = lambda[k] + n - k + 1;
    return e;
}

void require_sizes(const YoungDiagram& lambda, const std::vector<Rational>& zs) {
    if (static_cast<std::size_t>(lambda.size()) != zs.size()) {
        throw std::invalid_argument("symplectic Schur: partition length " + std::to_string(lambda.size()) +
                                    " does not match " + std::to_string(zs.size()) + " variables");
    }
}

Rational rising_product(const Rational& x, int top, const std::vector<Rational>& alphas) {
    Rational p(1);
    for (int i = 0; i <= top; ++i) p *= x + alphas[static_cast<std::size_t>(i)];
    return p;
}

}  // namespace

FactorialParams::FactorialParams(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw std::invalid_argument("FactorialParams: need at least alpha_0");
}

FactorialParams FactorialParams::zeros(int sites) {
    return FactorialParams(std::vector<Rational>(static_cast<std::size_t>(sites) + 1, Rational(0)));
}

FactorialParams FactorialParams::negated() const {
    std::vector<Rational> neg;
    neg.reserve(alphas_.size());
    for (const auto& a : alphas_) neg.push_back(-a);
    return FactorialParams(std::move(neg));
}

RatMatrix antisymmetrized_powers(const std::vector<Rational>& zs, const std::vector<int>& exponents) {
    const auto n = static_cast<Eigen::Index>(zs.size());
    if (exponents.size() != zs.size()) throw std::invalid_argument("antisymmetrized_powers: size mismatch");
    RatMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Rational& z = zs[static_cast<std::size_t>(j)];
        for (Eigen::Index k = 0; k < n; ++k) {
            const int e = exponents[static_cast<std::size_t>(k)];
            m(j, k) = pow(z, e) - pow(z, -e);
        }
    }
    return m;
}

WeylDenominator weyl_denominator(const std::vector<Rational>& zs) {
    const int n = static_cast<int>(zs.size());
    const Rational det = determinant(antisymmetrized_powers(zs, shifted_exponents(YoungDiagram(std::vector<int>(zs.size(), 0)))));

    Rational f = (n % 2 == 0) ? Rational(1) : Rational(-1);
    for (int j = 1; j <= n; ++j) {
        const Rational& zj = zs[static_cast<std::size_t>(j - 1)];
        f *= pow(zj, j - 1 - n) * (Rational(1) - zj * zj);
        for (int k = j + 1; k <= n; ++k) {
            const Rational& zk = zs[static_cast<std::size_t>(k - 1)];
            f *= (Rational(1) - zj * zk) * (Rational(1) - zj / zk);
        }
    }
    return {det, f};
}

Rational sp_numerator(const YoungDiagram& lambda, const std::vector<Rational>& zs) {
    require_sizes(lambda, zs);
    return determinant(antisymmetrized_powers(zs, shifted_exponents(lambda)));
}

Rational sp(const YoungDiagram& lambda, const std::vector<Rational>& zs) {
    const Rational num = sp_numerator(lambda, zs);
    const Rational den = weyl_denominator(zs).determinant;
    if (den.is_zero()) throw std::domain_error("sp: Weyl denominator vanishes at the given point");
    return num / den;
}

Rational g_mu(const std::vector<int>& mu, const std::vector<Rational>& zs, const FactorialParams& params) {
    if (mu.size() != zs.size()) throw std::invalid_argument("g_mu: mu length does not match variables");
    const auto& alphas = params.alphas();
    for (int m : mu) {
        if (m < 0) throw std::invalid_argument("g_mu: negative part");
        if (static_cast<std::size_t>(m) + 1 > alphas.size()) {
            throw std::invalid_argument("g_mu: part " + std::to_string(m) + " needs alpha_0..alpha_" +
                                        std::to_string(m) + " but only " + std::to_string(alphas.size()) +
                                        " shifts are given");
        }
    }
    const auto n = static_cast<Eigen::Index>(zs.size());
    RatMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Rational& z = zs[static_cast<std::size_t>(j)];
        const Rational z_inv = z.inverse();
        for (Eigen::Index k = 0; k < n; ++k) {
            const int top = mu[static_cast<std::size_t>(k)];
            m(j, k) = rising_product(z, top, alphas) - rising_product(z_inv, top, alphas);
        }
    }
    return determinant(m);
}

Rational factorial_sp(const YoungDiagram& lambda, const std::vector<Rational>& zs, const FactorialParams& params) {
    require_sizes(lambda, zs);
    const int n = lambda.size();
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) mu[static_cast<std::size_t>(k - 1)] = lambda[k] + n - k;
    const Rational den = weyl_denominator(zs).determinant;
    if (den.is_zero()) throw std::domain_error("factorial_sp: Weyl denominator vanishes at the given point");
    return g_mu(mu, zs, params) / den;
}

}  // namespace symice
