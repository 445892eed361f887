// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "symice/config.hpp"
#include "symice/determinant.hpp"
#include "symice/scalar.hpp"

namespace symice {

/// Ordered shift parameters (alpha_0, alpha_1, ..., alpha_M) of the
/// factorial characters. The order matters and is kept as given.
class FactorialParams {
public:
    explicit FactorialParams(std::vector<Rational> alphas);
    /// All-zero parameters of length sites + 1.
    static FactorialParams zeros(int sites);

    const std::vector<Rational>& alphas() const { return alphas_; }
    int sites() const { return static_cast<int>(alphas_.size()) - 1; }
    FactorialParams negated() const;

private:
    std::vector<Rational> alphas_;
};

/// Matrix with entry (j, k) = z_j^{e_k} - z_j^{-e_k}, rows indexed by
/// variable, columns by exponent.
RatMatrix antisymmetrized_powers(const std::vector<Rational>& zs, const std::vector<int>& exponents);

/// det_N(z_j^{N-k+1} - z_j^{-N+k-1}) and its product form
/// (-1)^N prod_j z_j^{j-1-N}(1 - z_j^2) prod_{j<k}(1 - z_j z_k)(1 - z_j/z_k).
struct WeylDenominator {
    Rational determinant;
    Rational factored;
};

WeylDenominator weyl_denominator(const std::vector<Rational>& zs);

/// Symplectic Schur function as a ratio of determinants. Throws
/// std::domain_error when the denominator vanishes at zs.
Rational sp(const YoungDiagram& lambda, const std::vector<Rational>& zs);

/// Numerator determinant det_N(z_j^{lambda_k+N-k+1} - z_j^{-lambda_k-N+k-1}).
Rational sp_numerator(const YoungDiagram& lambda, const std::vector<Rational>& zs);

/// G_mu: det over (j, k) of prod_{i=0}^{mu_k}(z_j + alpha_i) - prod_{i=0}^{mu_k}(1/z_j + alpha_i).
/// Throws std::invalid_argument when mu_1 exceeds the number of shifts.
Rational g_mu(const std::vector<int>& mu, const std::vector<Rational>& zs, const FactorialParams& params);

/// G_{lambda+delta} over the Weyl denominator, delta = (N-1, ..., 0).
Rational factorial_sp(const YoungDiagram& lambda, const std::vector<Rational>& zs, const FactorialParams& params);

/// prod_j z_j^{j-1-N}(1 + t z_j^2) prod_{j<k}(1 + t z_j z_k)(1 + t z_j/z_k).
///
/// With primed = true this is the rescaled-model prefactor
/// prod_j z_j^{j-1-N}(1 + t' z_j^2) prod_{j<k}(1 + t' z_j z_k)(t' + z_j/z_k),
/// t' = 1/t.
template <ExactScalar S>
S deformation_factor(const std::vector<S>& zs, const S& t, bool primed = false) {
    const S one(Rational(1));
    const int n = static_cast<int>(zs.size());
    const S tp = primed ? t.inverse() : t;
    S result = one;
    for (int j = 1; j <= n; ++j) {
        const S& zj = zs[static_cast<std::size_t>(j - 1)];
        result = result * ipow(zj, j - 1 - n) * (one + tp * zj * zj);
        for (int k = j + 1; k <= n; ++k) {
            const S& zk = zs[static_cast<std::size_t>(k - 1)];
            const S ratio = zj * zk.inverse();
            result = result * (one + tp * zj * zk) * (primed ? tp + ratio : one + tp * ratio);
        }
    }
    return result;
}

}  // namespace symice
