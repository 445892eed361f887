// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/determinant.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace symice {

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const auto n = static_cast<std::size_t>(m.rows());
    if (n == 0) return Rational(1);

    std::vector<mpz_class> a(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * n + j]; };

    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).raw();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto& q = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).raw();
            at(i, j) = q.get_num() * (row_lcm / q.get_den());
        }
        scale *= row_lcm;
    }

    int sign = 1;
    mpz_class prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(at(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(at(p, k)) == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev_pivot;
            }
            at(i, k) = 0;
        }
        prev_pivot = at(k, k);
    }

    mpz_class det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rational(mpq_class(det, scale));
}

}  // namespace symice
