// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace symice {

Rational PointSampler::draw() {
    std::uniform_int_distribution<long> num(-kBound, kBound);
    std::uniform_int_distribution<long> den(1, kBound);
    const long p = num(engine_);
    const long q = den(engine_);
    return Rational(p, q);
}

bool pairwise_generic(const std::vector<Rational>& zs) {
    for (std::size_t i = 0; i < zs.size(); ++i) {
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
            const Rational& a = zs[i];
            const Rational& b = zs[j];
            if (a == b || a == -b) return false;
            if (!b.is_zero() && (a * b == Rational(1) || a * b == Rational(-1))) return false;
        }
    }
    return true;
}

std::vector<Rational> PointSampler::sample(int n, const SampleConstraints& constraints) {
    for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
        std::vector<Rational> point;
        point.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) point.push_back(draw());
        const bool excluded = std::any_of(point.begin(), point.end(), [&](const Rational& v) {
            return std::find(constraints.excluded.begin(), constraints.excluded.end(), v) != constraints.excluded.end();
        });
        if (excluded) continue;
        if (constraints.pairwise_generic && !pairwise_generic(point)) continue;
        if (constraints.accept && !constraints.accept(point)) continue;
        return point;
    }
    throw std::runtime_error("PointSampler: " + std::to_string(kMaxRejections) +
                             " consecutive rejections; constraints look unsatisfiable");
}

Rational PointSampler::sample_one(const std::vector<Rational>& excluded) {
    return sample(1, SampleConstraints{excluded, false, {}}).front();
}

SampleConstraints spectral_constraints() { return SampleConstraints{{Rational(0), Rational(1), Rational(-1)}, true, {}}; }

}  // namespace symice
