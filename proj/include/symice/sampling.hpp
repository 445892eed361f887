// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "symice/rational.hpp"

namespace symice {

/// Loci a sampled point must avoid.
struct SampleConstraints {
    /// Values no coordinate may take.
    std::vector<Rational> excluded;
    /// Reject z_i = +-z_j and z_i = +-1/z_j for i != j.
    bool pairwise_generic = false;
    /// Extra acceptance test on the whole point.
    std::function<bool(const std::vector<Rational>&)> accept;
};

/// Deterministic source of random rationals p/q with |p| <= bound and
/// 1 <= q <= bound, drawn from std::mt19937_64 seeded once.
class PointSampler {
public:
    static constexpr const char* kGenerator = "mt19937_64";
    static constexpr int kBound = 1000;
    static constexpr int kMaxRejections = 1000;

    explicit PointSampler(std::uint64_t seed) : engine_(seed) {}

    Rational draw();

    /// n coordinates satisfying the constraints. Throws std::runtime_error
    /// after kMaxRejections consecutive rejected candidates.
    std::vector<Rational> sample(int n, const SampleConstraints& constraints);

    /// Single coordinate avoiding `excluded`.
    Rational sample_one(const std::vector<Rational>& excluded);

private:
    std::mt19937_64 engine_;
};

/// Spectral parameters: z not in {0, 1, -1}, pairwise generic.
SampleConstraints spectral_constraints();

/// True when no pair violates z_i != +-z_j^{+-1}.
bool pairwise_generic(const std::vector<Rational>& zs);

}  // namespace symice
