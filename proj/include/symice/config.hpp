// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "symice/state.hpp"

namespace symice {

enum class ConfigRole { particles, holes };

/// Strictly increasing 1-based site positions of particles (over an empty
/// background) or holes (over a filled background) on M sites.
class Config {
public:
    Config(int sites, std::vector<int> positions, ConfigRole role = ConfigRole::particles);

    int sites() const { return sites_; }
    int size() const { return static_cast<int>(positions_.size()); }
    const std::vector<int>& positions() const { return positions_; }
    /// 1-based access, matching the usual x_1 < ... < x_N labelling.
    int operator[](int k) const { return positions_[static_cast<std::size_t>(k - 1)]; }
    ConfigRole role() const { return role_; }

    std::string str() const;

    friend bool operator==(const Config&, const Config&) = default;

private:
    int sites_;
    std::vector<int> positions_;
    ConfigRole role_;
};

/// Weakly decreasing list of non-negative parts (trailing zeros kept, so the
/// length is the number of variables N).
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int operator[](int j) const { return parts_[static_cast<std::size_t>(j - 1)]; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    std::string str() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> parts_;
};

/// Occupation pattern of a configuration.
OccupationState config_state(const Config& c);

/// lambda_j = x_{N-j+1} - N + j - 1.
YoungDiagram config_to_partition(const Config& c);

/// Inverse map, x_k = lambda_{N-k+1} + k. Throws std::invalid_argument when
/// lambda_1 > M - N.
Config partition_to_config(const YoungDiagram& lambda, int sites, ConfigRole role = ConfigRole::particles);

/// Every N-subset of {1..M} in lexicographic order.
std::vector<Config> all_configs(int sites, int count, ConfigRole role);

/// Configuration read back from an occupation pattern.
Config particles_of(const OccupationState& s);
Config holes_of(const OccupationState& s);

}  // namespace symice
