// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/config.hpp"

#include <stdexcept>

namespace symice {

namespace {

std::string join(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

void enumerate(int sites, int count, int next, std::vector<int>& cur, ConfigRole role, std::vector<Config>& out) {
    if (static_cast<int>(cur.size()) == count) {
        out.emplace_back(sites, cur, role);
        return;
    }
    const int remaining = count - static_cast<int>(cur.size());
    for (int x = next; x <= sites - remaining + 1; ++x) {
        cur.push_back(x);
        enumerate(sites, count, x + 1, cur, role, out);
        cur.pop_back();
    }
}

}  // namespace

Config::Config(int sites, std::vector<int> positions, ConfigRole role)
    : sites_(sites), positions_(std::move(positions)), role_(role) {
    if (sites < 1 || sites > kMaxSites) throw std::invalid_argument("Config: site count out of range");
    for (std::size_t k = 0; k < positions_.size(); ++k) {
        const int x = positions_[k];
        if (x < 1 || x > sites) throw std::invalid_argument("Config: position " + std::to_string(x) + " outside [1, M]");
        if (k > 0 && positions_[k - 1] >= x) throw std::invalid_argument("Config: positions must strictly increase");
    }
}

std::string Config::str() const { return join(positions_); }

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 0) throw std::invalid_argument("YoungDiagram: negative part");
        if (j > 0 && parts_[j] > parts_[j - 1]) throw std::invalid_argument("YoungDiagram: parts must weakly decrease");
    }
}

std::string YoungDiagram::str() const { return join(parts_); }

OccupationState config_state(const Config& c) {
    std::uint32_t bits = c.role() == ConfigRole::particles ? 0u : OccupationState::mask(c.sites());
    for (int x : c.positions()) {
        const std::uint32_t bit = 1u << (x - 1);
        bits = c.role() == ConfigRole::particles ? (bits | bit) : (bits & ~bit);
    }
    return {c.sites(), bits};
}

YoungDiagram config_to_partition(const Config& c) {
    const int n = c.size();
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) parts[static_cast<std::size_t>(j - 1)] = c[n - j + 1] - n + j - 1;
    return YoungDiagram(std::move(parts));
}

Config partition_to_config(const YoungDiagram& lambda, int sites, ConfigRole role) {
    const int n = lambda.size();
    if (n > sites || lambda.largest() > sites - n) {
        throw std::invalid_argument("partition_to_config: lambda_1 = " + std::to_string(lambda.largest()) +
                                    " exceeds M - N = " + std::to_string(sites - n));
    }
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) positions[static_cast<std::size_t>(k - 1)] = lambda[n - k + 1] + k;
    return Config(sites, std::move(positions), role);
}

std::vector<Config> all_configs(int sites, int count, ConfigRole role) {
    std::vector<Config> out;
    if (count < 0 || count > sites) return out;
    std::vector<int> cur;
    enumerate(sites, count, 1, cur, role, out);
    return out;
}

Config particles_of(const OccupationState& s) {
    std::vector<int> pos;
    for (int j = 1; j <= s.sites(); ++j)
        if (s.occupied(j)) pos.push_back(j);
    return Config(s.sites(), std::move(pos), ConfigRole::particles);
}

Config holes_of(const OccupationState& s) {
    std::vector<int> pos;
    for (int j = 1; j <= s.sites(); ++j)
        if (!s.occupied(j)) pos.push_back(j);
    return Config(s.sites(), std::move(pos), ConfigRole::holes);
}

}  // namespace symice
