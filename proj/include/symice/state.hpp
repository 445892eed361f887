// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "symice/scalar.hpp"

namespace symice {

inline constexpr int kMaxSites = 24;

/// Occupation pattern of M sites. Site j (1-based) is bit j-1; a set bit is
/// a particle |1>, a clear bit a hole |0>.
class OccupationState {
public:
    OccupationState(int sites, std::uint32_t bits) : sites_(sites), bits_(bits) {
        if (sites < 1 || sites > kMaxSites) {
            throw std::invalid_argument("OccupationState: site count must be in [1, 24], got " +
                                        std::to_string(sites));
        }
        if ((bits >> sites) != 0) throw std::invalid_argument("OccupationState: bit set beyond site count");
    }

    static OccupationState vacuum(int sites) { return {sites, 0u}; }
    static OccupationState full(int sites) { return {sites, mask(sites)}; }
    static std::uint32_t mask(int sites) { return sites >= 32 ? ~0u : ((1u << sites) - 1u); }

    int sites() const { return sites_; }
    std::uint32_t bits() const { return bits_; }
    int particle_count() const { return std::popcount(bits_); }
    int hole_count() const { return sites_ - particle_count(); }
    bool occupied(int site) const { return ((bits_ >> (site - 1)) & 1u) != 0; }

    /// Site 1 first, '1' for a particle.
    std::string str() const {
        std::string s;
        for (int j = 1; j <= sites_; ++j) s += occupied(j) ? '1' : '0';
        return s;
    }

    friend auto operator<=>(const OccupationState&, const OccupationState&) = default;

private:
    int sites_;
    std::uint32_t bits_;
};

/// Sparse superposition of occupation states with exact amplitudes. Zero
/// amplitudes are dropped on insertion; iteration order is by bit pattern.
template <ExactScalar S>
class StateVector {
public:
    using Amplitudes = std::map<std::uint32_t, S>;

    explicit StateVector(int sites) : sites_(sites) { (void)OccupationState::vacuum(sites); }

    static StateVector unit(const OccupationState& state, S amplitude = S(Rational(1))) {
        StateVector v(state.sites());
        v.add(state, amplitude);
        return v;
    }

    int sites() const { return sites_; }
    std::size_t size() const { return amps_.size(); }
    bool empty() const { return amps_.empty(); }
    const Amplitudes& amplitudes() const { return amps_; }
    auto begin() const { return amps_.begin(); }
    auto end() const { return amps_.end(); }

    S amplitude(const OccupationState& state) const {
        check_sites(state.sites());
        const auto it = amps_.find(state.bits());
        return it == amps_.end() ? S() : it->second;
    }

    void add(const OccupationState& state, const S& amplitude) {
        check_sites(state.sites());
        add_bits(state.bits(), amplitude);
    }

    /// Unchecked insertion by raw bit pattern (caller guarantees range).
    void add_bits(std::uint32_t bits, const S& amplitude) {
        if (amplitude.is_zero()) return;
        auto [it, inserted] = amps_.try_emplace(bits, amplitude);
        if (!inserted) {
            it->second = it->second + amplitude;
            if (it->second.is_zero()) amps_.erase(it);
        }
    }

    StateVector& operator+=(const StateVector& rhs) {
        check_sites(rhs.sites_);
        for (const auto& [bits, amp] : rhs.amps_) add_bits(bits, amp);
        return *this;
    }

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }

    friend StateVector operator*(const S& c, const StateVector& v) {
        StateVector r(v.sites_);
        if (c.is_zero()) return r;
        for (const auto& [bits, amp] : v.amps_) r.add_bits(bits, c * amp);
        return r;
    }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    void check_sites(int sites) const {
        if (sites != sites_) {
            throw std::invalid_argument("StateVector: site count mismatch (" + std::to_string(sites) +
                                        " vs " + std::to_string(sites_) + ")");
        }
    }

    int sites_;
    Amplitudes amps_;
};

}  // namespace symice
