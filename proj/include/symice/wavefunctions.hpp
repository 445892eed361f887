// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <vector>

#include "symice/config.hpp"
#include "symice/operators.hpp"

namespace symice {

/// B(z_1) ... B(z_N) |ket> for the double-row operator, z_N acting first.
template <ExactScalar S>
StateVector<S> apply_double_row_chain(const StateVector<S>& ket, const std::vector<S>& zs, const S& t,
                                      Variant variant = Variant::plain, const std::vector<S>& alphas = {},
                                      const WeightTable<S>& table = WeightTable<S>::standard()) {
    StateVector<S> v = ket;
    for (auto it = zs.rbegin(); it != zs.rend(); ++it) {
        const OperatorSpec<S> spec{RowKind::DoubleRowB, variant, OperatorParams<S>{*it, t, alphas}};
        v = apply_double_row_b(spec, v, table);
    }
    return v;
}

/// N-particle state built on the empty lattice; its overlaps with every
/// particle configuration are the wavefunctions.
template <ExactScalar S>
StateVector<S> n_particle_state(int sites, const std::vector<S>& zs, const S& t, Variant variant = Variant::plain,
                                const std::vector<S>& alphas = {},
                                const WeightTable<S>& table = WeightTable<S>::standard()) {
    return apply_double_row_chain(StateVector<S>::unit(OccupationState::vacuum(sites)), zs, t, variant, alphas,
                                  table);
}

/// <x_1 ... x_N| B(z_1) ... B(z_N) |empty>.
template <ExactScalar S>
S wavefunction(int sites, const std::vector<S>& zs, const S& t, const Config& particles,
               Variant variant = Variant::plain, const std::vector<S>& alphas = {},
               const WeightTable<S>& table = WeightTable<S>::standard()) {
    if (particles.role() != ConfigRole::particles) throw std::invalid_argument("wavefunction: expects a particle configuration");
    if (particles.sites() != sites) throw std::invalid_argument("wavefunction: configuration site count mismatch");
    return n_particle_state(sites, zs, t, variant, alphas, table).amplitude(config_state(particles));
}

/// <1^M| B(z_1) ... B(z_N) |xbar_1 ... xbar_N>, computed by applying the
/// chain to the hole configuration and projecting on the filled lattice.
template <ExactScalar S>
S dual_wavefunction(int sites, const std::vector<S>& zs, const S& t, const Config& holes,
                    Variant variant = Variant::plain, const std::vector<S>& alphas = {},
                    const WeightTable<S>& table = WeightTable<S>::standard()) {
    if (holes.role() != ConfigRole::holes) throw std::invalid_argument("dual_wavefunction: expects a hole configuration");
    if (holes.sites() != sites) throw std::invalid_argument("dual_wavefunction: configuration site count mismatch");
    const auto ket = StateVector<S>::unit(config_state(holes));
    return apply_double_row_chain(ket, zs, t, variant, alphas, table).amplitude(OccupationState::full(sites));
}

}  // namespace symice
