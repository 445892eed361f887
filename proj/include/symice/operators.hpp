// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symice/state.hpp"
#include "symice/weights.hpp"

namespace symice {

/// Row operators read off the two monodromy matrices, plus the reflecting
/// double-row operator built from them and the K-matrix.
enum class RowKind { A, B, Atilde, Btilde, DoubleRowB };

const char* to_string(RowKind kind);

/// Particles added to the ket by one application.
constexpr int charge(RowKind kind) { return (kind == RowKind::A || kind == RowKind::Atilde) ? 0 : 1; }

template <ExactScalar S>
struct OperatorSpec {
    RowKind kind;
    Variant variant;
    OperatorParams<S> params;

    void validate(int sites) const {
        params.validate(variant);
        if (variant == Variant::inhom && params.alphas.size() != static_cast<std::size_t>(sites) + 1) {
            throw std::invalid_argument("OperatorSpec: inhomogeneous operator on " + std::to_string(sites) +
                                        " sites needs " + std::to_string(sites + 1) + " alphas, got " +
                                        std::to_string(params.alphas.size()));
        }
    }
};

namespace detail {

struct RowBoundary {
    LOperatorKind op;
    int aux_in;      // auxiliary value on the ket side
    int aux_out;     // auxiliary value on the bra side
    bool ascending;  // sweep order of the sites, in the order operators act on the ket
};

// T = L_M ... L_1: L_1 acts first, so the auxiliary line enters at site 1.
// Ttilde = Ltilde_1 ... Ltilde_M: Ltilde_M acts first, entering at site M.
inline RowBoundary row_boundary(RowKind kind) {
    switch (kind) {
        case RowKind::A: return {LOperatorKind::first, 0, 0, true};
        case RowKind::B: return {LOperatorKind::first, 1, 0, true};
        case RowKind::Atilde: return {LOperatorKind::second, 1, 1, false};
        case RowKind::Btilde: return {LOperatorKind::second, 1, 0, false};
        case RowKind::DoubleRowB: break;
    }
    throw std::invalid_argument("row_boundary: the double-row operator is not a single row");
}

}  // namespace detail

/// Applies A, B, Atilde or Btilde to a ket by contracting the auxiliary line
/// site by site. Each basis state is swept independently; partial results
/// are keyed by (output bits so far, current auxiliary value).
template <ExactScalar S>
StateVector<S> apply_row_operator(const OperatorSpec<S>& spec, const StateVector<S>& v,
                                  const WeightTable<S>& table = WeightTable<S>::standard()) {
    const int m = v.sites();
    spec.validate(m);
    const auto boundary = detail::row_boundary(spec.kind);

    std::vector<SiteWeights<S>> weights;
    weights.reserve(static_cast<std::size_t>(m));
    for (int site = 1; site <= m; ++site) weights.emplace_back(table, boundary.op, spec.variant, spec.params, site);

    StateVector<S> out(m);
    using Key = std::pair<std::uint32_t, int>;
    for (const auto& [bits, amp] : v) {
        std::map<Key, S> frontier{{Key{0u, boundary.aux_in}, amp}};
        for (int step = 0; step < m; ++step) {
            const int j = boundary.ascending ? step : m - 1 - step;
            const int s_in = static_cast<int>((bits >> j) & 1u);
            const auto& w = weights[static_cast<std::size_t>(j)];
            std::map<Key, S> next;
            for (const auto& [key, value] : frontier) {
                const auto& [out_bits, a_in] = key;
                for (int a_out = 0; a_out <= 1; ++a_out) {
                    const int s_out = a_in + s_in - a_out;
                    if (s_out < 0 || s_out > 1) continue;
                    const S& vertex = w(a_in, s_in, a_out, s_out);
                    if (vertex.is_zero()) continue;
                    const Key k{out_bits | (static_cast<std::uint32_t>(s_out) << j), a_out};
                    auto [it, inserted] = next.try_emplace(k, value * vertex);
                    if (!inserted) it->second = it->second + value * vertex;
                }
            }
            frontier = std::move(next);
        }
        for (const auto& [key, value] : frontier) {
            if (key.second == boundary.aux_out) out.add_bits(key.first, value);
        }
    }
    return out;
}

/// Double-row operator: K_00 * Btilde A + K_11 * Atilde B, with the K
/// weights of the same variant.
template <ExactScalar S>
StateVector<S> apply_double_row_b(const OperatorSpec<S>& spec, const StateVector<S>& v,
                                  const WeightTable<S>& table = WeightTable<S>::standard()) {
    if (spec.kind != RowKind::DoubleRowB) {
        throw std::invalid_argument("apply_double_row_b: spec is not a double-row operator");
    }
    spec.validate(v.sites());
    auto row = [&](RowKind kind) { return OperatorSpec<S>{kind, spec.variant, spec.params}; };
    const S k_hole = table.k(spec.variant, 0, 0, spec.params);
    const S k_particle = table.k(spec.variant, 1, 1, spec.params);

    auto first = apply_row_operator(row(RowKind::Btilde), apply_row_operator(row(RowKind::A), v, table), table);
    auto second = apply_row_operator(row(RowKind::Atilde), apply_row_operator(row(RowKind::B), v, table), table);
    return k_hole * first + k_particle * second;
}

template <ExactScalar S>
StateVector<S> apply(const OperatorSpec<S>& spec, const StateVector<S>& v,
                     const WeightTable<S>& table = WeightTable<S>::standard()) {
    return spec.kind == RowKind::DoubleRowB ? apply_double_row_b(spec, v, table) : apply_row_operator(spec, v, table);
}

/// <bra| O |ket>.
template <ExactScalar S>
S matrix_element(const OccupationState& bra, const OperatorSpec<S>& spec, const OccupationState& ket,
                 const WeightTable<S>& table = WeightTable<S>::standard()) {
    if (bra.sites() != ket.sites()) throw std::invalid_argument("matrix_element: bra/ket site count mismatch");
    return apply(spec, StateVector<S>::unit(ket), table).amplitude(bra);
}

}  // namespace symice
