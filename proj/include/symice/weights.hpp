// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symice/scalar.hpp"

namespace symice {

/// Which L-operator: the first one builds A/B, the second one builds
/// Atilde/Btilde.
enum class LOperatorKind { first, second };

/// plain: the homogeneous free-fermion weights.
/// primed: spectral parameter rescaled z -> z/t with the normalization
///         L' = L(z/t)/t, Ltilde' = Ltilde(z/t), K' = K(z/t)/t.
/// inhom: site-dependent shifts alpha_j and boundary shift alpha_0.
enum class Variant { plain, primed, inhom };

const char* to_string(LOperatorKind kind);
const char* to_string(Variant variant);

template <ExactScalar S>
struct OperatorParams {
    S z;
    S t;
    /// (alpha_0, alpha_1, ..., alpha_M); empty means the homogeneous model.
    std::vector<S> alphas;

    const S& alpha(int index) const {
        if (index < 0 || static_cast<std::size_t>(index) >= alphas.size()) {
            throw std::invalid_argument("OperatorParams: alpha_" + std::to_string(index) + " is missing");
        }
        return alphas[static_cast<std::size_t>(index)];
    }

    /// z != 0 always; t != 0 for primed weights.
    void validate(Variant variant) const {
        if (z.is_zero()) throw std::invalid_argument("OperatorParams: z must be nonzero");
        if (variant == Variant::primed && t.is_zero()) {
            throw std::invalid_argument("OperatorParams: primed weights need t != 0");
        }
    }
};

namespace detail {

inline int check_bit(int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("vertex index must be 0 or 1, got " + std::to_string(b));
    return b;
}

/// Packs (in_a, in_b, out_a, out_b) into 0..15.
inline int vertex_code(int a_in, int s_in, int a_out, int s_out) {
    return (check_bit(a_in) << 3) | (check_bit(s_in) << 2) | (check_bit(a_out) << 1) | check_bit(s_out);
}

// Nonzero codes of a charge-conserving vertex.
inline constexpr int k0000 = 0b0000;
inline constexpr int k0101 = 0b0101;
inline constexpr int k1001 = 0b1001;
inline constexpr int k0110 = 0b0110;
inline constexpr int k1010 = 0b1010;
inline constexpr int k1111 = 0b1111;

template <ExactScalar S>
S first_plain(int code, const S& z, const S& t, const S& alpha) {
    const S one(Rational(1));
    switch (code) {
        case k0000: return one;
        case k0101: return t;
        case k1001: return one;
        case k0110: return (t + one) * z.inverse();
        case k1010: return z.inverse() + alpha;
        case k1111: return z.inverse() - t * alpha;
        default: return S();
    }
}

template <ExactScalar S>
S second_plain(int code, const S& z, const S& t, const S& alpha) {
    const S one(Rational(1));
    switch (code) {
        case k0000: return z + alpha;
        case k0101: return t * z - alpha;
        case k1001: return one;
        case k0110: return (t + one) * z;
        case k1010: return one;
        case k1111: return one;
        default: return S();
    }
}

}  // namespace detail

/// Vertex weight <a_out, s_out| L |a_in, s_in> of the first or second
/// L-operator. `site` (1-based) selects alpha_site for the inhomogeneous
/// variant. Charge-violating index tuples give 0.
template <ExactScalar S>
S l_weight(LOperatorKind kind, Variant variant, int a_in, int s_in, int a_out, int s_out,
           const OperatorParams<S>& params, int site = 0) {
    const int code = detail::vertex_code(a_in, s_in, a_out, s_out);
    params.validate(variant);
    const S zero;
    switch (variant) {
        case Variant::plain:
            return kind == LOperatorKind::first ? detail::first_plain(code, params.z, params.t, zero)
                                                : detail::second_plain(code, params.z, params.t, zero);
        case Variant::primed: {
            const S t_inv = params.t.inverse();
            const S z_scaled = params.z * t_inv;
            return kind == LOperatorKind::first ? t_inv * detail::first_plain(code, z_scaled, params.t, zero)
                                                : detail::second_plain(code, z_scaled, params.t, zero);
        }
        case Variant::inhom: {
            if (site < 1) throw std::invalid_argument("l_weight: inhomogeneous weights need a site index >= 1");
            const S& alpha = params.alpha(site);
            return kind == LOperatorKind::first ? detail::first_plain(code, params.z, params.t, alpha)
                                                : detail::second_plain(code, params.z, params.t, alpha);
        }
    }
    return zero;
}

/// Diagonal boundary weight <a_out| K |a_in>.
template <ExactScalar S>
S k_weight(Variant variant, int a_in, int a_out, const OperatorParams<S>& params) {
    detail::check_bit(a_in);
    detail::check_bit(a_out);
    params.validate(variant);
    if (a_in != a_out) return S();
    switch (variant) {
        case Variant::plain:
            return a_in == 0 ? params.t * params.z : params.z.inverse();
        case Variant::primed: {
            const S t_inv = params.t.inverse();
            const S z_scaled = params.z * t_inv;
            return t_inv * (a_in == 0 ? params.t * z_scaled : z_scaled.inverse());
        }
        case Variant::inhom:
            return a_in == 0 ? params.t * params.z - params.alpha(0) : params.z.inverse() + params.alpha(0);
    }
    return S();
}

/// R-matrix weight <a_out, b_out| R(z, t) |a_in, b_in> on two auxiliary
/// spaces.
template <ExactScalar S>
S r_weight(int a_in, int b_in, int a_out, int b_out, const S& z, const S& t) {
    const int code = detail::vertex_code(a_in, b_in, a_out, b_out);
    if (z.is_zero()) throw std::invalid_argument("r_weight: z must be nonzero");
    const S one(Rational(1));
    const S z_inv = z.inverse();
    switch (code) {
        case detail::k0000: return one + t * z_inv;
        case detail::k0101: return t * (one - z_inv);
        case detail::k1001: return t + one;
        case detail::k0110: return (t + one) * z_inv;
        case detail::k1010: return z_inv - one;
        case detail::k1111: return z_inv + t;
        default: return S();
    }
}

/// The weight functions a lattice computation draws from. Defaults to the
/// free-fermion model; tests substitute altered tables as negative controls.
template <ExactScalar S>
struct WeightTable {
    using LFunction = std::function<S(LOperatorKind, Variant, int, int, int, int, const OperatorParams<S>&, int)>;
    using KFunction = std::function<S(Variant, int, int, const OperatorParams<S>&)>;

    LFunction l = [](LOperatorKind kind, Variant variant, int a_in, int s_in, int a_out, int s_out,
                     const OperatorParams<S>& params, int site) {
        return l_weight<S>(kind, variant, a_in, s_in, a_out, s_out, params, site);
    };
    KFunction k = [](Variant variant, int a_in, int a_out, const OperatorParams<S>& params) {
        return k_weight<S>(variant, a_in, a_out, params);
    };

    static const WeightTable& standard() {
        static const WeightTable table{};
        return table;
    }
};

/// The 16 weights of one L-operator at one site, evaluated once.
template <ExactScalar S>
class SiteWeights {
public:
    SiteWeights(const WeightTable<S>& table, LOperatorKind kind, Variant variant, const OperatorParams<S>& params,
                int site) {
        for (int code = 0; code < 16; ++code) {
            w_[static_cast<std::size_t>(code)] =
                table.l(kind, variant, (code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1, code & 1, params, site);
        }
    }

    const S& operator()(int a_in, int s_in, int a_out, int s_out) const {
        return w_[static_cast<std::size_t>((a_in << 3) | (s_in << 2) | (a_out << 1) | s_out)];
    }

private:
    std::array<S, 16> w_{};
};

}  // namespace symice
