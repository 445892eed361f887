// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/closed_forms.hpp"

#include <algorithm>

namespace symice {

namespace {

// 1-based access with padding: index 0 and index n+1 return the given pads.
struct Padded {
    const std::vector<int>& v;
    int low;
    int high;
    int operator()(int j) const {
        if (j <= 0) return low;
        if (j > static_cast<int>(v.size())) return high;
        return v[static_cast<std::size_t>(j - 1)];
    }
};

int pos(int x) { return std::max(x, 0); }

void require_same_sites(const Config& a, const Config& b, const char* what) {
    if (a.sites() != b.sites()) throw std::invalid_argument(std::string(what) + ": site count mismatch");
}

bool weakly_increasing(const std::vector<int>& seq) { return std::is_sorted(seq.begin(), seq.end()); }

// x_1 <= y_1 <= x_2 <= ... <= x_N <= y_N
bool interlace_equal(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> seq;
    for (std::size_t j = 0; j < x.size(); ++j) {
        seq.push_back(x[j]);
        seq.push_back(y[j]);
    }
    return weakly_increasing(seq);
}

// y_1 <= x_1 <= y_2 <= ... <= x_N <= y_{N+1}
bool interlace_plus_one(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> seq{y.front()};
    for (std::size_t j = 0; j < x.size(); ++j) {
        seq.push_back(x[j]);
        seq.push_back(y[j + 1]);
    }
    return weakly_increasing(seq);
}

RowMonomial monomial_a(int m, const std::vector<int>& xv, const std::vector<int>& yv) {
    const int n = static_cast<int>(xv.size());
    const Padded x{xv, 0, m + 1};
    const Padded y{yv, 0, m + 1};
    RowMonomial r;
    for (int j = 1; j <= n; ++j) {
        if (x(j) != y(j) && x(j) != y(j - 1)) ++r.t_plus_one;
        r.z_power += x(j) - y(j);
    }
    for (int j = 0; j <= n; ++j) r.t_power += pos(x(j + 1) - y(j) - 1);
    return r;
}

RowMonomial monomial_atilde(const std::vector<int>& xv, const std::vector<int>& yv) {
    const int n = static_cast<int>(xv.size());
    const Padded x{xv, 0, 0};
    const Padded y{yv, 0, 0};
    RowMonomial r;
    for (int j = 1; j <= n; ++j) {
        if (x(j) != y(j) && x(j) != y(j - 1)) ++r.t_plus_one;
        r.t_power += pos(y(j) - x(j) - 1);
        r.z_power += y(j) - x(j);
    }
    return r;
}

RowMonomial monomial_b(int m, const std::vector<int>& xv, const std::vector<int>& yv) {
    const int n = static_cast<int>(xv.size());
    const Padded x{xv, 0, m + 1};
    const Padded y{yv, 0, m + 1};
    RowMonomial r;
    for (int j = 1; j <= n; ++j)
        if (x(j) != y(j) && x(j) != y(j + 1)) ++r.t_plus_one;
    for (int j = 1; j <= n + 1; ++j) {
        r.t_power += pos(x(j) - y(j) - 1);
        r.z_power += x(j - 1) - y(j);
    }
    r.z_power += 1;
    return r;
}

RowMonomial monomial_btilde(const std::vector<int>& xv, const std::vector<int>& yv) {
    const int n = static_cast<int>(xv.size());
    const Padded x{xv, 0, 0};
    const Padded y{yv, 0, 0};
    RowMonomial r;
    for (int j = 1; j <= n; ++j)
        if (x(j) != y(j) && x(j) != y(j + 1)) ++r.t_plus_one;
    for (int j = 1; j <= n + 1; ++j) {
        r.t_power += pos(y(j) - x(j - 1) - 1);
        r.z_power += y(j) - x(j - 1);
    }
    r.z_power -= 1;
    return r;
}

// Every strictly increasing y with lo[j] <= y_j <= hi[j].
void windows(const std::vector<int>& lo, const std::vector<int>& hi, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
    const std::size_t j = cur.size();
    if (j == lo.size()) {
        out.push_back(cur);
        return;
    }
    const int start = std::max(lo[j], cur.empty() ? lo[j] : cur.back() + 1);
    for (int y = start; y <= hi[j]; ++y) {
        cur.push_back(y);
        windows(lo, hi, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> windows(const std::vector<int>& lo, const std::vector<int>& hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    windows(lo, hi, cur, out);
    return out;
}

}  // namespace

std::string to_string(const RowMonomial& m) {
    return "(t+1)^" + std::to_string(m.t_plus_one) + " t^" + std::to_string(m.t_power) + " z^" +
           std::to_string(m.z_power);
}

std::optional<RowMonomial> row_monomial(RowKind kind, const Config& xbar, const Config& ybar) {
    require_same_sites(xbar, ybar, "row_monomial");
    const auto& x = xbar.positions();
    const auto& y = ybar.positions();
    const int m = xbar.sites();
    switch (kind) {
        case RowKind::A:
        case RowKind::Atilde:
            if (x.size() != y.size()) throw std::invalid_argument("row_monomial: A-type elements need equal hole counts");
            if (!interlace_equal(x, y)) return std::nullopt;
            return kind == RowKind::A ? monomial_a(m, x, y) : monomial_atilde(x, y);
        case RowKind::B:
        case RowKind::Btilde:
            if (y.size() != x.size() + 1) {
                throw std::invalid_argument("row_monomial: B-type elements need one more ket hole than bra holes");
            }
            if (!interlace_plus_one(x, y)) return std::nullopt;
            return kind == RowKind::B ? monomial_b(m, x, y) : monomial_btilde(x, y);
        case RowKind::DoubleRowB: break;
    }
    throw std::invalid_argument("row_monomial: the double-row operator has no single-monomial form");
}

std::vector<RowMonomial> alpha_terms(const Config& xN, const Config& xN1) {
    require_same_sites(xN, xN1, "alpha_terms");
    const int m = xN.sites();
    const int n = xN.size();
    const Padded a{xN.positions(), 0, m + 1};
    const Padded b{xN1.positions(), 0, m + 1};

    std::vector<int> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        lo[static_cast<std::size_t>(j - 1)] = std::max(a(j), b(j));
        hi[static_cast<std::size_t>(j - 1)] = std::min(a(j + 1), b(j + 1));
    }

    std::vector<RowMonomial> terms;
    for (const auto& yv : windows(lo, hi)) {
        const Padded y{yv, 0, m + 1};
        RowMonomial r;
        for (int j = 1; j <= n; ++j) {
            if (a(j) != y(j) && a(j) != y(j - 1)) ++r.t_plus_one;
            if (y(j) != b(j) && y(j) != b(j + 1)) ++r.t_plus_one;
            r.t_power += pos(y(j) - a(j) - 1);
            r.z_power += (y(j) - a(j)) + (y(j) - b(j + 1));
        }
        for (int j = 1; j <= n + 1; ++j) r.t_power += pos(y(j) - b(j) - 1);
        r.z_power -= b(1);
        terms.push_back(r);
    }
    return terms;
}

std::vector<RowMonomial> beta_terms(const Config& xN, const Config& xN1) {
    require_same_sites(xN, xN1, "beta_terms");
    const int m = xN.sites();
    const int n = xN.size();
    const Padded a{xN.positions(), 0, m + 1};
    const Padded b{xN1.positions(), 0, m + 1};

    // N+1 intermediate holes, each at least 1.
    std::vector<int> lo(static_cast<std::size_t>(n + 1)), hi(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n + 1; ++j) {
        lo[static_cast<std::size_t>(j - 1)] = std::max({a(j - 1), b(j - 1), 1});
        hi[static_cast<std::size_t>(j - 1)] = std::min(a(j), b(j));
    }

    std::vector<RowMonomial> terms;
    for (const auto& yv : windows(lo, hi)) {
        const Padded y{yv, 0, m + 1};
        RowMonomial r;
        for (int j = 1; j <= n; ++j)
            if (a(j) != y(j) && a(j) != y(j + 1)) ++r.t_plus_one;
        for (int j = 1; j <= n + 1; ++j) {
            if (y(j) != b(j) && y(j) != b(j - 1)) ++r.t_plus_one;
            r.t_power += pos(y(j) - a(j - 1) - 1);
            r.z_power += (y(j) - a(j - 1)) + (y(j) - b(j));
        }
        for (int j = 0; j <= n + 1; ++j) r.t_power += pos(y(j + 1) - b(j) - 1);
        r.t_power += 1;
        terms.push_back(r);
    }
    return terms;
}

Rational five_vertex_me_closed(RowKind kind, const Config& xbar, const Config& ybar, const Rational& z) {
    require_same_sites(xbar, ybar, "five_vertex_me_closed");
    const auto& x = xbar.positions();
    const auto& y = ybar.positions();
    const int k = ybar.size();
    const auto sign = [](int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };

    if (kind == RowKind::A || kind == RowKind::Atilde) {
        if (x.size() != y.size()) throw std::invalid_argument("five_vertex_me_closed: A-type elements need equal hole counts");
        if (x != y) return Rational(0);
        return kind == RowKind::A ? sign(k) : Rational(1);
    }
    if (y.size() != x.size() + 1) {
        throw std::invalid_argument("five_vertex_me_closed: B-type elements need one more ket hole than bra holes");
    }
    // Find j with x = y minus y_j.
    int j = 1;
    while (j <= static_cast<int>(x.size()) && x[static_cast<std::size_t>(j - 1)] == y[static_cast<std::size_t>(j - 1)]) ++j;
    for (int i = j; i <= static_cast<int>(x.size()); ++i) {
        if (x[static_cast<std::size_t>(i - 1)] != y[static_cast<std::size_t>(i)]) return Rational(0);
    }
    const int yj = y[static_cast<std::size_t>(j - 1)];
    switch (kind) {
        case RowKind::B: return sign(k + j - 1) * pow(z, 1 - yj);
        case RowKind::Btilde: return sign(j - 1) * pow(z, yj - 1);
        case RowKind::DoubleRowB: return sign(k + 1 + j - 1) * (pow(z, yj) - pow(z, -yj));
        default: break;
    }
    throw std::invalid_argument("five_vertex_me_closed: unsupported operator kind");
}

A9Check verify_a9(int sites, const std::vector<Rational>& zs, const Rational& t, const YoungDiagram& lambda_bar) {
    const int n = lambda_bar.size();
    if (static_cast<std::size_t>(n) != zs.size()) throw std::invalid_argument("verify_a9: need one variable per part");
    const Config holes = partition_to_config(lambda_bar, sites, ConfigRole::holes);

    std::vector<Rational> tz;
    tz.reserve(zs.size());
    for (const auto& z : zs) tz.push_back(t * z);

    const Rational lhs = pow(t, n * (sites - n)) * deformation_factor(zs, t) * sp(lambda_bar, tz);
    const Rational rhs = dual_wavefunction_sum(sites, zs, t, holes);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace symice
