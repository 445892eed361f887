// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "symice/closed_forms.hpp"
#include "symice/config.hpp"
#include "symice/sampling.hpp"
#include "symice/schur.hpp"
#include "symice/wavefunctions.hpp"
#include "symice/yang_baxter.hpp"

namespace symice {

namespace {

using Rationals = std::vector<Rational>;

std::string join_values(const std::string& name, const Rationals& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += name + std::to_string(i + 1) + "=" + vs[i].str();
    }
    return s;
}

std::string describe_point(const Rationals& zs, const Rational& t, const Rationals& alphas = {}) {
    std::string s = zs.size() == 1 ? "z=" + zs.front().str() : join_values("z", zs);
    s += ",t=" + t.str();
    if (!alphas.empty()) {
        s += ",alphas=";
        for (std::size_t i = 0; i < alphas.size(); ++i) s += (i ? ":" : "") + alphas[i].str();
    }
    return s;
}

std::string matrix_text(const Matrix8& m) {
    std::string s = "[";
    for (int i = 0; i < 8; ++i) {
        if (i) s += ";";
        for (int j = 0; j < 8; ++j) s += (j ? "," : "") + m(i, j).str();
    }
    return s + "]";
}

Rationals scaled(const Rationals& zs, const Rational& t) {
    Rationals out;
    out.reserve(zs.size());
    for (const auto& z : zs) out.push_back(t * z);
    return out;
}

Rationals negated(const Rationals& v) {
    Rationals out;
    out.reserve(v.size());
    for (const auto& a : v) out.push_back(-a);
    return out;
}

Rational sign_power(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// Joint (z_1..z_N, t) sample. z's avoid {0, +-1} and each other's
// +-inverses; t avoids {0, -1}; optionally t z's are generic too.
struct JointPoint {
    Rationals zs;
    Rational t;
};

class Runner {
public:
    Runner(const SuiteSpec& spec, Report& report)
        : spec_(spec),
          report_(report),
          rng_(spec.seed),
          table_(spec.weights ? *spec.weights : WeightTable<Rational>::standard()) {}

    const SuiteSpec& spec() const { return spec_; }
    PointSampler& rng() { return rng_; }
    const WeightTable<Rational>& table() const { return table_; }
    Report& report() { return report_; }

    template <class Fn>
    void check(const std::string& instance, const std::string& point, Fn&& both_sides) {
        ++report_.instances_checked;
        try {
            const auto [lhs, rhs] = both_sides();
            if (!(lhs == rhs)) report_.failures.push_back({instance, point, to_text(lhs), to_text(rhs)});
        } catch (const std::exception& e) {
            report_.failures.push_back({instance, point, std::string("error: ") + e.what(), "-"});
        }
    }

    void fail(const std::string& instance, const std::string& point, const std::string& lhs, const std::string& rhs) {
        report_.failures.push_back({instance, point, lhs, rhs});
    }

    JointPoint joint(int n, bool scaled_generic, bool allow_t_minus_one = false) {
        SampleConstraints zc = spectral_constraints();
        Rationals t_excluded{Rational(0)};
        if (!allow_t_minus_one) t_excluded.push_back(Rational(-1));
        for (int attempt = 0; attempt < PointSampler::kMaxRejections; ++attempt) {
            JointPoint p{rng_.sample(n, zc), rng_.sample_one(t_excluded)};
            if (scaled_generic && !generic(scaled(p.zs, p.t))) continue;
            return p;
        }
        throw std::runtime_error("joint sample: too many rejections");
    }

    Rationals alphas(int sites) { return rng_.sample(sites + 1, SampleConstraints{}); }

private:
    static bool generic(const Rationals& zs) {
        for (const auto& z : zs)
            if (z.is_zero() || z == Rational(1) || z == Rational(-1)) return false;
        return pairwise_generic(zs);
    }

    const SuiteSpec& spec_;
    Report& report_;
    PointSampler rng_;
    const WeightTable<Rational>& table_;
};

std::string config_label(int m, const Config& c) { return "M=" + std::to_string(m) + " " + c.str(); }

// ---------------------------------------------------------------- ybe

void run_ybe(Runner& run) {
    for (int k = 1; k <= run.spec().trials; ++k) {
        Rationals p;
        for (int attempt = 0;; ++attempt) {
            p = run.rng().sample(3, SampleConstraints{{Rational(0)}, false, {}});
            if (p[0] != p[1]) break;
        }
        const std::string point = "z1=" + p[0].str() + ",z2=" + p[1].str() + ",t=" + p[2].str();
        ++run.report().instances_checked;
        try {
            const auto sides = yang_baxter_sides(p[0], p[1], p[2], run.table());
            if (sides.lhs != sides.rhs) {
                run.fail("triple " + std::to_string(k), point, matrix_text(sides.lhs), matrix_text(sides.rhs));
            }
        } catch (const std::exception& e) {
            run.fail("triple " + std::to_string(k), point, std::string("error: ") + e.what(), "-");
        }
    }
}

// ---------------------------------------------------------------- thm-3-2 / thm-5-2

void run_wavefunction_identity(Runner& run, bool factorial) {
    const auto& s = run.spec();
    for (int m = 1; m <= s.m_max; ++m) {
        for (int n = 1; n <= std::min(s.n_max, m); ++n) {
            const auto configs = all_configs(m, n, ConfigRole::particles);
            for (int trial = 1; trial <= s.trials; ++trial) {
                const JointPoint p = run.joint(n, false);
                const Rational d = deformation_factor(p.zs, p.t);
                const Rationals alphas = factorial ? run.alphas(m) : Rationals{};
                const Rationals zero_alphas(static_cast<std::size_t>(m) + 1, Rational(0));

                StateVector<Rational> state(m), zero_state(m);
                std::string error;
                try {
                    if (factorial) {
                        state = n_particle_state(m, p.zs, p.t, Variant::inhom, alphas, run.table());
                        zero_state = n_particle_state(m, p.zs, p.t, Variant::inhom, zero_alphas, run.table());
                    } else {
                        state = n_particle_state(m, p.zs, p.t, Variant::plain, {}, run.table());
                    }
                } catch (const std::exception& e) {
                    error = e.what();
                }

                for (const auto& c : configs) {
                    const YoungDiagram lambda = config_to_partition(c);
                    const std::string label = config_label(m, c) + " trial " + std::to_string(trial);
                    const auto lattice = [&](const StateVector<Rational>& v) {
                        if (!error.empty()) throw std::runtime_error(error);
                        return v.amplitude(config_state(c));
                    };
                    if (!factorial) {
                        run.check(label, describe_point(p.zs, p.t), [&] {
                            return std::pair{lattice(state), d * sp(lambda, p.zs)};
                        });
                        continue;
                    }
                    run.check(label, describe_point(p.zs, p.t, alphas), [&] {
                        return std::pair{lattice(state), d * factorial_sp(lambda, p.zs, FactorialParams(alphas))};
                    });
                    run.check(label + " alphas=0", describe_point(p.zs, p.t), [&] {
                        return std::pair{lattice(zero_state), d * sp(lambda, p.zs)};
                    });
                }
            }
        }
    }
}

// ---------------------------------------------------------------- thm-4-1 / thm-5-3

void run_dual_identity(Runner& run, bool factorial) {
    const auto& s = run.spec();
    for (int m = 1; m <= s.m_max; ++m) {
        for (int n = 1; n <= std::min(s.n_max, m); ++n) {
            const auto configs = all_configs(m, n, ConfigRole::holes);
            for (int trial = 1; trial <= s.trials; ++trial) {
                const JointPoint p = run.joint(n, true);
                const Rational prefactor = pow(p.t, n * (m - n)) * deformation_factor(p.zs, p.t);
                const Rationals tz = scaled(p.zs, p.t);
                const Rationals alphas = factorial ? run.alphas(m) : Rationals{};
                const Rationals zero_alphas(static_cast<std::size_t>(m) + 1, Rational(0));

                for (const auto& c : configs) {
                    const YoungDiagram lambda_bar = config_to_partition(c);
                    const std::string label = config_label(m, c) + " trial " + std::to_string(trial);
                    if (!factorial) {
                        run.check(label, describe_point(p.zs, p.t), [&] {
                            return std::pair{dual_wavefunction(m, p.zs, p.t, c, Variant::plain, {}, run.table()),
                                             prefactor * sp(lambda_bar, tz)};
                        });
                        continue;
                    }
                    run.check(label, describe_point(p.zs, p.t, alphas), [&] {
                        return std::pair{
                            dual_wavefunction(m, p.zs, p.t, c, Variant::inhom, alphas, run.table()),
                            prefactor * factorial_sp(lambda_bar, tz, FactorialParams(negated(alphas)))};
                    });
                    run.check(label + " alphas=0", describe_point(p.zs, p.t), [&] {
                        return std::pair{dual_wavefunction(m, p.zs, p.t, c, Variant::inhom, zero_alphas, run.table()),
                                         prefactor * sp(lambda_bar, tz)};
                    });
                }
            }
        }
    }
}

// ---------------------------------------------------------------- lemma-4-2

void run_lemma_4_2(Runner& run) {
    const auto& s = run.spec();
    const int t_values = std::max(s.trials, 2);
    int max_degree = 0;
    for (int m = 1; m <= s.m_max; ++m) {
        for (int n = 1; n <= std::min(s.n_max, m); ++n) {
            for (const auto& c : all_configs(m, n, ConfigRole::holes)) {
                const std::string label = config_label(m, c);
                const Rationals zs = run.rng().sample(n, spectral_constraints());

                // t^N <1^M| B'(z_1)...B'(z_N) |xbar> with t symbolic.
                std::vector<LaurentT> lz(zs.begin(), zs.end());
                const LaurentT t = LaurentT::t();
                std::string point = join_values("z", zs) + ",t=symbolic";
                ++run.report().instances_checked;
                try {
                    const LaurentT q = ipow(t, n) * dual_wavefunction(m, lz, t, c, Variant::primed);
                    if (!q.is_zero()) {
                        const auto [lo, hi] = exponent_range(q);
                        max_degree = std::max(max_degree, -lo);
                        if (hi > 0) run.fail(label + " polynomial in 1/t", point, q.str(), "max t-exponent <= 0");
                    }
                } catch (const std::exception& e) {
                    run.fail(label + " polynomial in 1/t", point, std::string("error: ") + e.what(), "-");
                }

                // The ratio t^N <...> / D' at several t values.
                Rationals ts;
                while (static_cast<int>(ts.size()) < t_values) {
                    const Rational tv = run.rng().sample_one({Rational(0), Rational(-1)});
                    if (std::find(ts.begin(), ts.end(), tv) != ts.end()) continue;
                    if (deformation_factor(zs, tv, true).is_zero()) continue;
                    ts.push_back(tv);
                }
                const auto ratio = [&](const Rational& tv) {
                    return pow(tv, n) * dual_wavefunction(m, zs, tv, c, Variant::primed, {}, run.table()) /
                           deformation_factor(zs, tv, true);
                };
                for (std::size_t i = 1; i < ts.size(); ++i) {
                    point = join_values("z", zs) + ",t=" + ts[0].str() + "|" + ts[i].str();
                    run.check(label + " t-independent", point, [&] { return std::pair{ratio(ts[0]), ratio(ts[i])}; });
                }
            }
        }
    }
    run.report().notes.push_back("largest degree in 1/t observed: " + std::to_string(max_degree));
}

// ---------------------------------------------------------------- lemma-4-3

void run_lemma_4_3(Runner& run) {
    const auto& s = run.spec();
    const Rational t(-1);
    for (int m = 1; m <= s.m_max; ++m) {
        for (int n = 1; n <= std::min(s.n_max, m); ++n) {
            for (int trial = 1; trial <= s.trials; ++trial) {
                const Rationals zs = run.rng().sample(n, spectral_constraints());
                const Rational sign = sign_power(n * (n - 1) / 2);
                for (const auto& c : all_configs(m, n, ConfigRole::holes)) {
                    run.check(config_label(m, c) + " trial " + std::to_string(trial), describe_point(zs, t), [&] {
                        return std::pair{dual_wavefunction(m, zs, t, c, Variant::primed, {}, run.table()),
                                         sign * sp_numerator(config_to_partition(c), zs)};
                    });
                }
            }
        }
    }
}

// ---------------------------------------------------------------- eq-4-20

void run_eq_4_20(Runner& run) {
    const auto& s = run.spec();
    for (int m = 1; m <= s.m_max; ++m) {
        for (int trial = 1; trial <= s.trials; ++trial) {
            const JointPoint p = run.joint(1, false);
            const Rational& z = p.zs.front();
            const Rational& t = p.t;
            const OperatorParams<Rational> params{z, t, {}};
            const auto spec_of = [&](RowKind k) { return OperatorSpec<Rational>{k, Variant::primed, params}; };
            const OccupationState full = OccupationState::full(m);
            const std::string point = describe_point(p.zs, t);
            const std::string suffix = " trial " + std::to_string(trial);
            const auto hole = [&](int x) { return config_state(Config(m, {x}, ConfigRole::holes)); };

            run.check("M=" + std::to_string(m) + " Atilde' on full" + suffix, point, [&] {
                return std::pair{matrix_element(full, spec_of(RowKind::Atilde), full, run.table()), Rational(1)};
            });
            for (int x = 1; x <= m; ++x) {
                const std::string label = "M=" + std::to_string(m) + " xbar=" + std::to_string(x);
                run.check(label + " double-row B'" + suffix, point, [&] {
                    const Rational lhs = matrix_element(full, spec_of(RowKind::DoubleRowB), hole(x), run.table());
                    const Rational rhs = (Rational(1) + z * z / t) / (t * z) * (pow(z, x) - pow(z, -x)) / (z - z.inverse());
                    return std::pair{lhs, rhs};
                });
                run.check(label + " Btilde'" + suffix, point, [&] {
                    return std::pair{matrix_element(full, spec_of(RowKind::Btilde), hole(x), run.table()), pow(z, x - 1)};
                });
                run.check(label + " B'" + suffix, point, [&] {
                    return std::pair{matrix_element(full, spec_of(RowKind::B), hole(x), run.table()), pow(z, 1 - x) / t};
                });
                run.check(label + " A' diagonal" + suffix, point, [&] {
                    return std::pair{matrix_element(hole(x), spec_of(RowKind::A), hole(x), run.table()), t.inverse()};
                });
                for (int y = 1; y < x; ++y) {
                    run.check(label + " A' from ybar=" + std::to_string(y) + suffix, point, [&] {
                        return std::pair{matrix_element(hole(y), spec_of(RowKind::A), hole(x), run.table()),
                                         (t + Rational(1)) / t * pow(z, y - x)};
                    });
                }
            }
        }
    }
}

// ---------------------------------------------------------------- eq-4-37

void run_eq_4_37(Runner& run) {
    const auto& s = run.spec();
    for (int n = 1; n <= s.n_max; ++n) {
        for (int trial = 1; trial <= s.trials; ++trial) {
            const Rationals zs = run.rng().sample(n, spectral_constraints());
            run.check("N=" + std::to_string(n) + " trial " + std::to_string(trial), join_values("z", zs), [&] {
                const auto w = weyl_denominator(zs);
                return std::pair{w.determinant, w.factored};
            });
        }
    }
}

// ---------------------------------------------------------------- appendix-a

struct WorkedExample {
    RowKind kind;
    int sites;
    std::vector<int> bra;
    std::vector<int> ket;
    RowMonomial expected;
};

const std::vector<WorkedExample>& worked_examples() {
    static const std::vector<WorkedExample> examples{
        {RowKind::A, 15, {3, 5, 8, 11}, {3, 6, 11, 13}, {2, 6, -6}},
        {RowKind::B, 10, {3, 6}, {1, 6, 8}, {1, 3, -5}},
        {RowKind::Atilde, 15, {2, 5, 10, 13}, {2, 8, 10, 15}, {2, 3, 5}},
        {RowKind::Btilde, 10, {5, 8}, {3, 5, 10}, {1, 3, 4}},
    };
    return examples;
}

void run_appendix_a(Runner& run) {
    const auto& s = run.spec();

    // Worked examples: exponents, and the symbolic-t value against the lattice.
    for (const auto& ex : worked_examples()) {
        const Config bra(ex.sites, ex.bra, ConfigRole::holes);
        const Config ket(ex.sites, ex.ket, ConfigRole::holes);
        const std::string label = std::string("worked example ") + to_string(ex.kind) + " " + bra.str() + "|" + ket.str();
        ++run.report().instances_checked;
        const auto mono = row_monomial(ex.kind, bra, ket);
        const std::string got = mono ? to_string(*mono) : "0";
        if (!mono || !(*mono == ex.expected)) run.fail(label + " exponents", "-", got, to_string(ex.expected));

        const Rational z = run.rng().sample_one({Rational(0)});
        const LaurentT lz(z);
        const LaurentT t = LaurentT::t();
        run.check(label + " lattice", "z=" + z.str() + ",t=symbolic", [&] {
            const OperatorSpec<LaurentT> spec{ex.kind, Variant::plain, OperatorParams<LaurentT>{lz, t, {}}};
            return std::pair{me_closed(ex.kind, bra, ket, lz, t),
                             matrix_element(config_state(bra), spec, config_state(ket))};
        });
    }

    // Single row operators: every bra/ket pair, admissible or not.
    for (int m = 1; m <= s.m_max; ++m) {
        for (int trial = 1; trial <= s.trials; ++trial) {
            const Rationals zt = run.rng().sample(2, SampleConstraints{{Rational(0), Rational(1), Rational(-1)}, false, {}});
            const Rational& z = zt[0];
            const Rational& t = zt[1];
            const std::string point = "z=" + z.str() + ",t=" + t.str();
            for (const RowKind kind : {RowKind::A, RowKind::B, RowKind::Atilde, RowKind::Btilde}) {
                const OperatorSpec<Rational> spec{kind, Variant::plain, OperatorParams<Rational>{z, t, {}}};
                for (int nb = 0; nb <= m; ++nb) {
                    const int nk = nb + charge(kind);
                    if (nk > m) continue;
                    const auto bras = all_configs(m, nb, ConfigRole::holes);
                    for (const auto& ket : all_configs(m, nk, ConfigRole::holes)) {
                        StateVector<Rational> image(m);
                        std::string error;
                        try {
                            image = apply(spec, StateVector<Rational>::unit(config_state(ket)), run.table());
                        } catch (const std::exception& e) {
                            error = e.what();
                        }
                        for (const auto& bra : bras) {
                            const std::string label = std::string(to_string(kind)) + " M=" + std::to_string(m) + " " +
                                                      bra.str() + "|" + ket.str() + " trial " + std::to_string(trial);
                            run.check(label, point, [&] {
                                if (!error.empty()) throw std::runtime_error(error);
                                return std::pair{me_closed(kind, bra, ket, z, t), image.amplitude(config_state(bra))};
                            });
                        }
                    }
                }
            }

            // Double-row elements.
            const OperatorSpec<Rational> dspec{RowKind::DoubleRowB, Variant::plain, OperatorParams<Rational>{z, t, {}}};
            for (int nb = 0; nb <= std::min(s.n_max, m - 1); ++nb) {
                const auto bras = all_configs(m, nb, ConfigRole::holes);
                for (const auto& ket : all_configs(m, nb + 1, ConfigRole::holes)) {
                    StateVector<Rational> image(m);
                    std::string error;
                    try {
                        image = apply(dspec, StateVector<Rational>::unit(config_state(ket)), run.table());
                    } catch (const std::exception& e) {
                        error = e.what();
                    }
                    for (const auto& bra : bras) {
                        const std::string label = "DoubleRowB M=" + std::to_string(m) + " " + bra.str() + "|" +
                                                  ket.str() + " trial " + std::to_string(trial);
                        run.check(label, point, [&] {
                            if (!error.empty()) throw std::runtime_error(error);
                            return std::pair{double_row_me_closed(bra, ket, z, t), image.amplitude(config_state(bra))};
                        });
                    }
                }
            }
        }

        // Interlacing-chain dual wavefunction.
        for (int n = 1; n <= std::min(s.n_max, m); ++n) {
            for (int trial = 1; trial <= s.trials; ++trial) {
                const JointPoint p = run.joint(n, false);
                for (const auto& c : all_configs(m, n, ConfigRole::holes)) {
                    run.check("chain sum " + config_label(m, c) + " trial " + std::to_string(trial),
                              describe_point(p.zs, p.t), [&] {
                                  return std::pair{dual_wavefunction_sum(m, p.zs, p.t, c),
                                                   dual_wavefunction(m, p.zs, p.t, c, Variant::plain, {}, run.table())};
                              });
                }
            }
        }
    }
}

// ---------------------------------------------------------------- cor-a-9

void run_cor_a_9(Runner& run) {
    const auto& s = run.spec();
    for (int m = 1; m <= s.m_max; ++m) {
        for (int n = 1; n <= std::min(s.n_max, m); ++n) {
            for (const auto& c : all_configs(m, n, ConfigRole::holes)) {
                const YoungDiagram lambda_bar = config_to_partition(c);
                for (int trial = 1; trial <= s.trials; ++trial) {
                    const JointPoint p = run.joint(n, true);
                    run.check("M=" + std::to_string(m) + " lambdabar=" + lambda_bar.str() + " trial " +
                                  std::to_string(trial),
                              describe_point(p.zs, p.t), [&] {
                                  const A9Check r = verify_a9(m, p.zs, p.t, lambda_bar);
                                  return std::pair{r.lhs, r.rhs};
                              });
                }
            }
        }
    }
}

// ---------------------------------------------------------------- five-vertex

void run_five_vertex(Runner& run) {
    const auto& s = run.spec();
    const Rational t(-1);
    for (int m = 1; m <= s.m_max; ++m) {
        for (int trial = 1; trial <= s.trials; ++trial) {
            const Rational z = run.rng().sample_one({Rational(0), Rational(1), Rational(-1)});
            const std::string point = "z=" + z.str() + ",t=-1";
            for (const RowKind kind : {RowKind::A, RowKind::B, RowKind::Atilde, RowKind::Btilde, RowKind::DoubleRowB}) {
                const OperatorSpec<Rational> spec{kind, Variant::primed, OperatorParams<Rational>{z, t, {}}};
                for (int nb = 0; nb <= std::min(s.n_max, m); ++nb) {
                    const int nk = nb + charge(kind);
                    if (nk > m) continue;
                    const auto bras = all_configs(m, nb, ConfigRole::holes);
                    for (const auto& ket : all_configs(m, nk, ConfigRole::holes)) {
                        StateVector<Rational> image(m);
                        std::string error;
                        try {
                            image = apply(spec, StateVector<Rational>::unit(config_state(ket)), run.table());
                        } catch (const std::exception& e) {
                            error = e.what();
                        }
                        for (const auto& bra : bras) {
                            const std::string label = std::string(to_string(kind)) + "' M=" + std::to_string(m) + " " +
                                                      bra.str() + "|" + ket.str() + " trial " + std::to_string(trial);
                            run.check(label, point, [&] {
                                if (!error.empty()) throw std::runtime_error(error);
                                return std::pair{five_vertex_me_closed(kind, bra, ket, z),
                                                 image.amplitude(config_state(bra))};
                            });
                        }
                    }
                }
            }
        }
    }
}

using SuiteFn = std::function<void(Runner&)>;

const std::map<std::string, SuiteFn>& suite_functions() {
    static const std::map<std::string, SuiteFn> fns{
        {"ybe", run_ybe},
        {"thm-3-2", [](Runner& r) { run_wavefunction_identity(r, false); }},
        {"thm-4-1", [](Runner& r) { run_dual_identity(r, false); }},
        {"thm-5-2", [](Runner& r) { run_wavefunction_identity(r, true); }},
        {"thm-5-3", [](Runner& r) { run_dual_identity(r, true); }},
        {"lemma-4-2", run_lemma_4_2},
        {"lemma-4-3", run_lemma_4_3},
        {"eq-4-20", run_eq_4_20},
        {"eq-4-37", run_eq_4_37},
        {"appendix-a", run_appendix_a},
        {"cor-a-9", run_cor_a_9},
        {"five-vertex", run_five_vertex},
    };
    return fns;
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog{
        {"ybe", "RLL relation as exact 8x8 matrices at random (z1, z2, t)", 0, 0, 100},
        {"thm-3-2", "wavefunction = D(z, t) sp_lambda(z)", 6, 3, 3},
        {"thm-4-1", "dual wavefunction = t^{N(M-N)} D(z, t) sp_lambdabar(t z)", 6, 3, 3},
        {"thm-5-2", "inhomogeneous wavefunction = D(z, t) factorial sp_lambda(z | alpha)", 6, 3, 3},
        {"thm-5-3", "inhomogeneous dual wavefunction = t^{N(M-N)} D(z, t) factorial sp_lambdabar(t z | -alpha)", 6, 3, 3},
        {"lemma-4-2", "rescaled dual wavefunction is polynomial in 1/t and its ratio to D' is t-independent", 5, 2, 2},
        {"lemma-4-3", "rescaled dual wavefunction at t = -1 is a signed determinant", 6, 3, 3},
        {"eq-4-20", "single rescaled double-row element on the filled bra and its boundary pieces", 8, 1, 3},
        {"eq-4-37", "Weyl denominator determinant = product form", 0, 4, 10},
        {"appendix-a", "closed-form row, double-row and chain-sum elements vs lattice contraction", 6, 3, 2},
        {"cor-a-9", "interlacing-chain sum = t^{N(M-N)} D(z, t) sp_lambdabar(t z)", 5, 2, 3},
        {"five-vertex", "t = -1 closed forms of the rescaled operators vs lattice contraction", 5, 5, 2},
    };
    return catalog;
}

const SuiteInfo& suite_info(const std::string& id) {
    for (const auto& info : suite_catalog())
        if (info.id == id) return info;
    throw std::invalid_argument("unknown suite '" + id + "'");
}

SuiteSpec SuiteSpec::defaults(const std::string& suite, std::uint64_t seed) {
    const auto& info = suite_info(suite);
    SuiteSpec spec;
    spec.suite = suite;
    spec.m_max = info.m_max;
    spec.n_max = info.n_max;
    spec.trials = info.trials;
    spec.seed = seed;
    return spec;
}

void SuiteSpec::validate() const {
    (void)suite_info(suite);
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (m_max < 0 || m_max > kMaxSites) throw std::invalid_argument("m-max must be in [0, 24]");
    if (n_max < 0 || n_max > kMaxSites) throw std::invalid_argument("n-max must be in [0, 24]");
}

Report run_suite(const SuiteSpec& spec) {
    spec.validate();
    Report report;
    report.suite = spec.suite;
    report.seed = spec.seed;
    const auto start = std::chrono::steady_clock::now();
    Runner runner(spec, report);
    try {
        suite_functions().at(spec.suite)(runner);
    } catch (const std::exception& e) {
        report.failures.push_back({"suite aborted", "-", std::string("error: ") + e.what(), "-"});
    }
    report.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

}  // namespace symice
