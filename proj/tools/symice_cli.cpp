// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symice/closed_forms.hpp"
#include "symice/schur.hpp"
#include "symice/suites.hpp"
#include "symice/wavefunctions.hpp"

namespace {

using symice::Config;
using symice::ConfigRole;
using symice::LaurentT;
using symice::Rational;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> parts;
    if (text.empty()) return parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<Rational> rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text)) out.push_back(Rational::parse(s));
    return out;
}

std::vector<int> integers(const std::string& text) {
    std::vector<int> out;
    for (const auto& s : split(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + s + "'");
        }
        if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

struct EvalArgs {
    std::string what;
    int m = 0;
    std::optional<int> n;
    std::string x;
    std::string xbar;
    std::string ybar;
    std::string z;
    std::string t;
    std::string lambda;
    std::string alphas;
    std::string variant = "plain";
    std::string kind;
};

symice::Variant parse_variant(const std::string& s) {
    if (s == "plain") return symice::Variant::plain;
    if (s == "primed") return symice::Variant::primed;
    if (s == "inhom") return symice::Variant::inhom;
    throw UsageError("unknown variant '" + s + "' (plain, primed, inhom)");
}

symice::RowKind parse_kind(const std::string& s) {
    if (s == "A") return symice::RowKind::A;
    if (s == "B") return symice::RowKind::B;
    if (s == "Atilde") return symice::RowKind::Atilde;
    if (s == "Btilde") return symice::RowKind::Btilde;
    throw UsageError("unknown kind '" + s + "' (A, B, Atilde, Btilde)");
}

void require(bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
}

bool symbolic_t(const EvalArgs& a) { return a.t == "t"; }

template <class S>
std::vector<S> lift(const std::vector<Rational>& v) {
    return std::vector<S>(v.begin(), v.end());
}

template <class S>
S t_value(const EvalArgs& a) {
    if constexpr (std::is_same_v<S, LaurentT>) {
        return LaurentT::t();
    } else {
        require(!a.t.empty(), "--t is required");
        return Rational::parse(a.t);
    }
}

template <class S>
std::string eval_lattice(const EvalArgs& a, bool dual) {
    require(a.m >= 1, "--m is required");
    const std::string& positions = dual ? (a.xbar.empty() ? a.x : a.xbar) : a.x;
    const Config c(a.m, integers(positions), dual ? ConfigRole::holes : ConfigRole::particles);
    const auto zs = rationals(a.z);
    require(static_cast<int>(zs.size()) == c.size(), "need one --z value per position");
    if (a.n) require(*a.n == c.size(), "--n does not match the number of positions");
    const auto variant = parse_variant(a.variant);
    const auto alphas = rationals(a.alphas);
    const S t = t_value<S>(a);
    const S value = dual ? symice::dual_wavefunction(a.m, lift<S>(zs), t, c, variant, lift<S>(alphas))
                         : symice::wavefunction(a.m, lift<S>(zs), t, c, variant, lift<S>(alphas));
    return symice::to_text(value);
}

template <class S>
std::string eval_closed(const EvalArgs& a, bool double_row) {
    require(a.m >= 1, "--m is required");
    const Config bra(a.m, integers(a.xbar), ConfigRole::holes);
    const Config ket(a.m, integers(a.ybar), ConfigRole::holes);
    const auto zs = rationals(a.z);
    require(zs.size() == 1, "exactly one --z value is required");
    const S z(zs.front());
    const S t = t_value<S>(a);
    if (double_row) return symice::to_text(symice::double_row_me_closed(bra, ket, z, t));
    return symice::to_text(symice::me_closed(parse_kind(a.kind), bra, ket, z, t));
}

std::string evaluate(const EvalArgs& a) {
    const bool sym = symbolic_t(a);
    if (a.what == "wavefunction" || a.what == "dual") {
        const bool dual = a.what == "dual";
        return sym ? eval_lattice<LaurentT>(a, dual) : eval_lattice<Rational>(a, dual);
    }
    if (a.what == "me-closed" || a.what == "double-row-me") {
        const bool dr = a.what == "double-row-me";
        return sym ? eval_closed<LaurentT>(a, dr) : eval_closed<Rational>(a, dr);
    }
    if (a.what == "sp" || a.what == "factorial-sp") {
        const symice::YoungDiagram lambda(integers(a.lambda));
        const auto zs = rationals(a.z);
        require(static_cast<int>(zs.size()) == lambda.size(), "need one --z value per part of --lambda");
        if (a.what == "sp") return symice::sp(lambda, zs).str();
        require(!a.alphas.empty(), "factorial-sp needs --alphas");
        return symice::factorial_sp(lambda, zs, symice::FactorialParams(rationals(a.alphas))).str();
    }
    throw UsageError("unknown eval target '" + a.what +
                     "' (wavefunction, dual, sp, factorial-sp, me-closed, double-row-me)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for the reflecting free-fermion six-vertex model"};
    app.require_subcommand(1);

    std::string suite;
    symice::SuiteSpec spec;
    std::optional<int> m_max, n_max, trials;
    std::uint64_t seed = 1;
    bool json = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite id (see list-suites)")->required();
    verify->add_option("--m-max", m_max, "Largest number of sites");
    verify->add_option("--n-max", n_max, "Largest number of particles or holes");
    verify->add_option("--trials", trials, "Random points per instance");
    verify->add_option("--seed", seed, "Seed of the random points");
    verify->add_flag("--json", json, "Emit a JSON report");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate one exact value");
    eval->add_option("what", ea.what, "wavefunction, dual, sp, factorial-sp, me-closed, double-row-me")->required();
    eval->add_option("--m", ea.m, "Number of sites");
    eval->add_option("--n", ea.n, "Number of particles or holes");
    eval->add_option("--x", ea.x, "Positions, comma separated");
    eval->add_option("--xbar", ea.xbar, "Bra hole positions, comma separated");
    eval->add_option("--ybar", ea.ybar, "Ket hole positions, comma separated");
    eval->add_option("--z", ea.z, "Spectral parameters, comma separated rationals");
    eval->add_option("--t", ea.t, "Deformation parameter, a rational or 't' for symbolic");
    eval->add_option("--lambda", ea.lambda, "Partition, comma separated");
    eval->add_option("--alphas", ea.alphas, "alpha_0,alpha_1,...,alpha_M");
    eval->add_option("--variant", ea.variant, "plain, primed or inhom");
    eval->add_option("--kind", ea.kind, "A, B, Atilde or Btilde");

    auto* list = app.add_subcommand("list-suites", "List verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*list) {
        for (const auto& info : symice::suite_catalog()) {
            std::cout << info.id << "  (m-max " << info.m_max << ", n-max " << info.n_max << ", trials "
                      << info.trials << ")  " << info.description << "\n";
        }
        return kExitPass;
    }

    if (*verify) {
        try {
            spec = symice::SuiteSpec::defaults(suite, seed);
            if (m_max) spec.m_max = *m_max;
            if (n_max) spec.n_max = *n_max;
            if (trials) spec.trials = *trials;
            spec.validate();
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        const auto report = symice::run_suite(spec);
        std::cout << (json ? symice::report_json(report) + "\n" : symice::report_table(report));
        return report.passed() ? kExitPass : kExitFail;
    }

    try {
        std::cout << evaluate(ea) << "\n";
        return kExitPass;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
