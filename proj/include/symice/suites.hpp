// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symice/weights.hpp"

namespace symice {

struct SuiteInfo {
    std::string id;
    std::string description;
    int m_max;
    int n_max;
    int trials;
};

/// Every verification suite with its default caps.
const std::vector<SuiteInfo>& suite_catalog();

/// Looks up a suite by id; throws std::invalid_argument for unknown ids.
const SuiteInfo& suite_info(const std::string& id);

struct SuiteSpec {
    std::string suite;
    int m_max = 0;
    int n_max = 0;
    int trials = 1;
    std::uint64_t seed = 1;
    /// Replaces the numeric weight table (negative controls). Suites that
    /// carry t symbolically keep the standard table.
    const WeightTable<Rational>* weights = nullptr;

    /// Spec with the suite's default caps and the given seed.
    static SuiteSpec defaults(const std::string& suite, std::uint64_t seed = 1);

    /// Throws std::invalid_argument on unknown suite or out-of-range caps.
    void validate() const;
};

struct Failure {
    std::string instance;
    std::string point;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    long instances_checked = 0;
    std::vector<Failure> failures;
    long elapsed_ms = 0;
    /// Informational lines for the human-readable table only.
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

Report run_suite(const SuiteSpec& spec);

/// One JSON object with exactly: suite, seed, instances_checked, failures,
/// elapsed_ms.
std::string report_json(const Report& report);

/// Human-readable summary.
std::string report_table(const Report& report);

}  // namespace symice
