// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include <json.hpp>

#include "symice/sampling.hpp"
#include "symice/suites.hpp"

namespace symice {

std::string report_json(const Report& report) {
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"instance", f.instance}, {"point", f.point}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    const nlohmann::ordered_json doc{
        {"suite", report.suite},
        {"seed", report.seed},
        {"instances_checked", report.instances_checked},
        {"failures", failures},
        {"elapsed_ms", report.elapsed_ms},
    };
    return doc.dump(2);
}

std::string report_table(const Report& report) {
    std::ostringstream out;
    out << "suite              " << report.suite << "\n"
        << "seed               " << report.seed << " (" << PointSampler::kGenerator << ")\n"
        << "instances checked  " << report.instances_checked << "\n"
        << "failures           " << report.failures.size() << "\n"
        << "elapsed            " << report.elapsed_ms << " ms\n";
    for (const auto& note : report.notes) out << "note               " << note << "\n";
    for (const auto& f : report.failures) {
        out << "\nFAIL " << f.instance << "\n"
            << "  point " << f.point << "\n"
            << "  lhs   " << f.lhs << "\n"
            << "  rhs   " << f.rhs << "\n";
    }
    out << "\n" << (report.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace symice
