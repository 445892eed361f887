// Copyright 2026 The symice Authors
// SPDX-License-Identifier: Apache-2.0

#include "symice/operators.hpp"
#include "symice/weights.hpp"

namespace symice {

const char* to_string(LOperatorKind kind) { return kind == LOperatorKind::first ? "first" : "second"; }

const char* to_string(Variant variant) {
    switch (variant) {
        case Variant::plain: return "plain";
        case Variant::primed: return "primed";
        case Variant::inhom: return "inhom";
    }
    return "?";
}

const char* to_string(RowKind kind) {
    switch (kind) {
        case RowKind::A: return "A";
        case RowKind::B: return "B";
        case RowKind::Atilde: return "Atilde";
        case RowKind::Btilde: return "Btilde";
        case RowKind::DoubleRowB: return "DoubleRowB";
    }
    return "?";
}

}  // namespace symice
