// Copyright 2026 The slidekit authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SLIDEKIT_SEARCH_HPP
#define SLIDEKIT_SEARCH_HPP

#include <optional>

#include "slidekit/model.hpp"

namespace slidekit {

enum class VarOrder { Lexicographic, MinDomain };
enum class ValOrder { Ascending, Descending };
enum class SolveMode { First, CountAll };
enum class SolveStatus { Sat, Unsat, Limit };

struct Limits {
    long long node_limit = -1;   // < 0 means unlimited
    long long time_limit_ms = -1;
};

struct SearchStats {
    long long nodes = 0;
    long long failures = 0;
    long long propagations = 0;
    long long values_pruned = 0;
    long long wall_ms = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<Assignment> solution; // first solution found, if any
    long long solution_count = 0;
    SearchStats stats;
};

// Drains the propagation queue to a fixpoint. False on failure.
bool fixpoint(Model& m);

// Depth-first binary branching (assign value, on failure remove it) with a
// propagation fixpoint after every decision. Deterministic given the orders;
// min-domain ties break toward the lowest variable id. Limits produce
// SolveStatus::Limit, never a wrong answer.
SolveResult solve(Model& m, VarOrder var_order = VarOrder::Lexicographic,
                  ValOrder val_order = ValOrder::Ascending, SolveMode mode = SolveMode::First,
                  Limits limits = {});

} // namespace slidekit

#endif
