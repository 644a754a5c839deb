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

#ifndef SLIDEKIT_ORACLE_HPP
#define SLIDEKIT_ORACLE_HPP

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "slidekit/model.hpp"

namespace slidekit {

// Ground-truth machinery: exhaustive product enumeration with evaluate-only
// checks. Never calls a propagator.

// Deterministic total membership test over full assignments to a scope.
struct SemanticRelation {
    std::vector<VarId> scope;
    std::function<bool(std::span<const int>)> test; // arguments follow scope order
};

constexpr long long kDefaultOracleCap = 10'000'000;

// Exactly the assignments (indexed by VarId, full model scope) satisfying all
// posted constraints, enumerated in sorted-domain order. Throws
// ResourceLimitError when the domain product exceeds cap.
std::vector<Assignment> enumerate_solutions(const Model& m,
                                            long long cap = kDefaultOracleCap);

// GAC by definition: value v of X survives iff some solution assigns v to X.
// Result is per-variable sorted value sets; all empty when unsatisfiable.
std::vector<std::vector<int>> gac_by_definition(const Model& m,
                                                long long cap = kDefaultOracleCap);

// Restrictions of the given solutions to vars, deduplicated; tuples follow
// the order of vars.
std::set<std::vector<int>> project(std::span<const Assignment> solutions,
                                   std::span<const VarId> vars);

// Tuples over rel.scope (drawn from the current domains of the model) that
// satisfy rel.test — the direct semantic enumeration used to validate
// encodings.
std::set<std::vector<int>> enumerate_relation(const Model& m, const SemanticRelation& rel,
                                              long long cap = kDefaultOracleCap);

} // namespace slidekit

#endif
