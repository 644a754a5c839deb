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

#ifndef SLIDEKIT_INSTANCE_HPP
#define SLIDEKIT_INSTANCE_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "slidekit/model.hpp"
#include "slidekit/oracle.hpp"

namespace slidekit {

struct BuildOptions {
    bool decompose_all = false;   // post every constraint as its weak decomposition
    long long tuple_cap = 1'000'000;
};

struct ConstraintInfo {
    nlohmann::json desc;                // validated constraint object
    std::vector<VarId> semantic_scope;  // original variables in semantic order
};

struct BuiltInstance {
    Model model;
    std::vector<std::string> var_names;
    std::map<std::string, VarId> by_name;
    std::vector<ConstraintInfo> constraints;
    nlohmann::json expected_gac; // optional "expected_gac_domains" object, or null
};

// Validates the instance document (unknown fields rejected) and builds the
// model, posting each constraint through its encoding. Input errors raise
// std::invalid_argument.
BuiltInstance build_instance(const nlohmann::json& doc, const BuildOptions& opts = {});

// Parses the file (parse errors carry line/column) and builds it.
BuiltInstance load_instance(const std::string& path, const BuildOptions& opts = {});
nlohmann::json parse_instance_file(const std::string& path);

// The direct semantics of one constraint object, over the scope order used
// by ConstraintInfo. Independent of the encodings: evaluates counts, sums,
// automata and orderings directly.
SemanticRelation make_semantics(const nlohmann::json& desc,
                                const std::map<std::string, VarId>& by_name);

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> messages; // one line per check, pass or fail
};

// For every constraint, rebuilt in isolation over its variables' original
// bounds: compares the propagation fixpoint against GAC by definition (all
// variables, auxiliaries included) and the solution projection against the
// direct semantics. Also checks the instance's expected-domain fixture when
// present (computed as the full-model root fixpoint).
VerifyResult verify_instance(const nlohmann::json& doc, long long oracle_cap = kDefaultOracleCap);

} // namespace slidekit

#endif
