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

#ifndef SLIDEKIT_BENCH_HPP
#define SLIDEKIT_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "slidekit/instance.hpp"
#include "slidekit/search.hpp"

namespace slidekit {

// One CSV row of a run report. Wall time is reported as 0 unless timing is
// requested, keeping default outputs byte-reproducible.
struct RunRow {
    std::string instance;
    std::string variant; // "slide" or "decomposed"
    std::string result;  // sat | unsat | limit | count=N
    long long nodes = 0;
    long long failures = 0;
    long long pruned = 0;
    long long wall_ms = 0;
};

std::string report_header();
std::string to_csv(const RunRow& row);

struct RunOptions {
    VarOrder var_order = VarOrder::Lexicographic;
    ValOrder val_order = ValOrder::Ascending;
    SolveMode mode = SolveMode::First;
    Limits limits;
    bool decomposed = false;
    bool report_times = false;
    long long tuple_cap = 1'000'000;
};

// Builds the model from the document and solves it. When solution_out is
// given and a solution exists, it receives "name=value" pairs in variable
// order (original variables only, auxiliaries skipped).
RunRow run_instance(const nlohmann::json& doc, const std::string& id, const RunOptions& opts,
                    std::optional<std::string>* solution_out = nullptr);

SolveStatus status_of_row(const RunRow& row);

// Deterministic instance generators.
struct GenerateOptions {
    std::string family; // "amongseq-roster" | "random-table"
    int n = 50;
    int d = 3;
    int k = 2;          // random-table arity
    int q = 5;          // amongseq window
    int lower = 2;
    int upper = 2;
    double density = 0.5;
    int count = 10;
    unsigned seed = 1;
};

struct GeneratedInstance {
    std::string filename;
    std::string content;
};

std::vector<GeneratedInstance> generate_instances(const GenerateOptions& opts);

// Solves every *.json instance in the directory twice, as the slide model
// and as the decomposed baseline, with identical orderings; rows are ordered
// by instance id, slide before decomposed.
std::vector<RunRow> compare_directory(const std::string& dir, const RunOptions& opts);

} // namespace slidekit

#endif
