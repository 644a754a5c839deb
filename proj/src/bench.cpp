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

#include "slidekit/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <random>
#include <sstream>

namespace slidekit {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string report_header() {
    return "instance,variant,result,nodes,failures,pruned,wall_ms";
}

std::string to_csv(const RunRow& row) {
    std::ostringstream out;
    out << row.instance << ',' << row.variant << ',' << row.result << ',' << row.nodes << ','
        << row.failures << ',' << row.pruned << ',' << row.wall_ms;
    return out.str();
}

RunRow run_instance(const json& doc, const std::string& id, const RunOptions& opts,
                    std::optional<std::string>* solution_out) {
    BuildOptions build;
    build.decompose_all = opts.decomposed;
    build.tuple_cap = opts.tuple_cap;
    BuiltInstance inst = build_instance(doc, build);

    SolveResult r = solve(inst.model, opts.var_order, opts.val_order, opts.mode, opts.limits);

    RunRow row;
    row.instance = id;
    row.variant = opts.decomposed ? "decomposed" : "slide";
    switch (r.status) {
    case SolveStatus::Sat:
        row.result = opts.mode == SolveMode::CountAll
                         ? "count=" + std::to_string(r.solution_count)
                         : "sat";
        break;
    case SolveStatus::Unsat:
        row.result = opts.mode == SolveMode::CountAll ? "count=0" : "unsat";
        break;
    case SolveStatus::Limit:
        row.result = "limit";
        break;
    }
    row.nodes = r.stats.nodes;
    row.failures = r.stats.failures;
    row.pruned = r.stats.values_pruned;
    row.wall_ms = opts.report_times ? r.stats.wall_ms : 0;

    if (solution_out && r.solution && opts.mode == SolveMode::First) {
        std::ostringstream s;
        for (size_t i = 0; i < inst.var_names.size(); ++i) {
            VarId v = inst.by_name.at(inst.var_names[i]);
            s << (i ? " " : "") << inst.var_names[i] << '='
              << (*r.solution)[static_cast<size_t>(v)];
        }
        *solution_out = s.str();
    }
    return row;
}

SolveStatus status_of_row(const RunRow& row) {
    if (row.result == "limit")
        return SolveStatus::Limit;
    if (row.result == "unsat" || row.result == "count=0")
        return SolveStatus::Unsat;
    return SolveStatus::Sat;
}

namespace {

int rand_int(std::mt19937& g, int lo, int hi) {
    return lo + static_cast<int>(g() % static_cast<unsigned>(hi - lo + 1));
}

std::string instance_filename(const GenerateOptions& opts, int idx) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s-s%u-%03d.json", opts.family.c_str(), opts.seed, idx);
    return buf;
}

GeneratedInstance roster_instance(const GenerateOptions& opts, int idx, std::mt19937& g) {
    ordered_json vars = ordered_json::array();
    std::vector<int> pin(static_cast<size_t>(opts.n), -1);
    int pins = std::max(1, opts.n / 4);
    for (int p = 0; p < pins; ++p)
        pin[static_cast<size_t>(rand_int(g, 0, opts.n - 1))] = rand_int(g, 0, opts.d - 1);
    for (int i = 0; i < opts.n; ++i) {
        int lo = pin[static_cast<size_t>(i)] < 0 ? 0 : pin[static_cast<size_t>(i)];
        int hi = pin[static_cast<size_t>(i)] < 0 ? opts.d - 1 : pin[static_cast<size_t>(i)];
        vars.push_back({{"name", "day" + std::to_string(i)}, {"lower", lo}, {"upper", hi}});
    }
    ordered_json names = ordered_json::array();
    for (int i = 0; i < opts.n; ++i)
        names.push_back("day" + std::to_string(i));
    ordered_json doc{
        {"variables", vars},
        {"constraints", ordered_json::array({ordered_json{{"type", "among_seq"},
                                                          {"vars", names},
                                                          {"values", {0}},
                                                          {"q", opts.q},
                                                          {"lower", opts.lower},
                                                          {"upper", opts.upper}}})},
        {"seed", static_cast<int>(opts.seed) + idx}};
    return GeneratedInstance{instance_filename(opts, idx), doc.dump(2) + "\n"};
}

GeneratedInstance table_instance(const GenerateOptions& opts, int idx, std::mt19937& g) {
    ordered_json vars = ordered_json::array();
    ordered_json names = ordered_json::array();
    for (int i = 0; i < opts.n; ++i) {
        vars.push_back(
            {{"name", "x" + std::to_string(i)}, {"lower", 0}, {"upper", opts.d - 1}});
        names.push_back("x" + std::to_string(i));
    }
    ordered_json tuples = ordered_json::array();
    std::vector<int> t(static_cast<size_t>(opts.k), 0);
    const unsigned scale = 1u << 24;
    auto threshold = static_cast<unsigned>(opts.density * scale);
    while (true) {
        if (g() % scale < threshold)
            tuples.push_back(t);
        int p = opts.k - 1;
        while (p >= 0 && ++t[static_cast<size_t>(p)] == opts.d) {
            t[static_cast<size_t>(p)] = 0;
            --p;
        }
        if (p < 0)
            break;
    }
    ordered_json doc{
        {"variables", vars},
        {"constraints",
         ordered_json::array({ordered_json{
             {"type", "slide"},
             {"vars", names},
             {"step", 1},
             {"spec",
              ordered_json{{"kind", "table"}, {"arity", opts.k}, {"tuples", tuples}}}}})},
        {"seed", static_cast<int>(opts.seed) + idx}};
    return GeneratedInstance{instance_filename(opts, idx), doc.dump(2) + "\n"};
}

} // namespace

std::vector<GeneratedInstance> generate_instances(const GenerateOptions& opts) {
    if (opts.family != "amongseq-roster" && opts.family != "random-table")
        throw std::invalid_argument("generate: unknown family \"" + opts.family + "\"");
    if (opts.n < 1 || opts.d < 1 || opts.count < 1)
        throw std::invalid_argument("generate: n, d and count must be positive");
    if (opts.family == "amongseq-roster" && (opts.q < 1 || opts.q > opts.n))
        throw std::invalid_argument("generate: need 1 <= q <= n");
    if (opts.family == "random-table" && (opts.k < 1 || opts.k > opts.n))
        throw std::invalid_argument("generate: need 1 <= k <= n");
    if (opts.density < 0.0 || opts.density > 1.0)
        throw std::invalid_argument("generate: density must be in [0, 1]");

    std::mt19937 g(opts.seed);
    std::vector<GeneratedInstance> out;
    out.reserve(static_cast<size_t>(opts.count));
    for (int idx = 0; idx < opts.count; ++idx)
        out.push_back(opts.family == "amongseq-roster" ? roster_instance(opts, idx, g)
                                                       : table_instance(opts, idx, g));
    return out;
}

std::vector<RunRow> compare_directory(const std::string& dir, const RunOptions& opts) {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json")
            paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());

    std::vector<RunRow> rows;
    for (const auto& p : paths) {
        json doc = parse_instance_file(p.string());
        std::string id = p.stem().string();
        RunOptions slide = opts;
        slide.decomposed = false;
        RunOptions weak = opts;
        weak.decomposed = true;
        rows.push_back(run_instance(doc, id, slide));
        rows.push_back(run_instance(doc, id, weak));
    }
    return rows;
}

} // namespace slidekit
