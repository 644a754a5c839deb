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

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "slidekit/bench.hpp"
#include "slidekit/instance.hpp"
#include "slidekit/search.hpp"

using namespace slidekit;
using nlohmann::json;

namespace {

json amongseq_doc() {
    return json::parse(R"({
        "variables": [
            {"name": "x1", "lower": 0, "upper": 1},
            {"name": "x2", "lower": 1, "upper": 1},
            {"name": "x3", "lower": 0, "upper": 1}
        ],
        "constraints": [
            {"type": "among_seq", "vars": ["x1", "x2", "x3"],
             "values": [1], "q": 2, "lower": 1, "upper": 1}
        ]
    })");
}

} // namespace

TEST_CASE("build_instance wires variables and constraints") {
    BuiltInstance inst = build_instance(amongseq_doc());
    CHECK(inst.model.num_variables() == 3); // no auxiliaries for among_seq
    CHECK(inst.model.num_constraints() == 1);
    REQUIRE(inst.model.fixpoint());
    CHECK(inst.model.domain(inst.by_name.at("x1")).sorted_values() == std::vector<int>{0});
    CHECK(inst.model.domain(inst.by_name.at("x3")).sorted_values() == std::vector<int>{0});
}

TEST_CASE("unknown fields are rejected") {
    json doc = amongseq_doc();
    doc["comment"] = "not in the schema";
    CHECK_THROWS_AS(build_instance(doc), std::invalid_argument);

    json doc2 = amongseq_doc();
    doc2["variables"][0]["color"] = "red";
    CHECK_THROWS_AS(build_instance(doc2), std::invalid_argument);

    json doc3 = amongseq_doc();
    doc3["constraints"][0]["extra"] = 1;
    CHECK_THROWS_AS(build_instance(doc3), std::invalid_argument);
}

TEST_CASE("schema violations are rejected") {
    json doc = amongseq_doc();
    doc["constraints"][0]["type"] = "no_such_constraint";
    CHECK_THROWS_AS(build_instance(doc), std::invalid_argument);

    json doc2 = amongseq_doc();
    doc2["constraints"][0]["vars"].push_back("missing");
    CHECK_THROWS_AS(build_instance(doc2), std::invalid_argument);

    json doc3 = amongseq_doc();
    doc3["variables"][0]["lower"] = 7; // lower > upper
    CHECK_THROWS_AS(build_instance(doc3), std::invalid_argument);

    json doc4 = amongseq_doc();
    doc4["variables"][1]["name"] = "x1"; // duplicate
    CHECK_THROWS_AS(build_instance(doc4), std::invalid_argument);

    json doc5 = amongseq_doc();
    doc5["constraints"][0]["baseline"] = "strange";
    CHECK_THROWS_AS(build_instance(doc5), std::invalid_argument);
}

TEST_CASE("parse errors carry the line number") {
    std::string path = "/tmp/slidekit_bad_instance.json";
    {
        std::ofstream out(path);
        out << "{\n  \"variables\": [,]\n}\n";
    }
    try {
        parse_instance_file(path);
        FAIL("expected a parse error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
}

TEST_CASE("run_instance reports the solve outcome as csv") {
    RunOptions opts;
    std::optional<std::string> solution;
    RunRow row = run_instance(amongseq_doc(), "roster", opts, &solution);
    CHECK(row.result == "sat");
    CHECK(status_of_row(row) == SolveStatus::Sat);
    REQUIRE(solution.has_value());
    CHECK(*solution == "x1=0 x2=1 x3=0");
    CHECK(to_csv(row).rfind("roster,slide,sat,", 0) == 0);
    CHECK(report_header() == "instance,variant,result,nodes,failures,pruned,wall_ms");
    // Reproducible by default: wall time is reported as zero.
    CHECK(row.wall_ms == 0);
}

TEST_CASE("run_instance count mode embeds the solution count") {
    RunOptions opts;
    opts.mode = SolveMode::CountAll;
    RunRow row = run_instance(amongseq_doc(), "roster", opts);
    CHECK(row.result == "count=1");
    CHECK(status_of_row(row) == SolveStatus::Sat);
}

TEST_CASE("node limit zero maps to a limit row") {
    json doc = amongseq_doc();
    doc["variables"][1] = {{"name", "x2"}, {"lower", 0}, {"upper", 1}};
    RunOptions opts;
    opts.limits.node_limit = 0;
    RunRow row = run_instance(doc, "roster", opts);
    CHECK(row.result == "limit");
    CHECK(status_of_row(row) == SolveStatus::Limit);
}

TEST_CASE("every constraint type builds from json") {
    json doc = json::parse(R"({
        "variables": [
            {"name": "a", "lower": 0, "upper": 1},
            {"name": "b", "lower": 0, "upper": 1},
            {"name": "c", "lower": 0, "upper": 1},
            {"name": "n", "lower": 0, "upper": 3}
        ],
        "constraints": [
            {"type": "slide", "vars": ["a", "b", "c"], "step": 1,
             "spec": {"kind": "sum_in_range", "arity": 2, "lower": 0, "upper": 2}},
            {"type": "among", "vars": ["a", "b"], "values": [1], "count_var": "n"},
            {"type": "sliding_sum", "vars": ["a", "b", "c"], "q": 2, "lower": 0, "upper": 2},
            {"type": "regular", "vars": ["a", "b"],
             "dfa": {"states": 1, "initial": 0, "accepting": [0],
                     "transitions": [[0, 0, 0], [0, 1, 0]]}},
            {"type": "stretch", "vars": ["a", "b", "c"],
             "lengths": [{"value": 1, "min": 1, "max": 3}]},
            {"type": "lex_leq", "xs": ["a"], "ys": ["b"]},
            {"type": "contiguity", "vars": ["a", "b", "c"]},
            {"type": "cardpath", "vars": ["a", "b", "c"], "count_var": "n",
             "spec": {"kind": "table", "arity": 2, "tuples": [[0, 0], [1, 1]]}}
        ]
    })");
    BuiltInstance inst = build_instance(doc);
    CHECK(inst.model.num_constraints() == 8);
    CHECK(inst.constraints.size() == 8);
    CHECK(inst.model.fixpoint());
}

TEST_CASE("verify accepts a correct instance") {
    VerifyResult r = verify_instance(amongseq_doc());
    CHECK(r.ok);
    CHECK(!r.messages.empty());
}

TEST_CASE("verify isolates each constraint of a multi-constraint instance") {
    json doc = json::parse(R"({
        "variables": [
            {"name": "a", "lower": 0, "upper": 1},
            {"name": "b", "lower": 0, "upper": 1},
            {"name": "c", "lower": 0, "upper": 1},
            {"name": "n", "lower": 0, "upper": 2}
        ],
        "constraints": [
            {"type": "among", "vars": ["a", "b", "c"], "values": [1], "count_var": "n"},
            {"type": "contiguity", "vars": ["a", "b", "c"]},
            {"type": "lex_leq", "xs": ["a"], "ys": ["b"]}
        ]
    })");
    VerifyResult r = verify_instance(doc);
    CHECK(r.ok);
    CHECK(r.messages.size() == 6); // two checks per constraint
}

TEST_CASE("verify checks the expected-domain fixture") {
    json doc = amongseq_doc();
    doc["expected_gac_domains"] = {{"x1", {0}}, {"x2", {1}}, {"x3", {0}}};
    CHECK(verify_instance(doc).ok);

    doc["expected_gac_domains"]["x1"] = {0, 1}; // corrupted fixture
    VerifyResult r = verify_instance(doc);
    CHECK_FALSE(r.ok);
}

TEST_CASE("verify covers decomposed-baseline constraints through the chained encoding") {
    json doc = amongseq_doc();
    doc["constraints"][0]["baseline"] = "decomposed";
    CHECK(verify_instance(doc).ok);
}

TEST_CASE("verify propagates oracle resource errors") {
    json doc = amongseq_doc();
    CHECK_THROWS_AS(verify_instance(doc, 2), ResourceLimitError);
}

TEST_CASE("generator output is deterministic") {
    GenerateOptions opts;
    opts.family = "amongseq-roster";
    opts.n = 12;
    opts.count = 3;
    opts.seed = 42;
    auto a = generate_instances(opts);
    auto b = generate_instances(opts);
    REQUIRE(a.size() == 3);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].filename == b[i].filename);
        CHECK(a[i].content == b[i].content);
    }
    opts.seed = 43;
    auto c = generate_instances(opts);
    CHECK(a[0].content != c[0].content);
}

TEST_CASE("zero-density tables are unsatisfiable, full tables prune nothing") {
    GenerateOptions opts;
    opts.family = "random-table";
    opts.n = 5;
    opts.d = 2;
    opts.k = 2;
    opts.count = 2;
    opts.seed = 7;

    opts.density = 0.0;
    for (const auto& gen : generate_instances(opts)) {
        json doc = json::parse(gen.content);
        CHECK(verify_instance(doc).ok);
        RunRow row = run_instance(doc, "g", RunOptions{});
        CHECK(status_of_row(row) == SolveStatus::Unsat);
    }

    opts.density = 1.0;
    for (const auto& gen : generate_instances(opts)) {
        json doc = json::parse(gen.content);
        BuiltInstance inst = build_instance(doc);
        REQUIRE(inst.model.fixpoint());
        for (VarId v = 0; v < inst.model.num_variables(); ++v)
            CHECK(inst.model.domain(v).size() == 2);
    }
}

TEST_CASE("generated roster instances verify and respect pruning dominance") {
    GenerateOptions opts;
    opts.family = "amongseq-roster";
    opts.n = 10;
    opts.d = 3;
    opts.q = 3;
    opts.lower = 1;
    opts.upper = 1;
    opts.count = 8;
    opts.seed = 11;

    std::string dir = "/tmp/slidekit_roster_batch";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const auto& gen : generate_instances(opts)) {
        std::ofstream out(std::filesystem::path(dir) / gen.filename);
        out << gen.content;
        CHECK(verify_instance(json::parse(gen.content)).ok);
    }

    auto rows = compare_directory(dir, RunOptions{});
    REQUIRE(rows.size() == 16);
    for (size_t i = 0; i < rows.size(); i += 2) {
        const RunRow& strong = rows[i];
        const RunRow& weak = rows[i + 1];
        CHECK(strong.instance == weak.instance);
        CHECK(strong.variant == "slide");
        CHECK(weak.variant == "decomposed");
        CHECK(strong.nodes <= weak.nodes);
        CHECK((status_of_row(strong) == SolveStatus::Sat) ==
              (status_of_row(weak) == SolveStatus::Sat));
    }
}
