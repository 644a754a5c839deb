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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "slidekit/bench.hpp"
#include "slidekit/instance.hpp"
#include "slidekit/search.hpp"

namespace {

using namespace slidekit;

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInputError = 3;

long long tuple_cap_from_env() {
    const char* env = std::getenv("SLIDEKIT_TUPLE_CAP");
    if (!env)
        return 1'000'000;
    char* end = nullptr;
    long long cap = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1)
        throw std::invalid_argument("SLIDEKIT_TUPLE_CAP must be a positive integer");
    return cap;
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

int exit_code_of(SolveStatus status) {
    switch (status) {
    case SolveStatus::Sat: return kExitSat;
    case SolveStatus::Unsat: return kExitUnsat;
    case SolveStatus::Limit: return kExitLimit;
    }
    return kExitInputError;
}

struct OrderFlags {
    std::string var_order = "lex";
    std::string val_order = "asc";
    std::string mode = "first";
    long long node_limit = -1;
    long long time_limit_ms = -1;
    bool times = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--var-order", var_order, "Variable order: lex | min-domain")
            ->check(CLI::IsMember({"lex", "min-domain"}));
        cmd->add_option("--val-order", val_order, "Value order: asc | desc")
            ->check(CLI::IsMember({"asc", "desc"}));
        cmd->add_option("--mode", mode, "first | count")
            ->check(CLI::IsMember({"first", "count"}));
        cmd->add_option("--node-limit", node_limit, "Stop after this many search nodes");
        cmd->add_option("--time-limit-ms", time_limit_ms, "Stop after this many milliseconds");
        cmd->add_flag("--times", times, "Report measured wall times (non-reproducible)");
    }

    RunOptions to_options(long long cap) const {
        RunOptions opts;
        opts.var_order = var_order == "lex" ? VarOrder::Lexicographic : VarOrder::MinDomain;
        opts.val_order = val_order == "asc" ? ValOrder::Ascending : ValOrder::Descending;
        opts.mode = mode == "first" ? SolveMode::First : SolveMode::CountAll;
        opts.limits.node_limit = node_limit;
        opts.limits.time_limit_ms = time_limit_ms;
        opts.report_times = times;
        opts.tuple_cap = cap;
        return opts;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slidekit: a slide/cardpath constraint propagation toolkit"};
    app.require_subcommand(1);

    std::string solve_path;
    bool solve_decomposed = false;
    OrderFlags solve_flags;
    CLI::App* cmd_solve = app.add_subcommand("solve", "Solve a JSON instance, print a CSV report");
    cmd_solve->add_option("instance", solve_path, "Instance file")->required();
    cmd_solve->add_flag("--decomposed", solve_decomposed,
                        "Post the weak per-window decomposition instead of chained slide");
    solve_flags.attach(cmd_solve);

    std::string verify_path;
    CLI::App* cmd_verify = app.add_subcommand(
        "verify", "Check propagation against the brute-force oracle on a small instance");
    cmd_verify->add_option("instance", verify_path, "Instance file")->required();

    GenerateOptions gen;
    std::string gen_out = ".";
    CLI::App* cmd_generate = app.add_subcommand("generate", "Write deterministic instance files");
    cmd_generate->add_option("--family", gen.family, "amongseq-roster | random-table")
        ->required()
        ->check(CLI::IsMember({"amongseq-roster", "random-table"}));
    cmd_generate->add_option("--out", gen_out, "Output directory");
    cmd_generate->add_option("--count", gen.count, "Number of instances");
    cmd_generate->add_option("--seed", gen.seed, "Generator seed");
    cmd_generate->add_option("--n", gen.n, "Sequence length");
    cmd_generate->add_option("--d", gen.d, "Domain size");
    cmd_generate->add_option("--k", gen.k, "Table arity (random-table)");
    cmd_generate->add_option("--q", gen.q, "Window length (amongseq-roster)");
    cmd_generate->add_option("--lower", gen.lower, "Window lower count");
    cmd_generate->add_option("--upper", gen.upper, "Window upper count");
    cmd_generate->add_option("--density", gen.density, "Table density in [0,1]");

    std::string compare_dir;
    OrderFlags compare_flags;
    CLI::App* cmd_compare = app.add_subcommand(
        "compare", "Solve each instance as slide and as the decomposed baseline");
    cmd_compare->add_option("dir", compare_dir, "Directory of instance files")->required();
    compare_flags.attach(cmd_compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        long long cap = tuple_cap_from_env();

        if (*cmd_solve) {
            RunOptions opts = solve_flags.to_options(cap);
            opts.decomposed = solve_decomposed;
            std::optional<std::string> solution;
            RunRow row = run_instance(parse_instance_file(solve_path), stem_of(solve_path),
                                      opts, &solution);
            std::cout << report_header() << "\n" << to_csv(row) << "\n";
            if (solution)
                std::cout << "solution " << *solution << "\n";
            return exit_code_of(status_of_row(row));
        }

        if (*cmd_verify) {
            VerifyResult r = verify_instance(parse_instance_file(verify_path));
            for (const auto& msg : r.messages)
                std::cout << msg << "\n";
            std::cout << (r.ok ? "verify: ok" : "verify: MISMATCH") << "\n";
            return r.ok ? 0 : 1;
        }

        if (*cmd_generate) {
            auto files = generate_instances(gen);
            std::filesystem::create_directories(gen_out);
            for (const auto& f : files) {
                std::filesystem::path p = std::filesystem::path(gen_out) / f.filename;
                std::ofstream out(p);
                if (!out)
                    throw std::invalid_argument("cannot write " + p.string());
                out << f.content;
                std::cout << p.string() << "\n";
            }
            return 0;
        }

        if (*cmd_compare) {
            auto rows = compare_directory(compare_dir, compare_flags.to_options(cap));
            std::cout << report_header() << "\n";
            for (const auto& row : rows)
                std::cout << to_csv(row) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
