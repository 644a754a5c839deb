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

#include <algorithm>
#include <random>
#include <set>

#include "slidekit/model.hpp"
#include "slidekit/slid_spec.hpp"

using namespace slidekit;

namespace {

struct DomainSet {
    Model model;
    std::vector<VarId> vars;

    std::vector<const Domain*> pointers() const {
        std::vector<const Domain*> out;
        for (VarId v : vars)
            out.push_back(&model.domain(v));
        return out;
    }
};

DomainSet make_domains(const std::vector<std::vector<int>>& values) {
    DomainSet ds;
    for (const auto& vals : values) {
        int lo = *std::min_element(vals.begin(), vals.end());
        int hi = *std::max_element(vals.begin(), vals.end());
        VarId v = ds.model.new_variable(lo, hi);
        for (int x = lo; x <= hi; ++x)
            if (!std::count(vals.begin(), vals.end(), x))
                ds.model.remove_value(v, x);
        ds.vars.push_back(v);
    }
    return ds;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& tuples) {
    return {tuples.begin(), tuples.end()};
}

// Independent oracle: odometer over the sorted domain product, filtered by
// evaluate only.
std::set<std::vector<int>> brute_force_satisfying(const SlidSpec& spec,
                                                  const std::vector<const Domain*>& doms) {
    std::set<std::vector<int>> out;
    std::vector<std::vector<int>> values;
    for (const Domain* d : doms) {
        values.push_back(d->sorted_values());
        if (values.back().empty())
            return out;
    }
    std::vector<size_t> idx(doms.size(), 0);
    while (true) {
        std::vector<int> t(doms.size());
        for (size_t i = 0; i < doms.size(); ++i)
            t[i] = values[i][idx[i]];
        if (spec.evaluate(t))
            out.insert(t);
        size_t p = doms.size();
        while (p > 0) {
            --p;
            if (++idx[p] < values[p].size())
                break;
            idx[p] = 0;
            if (p == 0)
                return out;
        }
    }
}

} // namespace

TEST_CASE("table evaluate") {
    SlidSpec neq = SlidSpec::table(2, {{0, 1}, {1, 0}});
    CHECK(neq.evaluate(std::vector<int>{0, 1}));
    CHECK(neq.evaluate(std::vector<int>{1, 0}));
    CHECK_FALSE(neq.evaluate(std::vector<int>{0, 0}));
    CHECK_FALSE(neq.evaluate(std::vector<int>{1, 1}));
}

TEST_CASE("sum_in_range evaluate") {
    SlidSpec s = SlidSpec::sum_in_range(3, 1, 2);
    CHECK(s.evaluate(std::vector<int>{0, 1, 1}));
    CHECK_FALSE(s.evaluate(std::vector<int>{0, 0, 0}));
    CHECK_FALSE(s.evaluate(std::vector<int>{1, 1, 1}));

    SlidSpec member = SlidSpec::sum_in_range_over(3, 1, 2, {5});
    CHECK(member.evaluate(std::vector<int>{5, 0, 0}));
    CHECK_FALSE(member.evaluate(std::vector<int>{0, 0, 0}));
}

TEST_CASE("counter_step evaluate increments iff the inner constraint holds") {
    SlidSpec eq = SlidSpec::table(2, {{0, 0}, {1, 1}});
    SlidSpec step = SlidSpec::counter_step(eq);
    CHECK(step.arity() == 4);
    CHECK(step.evaluate(std::vector<int>{0, 1, 1, 1}));
    CHECK_FALSE(step.evaluate(std::vector<int>{0, 1, 0, 1}));
    CHECK(step.evaluate(std::vector<int>{0, 1, 0, 0}));
    CHECK(step.evaluate(std::vector<int>{3, 0, 0, 4}));
}

TEST_CASE("lex_step evaluate") {
    SlidSpec lex = SlidSpec::lex_step();
    CHECK(lex.evaluate(std::vector<int>{1, 2, 2, 1}));  // equal so far
    CHECK(lex.evaluate(std::vector<int>{1, 1, 2, 0}));  // strictly less
    CHECK_FALSE(lex.evaluate(std::vector<int>{1, 2, 1, 0})); // greater
    CHECK_FALSE(lex.evaluate(std::vector<int>{1, 1, 2, 1}));
    CHECK(lex.evaluate(std::vector<int>{0, 9, 0, 0}));  // released flag stays 0
    CHECK_FALSE(lex.evaluate(std::vector<int>{0, 0, 0, 1}));
    CHECK_FALSE(lex.evaluate(std::vector<int>{2, 0, 0, 0})); // non-boolean flag
}

TEST_CASE("dfa_transition evaluate") {
    SlidSpec t = SlidSpec::dfa_transition({{0, 0, 0}, {0, 1, 1}, {1, 0, 0}});
    CHECK(t.arity() == 3);
    CHECK(t.evaluate(std::vector<int>{0, 1, 1}));
    CHECK_FALSE(t.evaluate(std::vector<int>{1, 1, 1}));
}

TEST_CASE("evaluate rejects arity mismatch") {
    SlidSpec s = SlidSpec::table(2, {{0, 0}});
    CHECK_THROWS_AS(s.evaluate(std::vector<int>{0}), std::invalid_argument);
    CHECK_THROWS_AS(s.evaluate(std::vector<int>{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_satisfying filters the table by domains") {
    SlidSpec neq = SlidSpec::table(2, {{0, 1}, {1, 0}});
    DomainSet ds = make_domains({{0}, {0, 1}});
    auto tuples = neq.enumerate_satisfying(ds.pointers());
    CHECK(as_set(tuples) == std::set<std::vector<int>>{{0, 1}});
}

TEST_CASE("enumerate_satisfying on sum_in_range matches the brute force") {
    SlidSpec s = SlidSpec::sum_in_range(2, 1, 1);
    DomainSet ds = make_domains({{0, 1}, {0, 1}});
    auto doms = ds.pointers();
    auto got = as_set(s.enumerate_satisfying(doms));
    CHECK(got == brute_force_satisfying(s, doms));
    CHECK(got == std::set<std::vector<int>>{{0, 1}, {1, 0}});
}

TEST_CASE("enumerate_satisfying with an empty domain yields nothing") {
    SlidSpec s = SlidSpec::sum_in_range(2, 0, 10);
    DomainSet ds = make_domains({{0, 1}, {0}});
    ds.model.remove_value(ds.vars[1], 0); // wipes the domain
    CHECK(s.enumerate_satisfying(ds.pointers()).empty());
}

TEST_CASE("to_table materializes a dfa transition relation") {
    SlidSpec t = SlidSpec::dfa_transition(
        {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}});
    DomainSet ds = make_domains({{0, 1}, {0, 1}, {0, 1}});
    auto doms = ds.pointers();
    SlidSpec table = t.to_table(doms);
    CHECK(table.kind() == SpecKind::Table);
    CHECK(table.table_flat().size() / 3 == 4); // <= 8 candidate triples
    CHECK(brute_force_satisfying(table, doms) == brute_force_satisfying(t, doms));
}

TEST_CASE("to_table of an always-false predicate is empty") {
    SlidSpec never = SlidSpec::predicate(2, [](std::span<const int>) { return false; });
    DomainSet ds = make_domains({{0, 1}, {0, 1}});
    CHECK(never.to_table(ds.pointers()).table_flat().empty());
}

TEST_CASE("to_table of a slack sum is the full product") {
    SlidSpec s = SlidSpec::sum_in_range_over(2, 0, 2, {1});
    DomainSet ds = make_domains({{0, 1, 2}, {0, 1}});
    CHECK(s.to_table(ds.pointers()).table_flat().size() / 2 == 6);
}

TEST_CASE("to_table refuses oversized products") {
    SlidSpec s = SlidSpec::sum_in_range(3, 0, 10);
    DomainSet ds = make_domains({{0, 1}, {0, 1}, {0, 1}});
    CHECK_THROWS_AS(s.to_table(ds.pointers(), 7), ResourceLimitError);
    CHECK_NOTHROW(s.to_table(ds.pointers(), 8));
}

TEST_CASE("enumerate_satisfying equals evaluate-filtered product on random specs") {
    std::mt19937 rng(987654);
    auto rand_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };

    for (int trial = 0; trial < 400; ++trial) {
        int body = rand_int(0, 6);
        int d = rand_int(1, 4);
        SlidSpec spec = [&]() -> SlidSpec {
            switch (body) {
            case 0: { // random table
                int k = rand_int(1, 4);
                std::vector<std::vector<int>> rows;
                std::vector<int> t(static_cast<size_t>(k), 0);
                while (true) {
                    if (rng() % 3 != 0)
                        rows.push_back(t);
                    int p = k - 1;
                    while (p >= 0 && ++t[static_cast<size_t>(p)] == d) {
                        t[static_cast<size_t>(p)] = 0;
                        --p;
                    }
                    if (p < 0)
                        break;
                }
                return SlidSpec::table(k, std::move(rows));
            }
            case 1: {
                int k = rand_int(1, 4);
                int lo = rand_int(0, k * (d - 1));
                return SlidSpec::sum_in_range(k, lo, rand_int(lo, k * (d - 1)));
            }
            case 2: {
                int k = rand_int(1, 4);
                int lo = rand_int(0, k);
                std::vector<int> members;
                for (int v = 0; v < d; ++v)
                    if (rng() % 2)
                        members.push_back(v);
                return SlidSpec::sum_in_range_over(k, lo, rand_int(lo, k), members);
            }
            case 3: {
                std::vector<std::array<int, 3>> triples;
                for (int s = 0; s < d; ++s)
                    for (int a = 0; a < d; ++a)
                        if (rng() % 2)
                            triples.push_back({s, a, rand_int(0, d - 1)});
                return SlidSpec::dfa_transition(std::move(triples));
            }
            case 4:
                return SlidSpec::lex_step();
            case 5: {
                int k = rand_int(1, 2);
                std::vector<std::vector<int>> rows;
                std::vector<int> t(static_cast<size_t>(k), 0);
                while (true) {
                    if (rng() % 2)
                        rows.push_back(t);
                    int p = k - 1;
                    while (p >= 0 && ++t[static_cast<size_t>(p)] == d) {
                        t[static_cast<size_t>(p)] = 0;
                        --p;
                    }
                    if (p < 0)
                        break;
                }
                return SlidSpec::counter_step(SlidSpec::table(k, std::move(rows)));
            }
            default:
                return SlidSpec::predicate(3, [](std::span<const int> t) {
                    return (t[0] + t[1] + t[2]) % 2 == 0;
                });
            }
        }();

        std::vector<std::vector<int>> domain_values;
        for (int i = 0; i < spec.arity(); ++i) {
            std::vector<int> vals;
            for (int v = 0; v < d; ++v)
                if (rng() % 4 != 0)
                    vals.push_back(v);
            if (vals.empty())
                vals.push_back(rand_int(0, d - 1));
            domain_values.push_back(vals);
        }
        DomainSet ds = make_domains(domain_values);
        auto doms = ds.pointers();

        auto enumerated = spec.enumerate_satisfying(doms);
        auto expected = brute_force_satisfying(spec, doms);
        CHECK(as_set(enumerated) == expected);
        CHECK(enumerated.size() == expected.size()); // no duplicates

        // to_table then evaluate-via-table agrees with evaluate everywhere.
        SlidSpec table = spec.to_table(doms);
        CHECK(brute_force_satisfying(table, doms) == expected);
    }
}
