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

#include "slidekit/oracle.hpp"
#include "slidekit/slide.hpp"
#include "support.hpp"

using namespace slidekit;
using namespace slidekit::testing;

namespace {

Model neq_slide_model(int n, int d, std::vector<VarId>* vars_out = nullptr) {
    Model m;
    std::vector<VarId> vars;
    for (int i = 0; i < n; ++i)
        vars.push_back(m.new_variable(0, d - 1));
    if (n >= 2)
        m.post(std::make_unique<SlideConstraint>(build_chain(vars, 2, 1),
                                                 SlidSpec::table(2, {{0, 1}, {1, 0}})));
    if (vars_out)
        *vars_out = vars;
    return m;
}

} // namespace

TEST_CASE("enumerate_solutions lists exactly the satisfying assignments") {
    Model m = neq_slide_model(3, 2);
    auto sols = enumerate_solutions(m);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == Assignment{0, 1, 0});
    CHECK(sols[1] == Assignment{1, 0, 1});
}

TEST_CASE("enumerate_solutions of an unconstrained model is the full product") {
    Model m;
    m.new_variable(0, 1);
    m.new_variable(0, 1);
    CHECK(enumerate_solutions(m).size() == 4);
}

TEST_CASE("enumerate_solutions of an empty table is empty") {
    Model m;
    std::vector<VarId> vars{m.new_variable(0, 1), m.new_variable(0, 1)};
    m.post(std::make_unique<SlideConstraint>(build_chain(vars, 2, 1), SlidSpec::table(2, {})));
    CHECK(enumerate_solutions(m).empty());
}

TEST_CASE("gac_by_definition keeps exactly the solution-supported values") {
    Model m2;
    std::vector<VarId> vars;
    for (int i = 0; i < 4; ++i)
        vars.push_back(m2.new_variable(0, 1));
    m2.assign(vars[0], 0);
    m2.post(std::make_unique<SlideConstraint>(build_chain(vars, 2, 1),
                                              SlidSpec::table(2, {{0, 1}, {1, 0}})));
    auto gac = gac_by_definition(m2);
    CHECK(gac[0] == std::vector<int>{0});
    CHECK(gac[1] == std::vector<int>{1});
    CHECK(gac[2] == std::vector<int>{0});
    CHECK(gac[3] == std::vector<int>{1});
}

TEST_CASE("gac_by_definition of an unsatisfiable model is all-empty") {
    Model m;
    std::vector<VarId> vars{m.new_variable(0, 1), m.new_variable(0, 1)};
    m.post(std::make_unique<SlideConstraint>(build_chain(vars, 2, 1), SlidSpec::table(2, {})));
    auto gac = gac_by_definition(m);
    CHECK(gac[0].empty());
    CHECK(gac[1].empty());
}

TEST_CASE("gac_by_definition of an unconstrained model returns the original domains") {
    Model m;
    m.new_variable(0, 2);
    m.new_variable(1, 3);
    auto gac = gac_by_definition(m);
    CHECK(gac[0] == std::vector<int>{0, 1, 2});
    CHECK(gac[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("project restricts and deduplicates") {
    Model m = neq_slide_model(3, 2);
    auto sols = enumerate_solutions(m);
    std::vector<VarId> first{0};
    auto p = project(sols, first);
    CHECK(p == std::set<std::vector<int>>{{0}, {1}});

    std::vector<VarId> full{0, 1, 2};
    CHECK(project(sols, full).size() == sols.size());

    std::vector<Assignment> none;
    CHECK(project(none, first).empty());
}

TEST_CASE("the oracle itself is validated on alternating chains") {
    // slide(!=) over d=2 has exactly the two alternating solutions whatever n.
    for (int n = 1; n <= 8; ++n) {
        Model m = neq_slide_model(n, 2);
        CHECK(enumerate_solutions(m).size() == 2);
    }
}

TEST_CASE("the oracle refuses oversized products") {
    Model m;
    for (int i = 0; i < 4; ++i)
        m.new_variable(0, 9);
    CHECK_THROWS_AS(enumerate_solutions(m, 999), ResourceLimitError);
    CHECK_NOTHROW(enumerate_solutions(m, 10000));
}
