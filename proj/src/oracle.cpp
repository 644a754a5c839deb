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

#include "slidekit/oracle.hpp"

#include <algorithm>

namespace slidekit {

namespace {

void check_product_cap(const std::vector<std::vector<int>>& domains, long long cap) {
    long long product = 1;
    for (const auto& d : domains) {
        product *= static_cast<long long>(d.size());
        if (product > cap)
            throw ResourceLimitError("oracle: domain product exceeds cap");
        if (product == 0)
            return;
    }
}

// Odometer enumeration over per-variable sorted value lists.
template <typename Fn>
void for_each_assignment(const std::vector<std::vector<int>>& domains, Fn&& fn) {
    size_t n = domains.size();
    for (const auto& d : domains)
        if (d.empty())
            return;
    std::vector<size_t> idx(n, 0);
    std::vector<int> values(n);
    for (size_t i = 0; i < n; ++i)
        values[i] = domains[i][0];
    while (true) {
        fn(values);
        size_t p = n;
        while (p > 0) {
            --p;
            if (++idx[p] < domains[p].size()) {
                values[p] = domains[p][idx[p]];
                break;
            }
            idx[p] = 0;
            values[p] = domains[p][0];
            if (p == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

} // namespace

std::vector<Assignment> enumerate_solutions(const Model& m, long long cap) {
    std::vector<std::vector<int>> domains;
    domains.reserve(static_cast<size_t>(m.num_variables()));
    for (VarId v = 0; v < m.num_variables(); ++v)
        domains.push_back(m.domain(v).sorted_values());
    check_product_cap(domains, cap);

    std::vector<Assignment> out;
    for_each_assignment(domains, [&](const std::vector<int>& values) {
        for (int c = 0; c < m.num_constraints(); ++c)
            if (!m.constraint(c).accepts(values))
                return;
        out.push_back(values);
    });
    return out;
}

std::vector<std::vector<int>> gac_by_definition(const Model& m, long long cap) {
    auto solutions = enumerate_solutions(m, cap);
    size_t n = static_cast<size_t>(m.num_variables());
    std::vector<std::set<int>> sets(n);
    for (const auto& sol : solutions)
        for (size_t v = 0; v < n; ++v)
            sets[v].insert(sol[v]);
    std::vector<std::vector<int>> out(n);
    for (size_t v = 0; v < n; ++v)
        out[v].assign(sets[v].begin(), sets[v].end());
    return out;
}

std::set<std::vector<int>> project(std::span<const Assignment> solutions,
                                   std::span<const VarId> vars) {
    std::set<std::vector<int>> out;
    std::vector<int> row(vars.size());
    for (const auto& sol : solutions) {
        for (size_t i = 0; i < vars.size(); ++i)
            row[i] = sol[static_cast<size_t>(vars[i])];
        out.insert(row);
    }
    return out;
}

std::set<std::vector<int>> enumerate_relation(const Model& m, const SemanticRelation& rel,
                                              long long cap) {
    std::vector<std::vector<int>> domains;
    domains.reserve(rel.scope.size());
    for (VarId v : rel.scope)
        domains.push_back(m.domain(v).sorted_values());
    check_product_cap(domains, cap);

    std::set<std::vector<int>> out;
    for_each_assignment(domains, [&](const std::vector<int>& values) {
        if (rel.test(values))
            out.insert(values);
    });
    return out;
}

} // namespace slidekit
