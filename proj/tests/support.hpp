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

#ifndef SLIDEKIT_TESTS_SUPPORT_HPP
#define SLIDEKIT_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "slidekit/model.hpp"
#include "slidekit/slid_spec.hpp"
#include "slidekit/slide.hpp"

namespace slidekit::testing {

inline int rand_int(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

// Random k-ary table over {0..d-1} with the given tuple keep probability.
inline SlidSpec random_table(std::mt19937& rng, int k, int d, double density) {
    std::vector<std::vector<int>> rows;
    std::vector<int> t(static_cast<size_t>(k), 0);
    const unsigned scale = 1u << 24;
    auto threshold = static_cast<unsigned>(density * scale);
    while (true) {
        if (rng() % scale < threshold)
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

struct RandomSlide {
    Model model;
    std::vector<VarId> vars;
    int constraint = -1; // index of the posted slide
};

// A random slide instance: n variables over {0..d-1} with random value
// removals, a random k-ary table of the given density, windows at step j.
inline RandomSlide random_slide_instance(std::mt19937& rng, int n, int d, int k, int j,
                                         double density, bool prune_domains = true) {
    RandomSlide inst;
    for (int i = 0; i < n; ++i)
        inst.vars.push_back(inst.model.new_variable(0, d - 1));
    if (prune_domains) {
        for (VarId v : inst.vars)
            for (int val = 0; val < d; ++val)
                if (inst.model.domain(v).size() > 1 && rng() % 5 == 0)
                    inst.model.remove_value(v, val);
    }
    auto chain = build_chain(inst.vars, k, j);
    inst.constraint = inst.model.post(
        std::make_unique<SlideConstraint>(std::move(chain), random_table(rng, k, d, density)));
    return inst;
}

inline std::vector<std::vector<int>> all_domains(const Model& m) {
    std::vector<std::vector<int>> out;
    for (VarId v = 0; v < m.num_variables(); ++v)
        out.push_back(m.domain(v).sorted_values());
    return out;
}

inline std::vector<std::vector<int>> empty_domains(const Model& m) {
    return std::vector<std::vector<int>>(static_cast<size_t>(m.num_variables()));
}

} // namespace slidekit::testing

#endif
