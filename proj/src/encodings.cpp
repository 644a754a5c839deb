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

#include "slidekit/encodings.hpp"

#include <algorithm>
#include <set>

namespace slidekit {

namespace {

void require(bool cond, const char* msg) {
    if (!cond)
        throw std::invalid_argument(msg);
}

void require_distinct(std::span<const VarId> vars, const char* msg) {
    std::set<VarId> s(vars.begin(), vars.end());
    require(s.size() == vars.size(), msg);
}

std::vector<int> range_values(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(v);
    return out;
}

// Counter variables M_1..M_count with D(M_i) = {0..i-1}: the reachable
// prefix counts, tightened at encode time so the DP (and the oracle) never
// revisit unreachable counter values.
std::vector<VarId> make_counters(Model& m, int count, const std::string& stem) {
    std::vector<VarId> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 1; i <= count; ++i)
        out.push_back(m.new_variable(0, i - 1, stem + std::to_string(i)));
    return out;
}

EncodingResult counter_slide(Model& m, const SlidSpec& inner, std::span<const VarId> xs, int k,
                             VarId count_var, const std::string& counter_stem) {
    int n = static_cast<int>(xs.size());
    int num_windows = n - k + 1;
    std::vector<VarId> counters = make_counters(m, num_windows, counter_stem);

    std::vector<std::vector<VarId>> windows;
    windows.reserve(static_cast<size_t>(num_windows));
    for (int i = 0; i < num_windows; ++i) {
        std::vector<VarId> w;
        w.push_back(counters[static_cast<size_t>(i)]);
        for (int p = 0; p < k; ++p)
            w.push_back(xs[static_cast<size_t>(i + p)]);
        w.push_back(i + 1 < num_windows ? counters[static_cast<size_t>(i + 1)] : count_var);
        windows.push_back(std::move(w));
    }

    EncodingResult enc{std::move(counters), WindowChain(std::move(windows)),
                       SlidSpec::counter_step(inner), {}};
    enc.boundary.emplace_back(enc.aux_vars.front(), std::vector<int>{0});
    enc.boundary.emplace_back(count_var, range_values(0, num_windows));
    return enc;
}

} // namespace

EncodingResult encode_among(Model& m, std::span<const VarId> xs, const std::vector<int>& values,
                            VarId count_var) {
    require(!xs.empty(), "encode_among: empty sequence");
    require_distinct(xs, "encode_among: repeated variable");
    require(std::find(xs.begin(), xs.end(), count_var) == xs.end(),
            "encode_among: count variable inside the sequence");
    std::vector<std::vector<int>> rows;
    for (int v : values)
        rows.push_back({v});
    return counter_slide(m, SlidSpec::table(1, std::move(rows)), xs, 1, count_var, "_amg");
}

EncodingResult encode_among_seq(Model& m, int lower, int upper, int q,
                                std::span<const VarId> xs, const std::vector<int>& values) {
    require(!xs.empty(), "encode_among_seq: empty sequence");
    require_distinct(xs, "encode_among_seq: repeated variable");
    require(lower <= upper, "encode_among_seq: lower > upper");
    require(q >= 1 && q <= static_cast<int>(xs.size()), "encode_among_seq: bad window length");
    (void)m;
    return EncodingResult{{},
                          build_chain(xs, q, 1),
                          SlidSpec::sum_in_range_over(q, lower, upper, values),
                          {}};
}

EncodingResult encode_sliding_sum(Model& m, int lower, int upper, int q,
                                  std::span<const VarId> xs) {
    require(!xs.empty(), "encode_sliding_sum: empty sequence");
    require_distinct(xs, "encode_sliding_sum: repeated variable");
    require(lower <= upper, "encode_sliding_sum: lower > upper");
    require(q >= 1 && q <= static_cast<int>(xs.size()), "encode_sliding_sum: bad window length");
    (void)m;
    return EncodingResult{{}, build_chain(xs, q, 1), SlidSpec::sum_in_range(q, lower, upper), {}};
}

EncodingResult encode_regular(Model& m, const Dfa& dfa, std::span<const VarId> xs) {
    require(!xs.empty(), "encode_regular: empty sequence");
    require_distinct(xs, "encode_regular: repeated variable");
    int n = static_cast<int>(xs.size());

    std::vector<VarId> states;
    states.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        states.push_back(m.new_variable(0, dfa.num_states() - 1, "_q" + std::to_string(i)));

    std::vector<std::vector<VarId>> windows;
    for (int i = 0; i < n; ++i)
        windows.push_back({states[static_cast<size_t>(i)], xs[static_cast<size_t>(i)],
                           states[static_cast<size_t>(i) + 1]});

    EncodingResult enc{std::move(states), WindowChain(std::move(windows)),
                       SlidSpec::dfa_transition(dfa.transitions()), {}};

    // Per-position state sets: forward-reachable from the initial state
    // intersected with co-reachable to an accepting state, computed over the
    // current symbol domains. Covers the Q_0 = initial and Q_n in accepting
    // boundaries and keeps oracle-side products small.
    std::vector<std::set<int>> reach(static_cast<size_t>(n) + 1);
    reach[0].insert(dfa.initial());
    for (int i = 0; i < n; ++i)
        for (int s : reach[static_cast<size_t>(i)])
            for (int a : m.domain(xs[static_cast<size_t>(i)]).values())
                if (auto t = dfa.step(s, a))
                    reach[static_cast<size_t>(i) + 1].insert(*t);
    std::vector<std::set<int>> live(static_cast<size_t>(n) + 1);
    live[static_cast<size_t>(n)] = std::set<int>(dfa.accepting().begin(), dfa.accepting().end());
    for (int i = n - 1; i >= 0; --i)
        for (int s = 0; s < dfa.num_states(); ++s)
            for (int a : m.domain(xs[static_cast<size_t>(i)]).values())
                if (auto t = dfa.step(s, a))
                    if (live[static_cast<size_t>(i) + 1].count(*t)) {
                        live[static_cast<size_t>(i)].insert(s);
                        break;
                    }
    for (int i = 0; i <= n; ++i) {
        std::vector<int> allowed;
        for (int s : reach[static_cast<size_t>(i)])
            if (live[static_cast<size_t>(i)].count(s))
                allowed.push_back(s);
        enc.boundary.emplace_back(enc.aux_vars[static_cast<size_t>(i)], std::move(allowed));
    }
    return enc;
}

Dfa stretch_dfa(const std::vector<int>& values, const std::map<int, StretchBounds>& lengths,
                int n) {
    require(n >= 1, "stretch_dfa: empty sequence");
    auto bounds = [&](int v) -> StretchBounds {
        auto it = lengths.find(v);
        StretchBounds b = it != lengths.end() ? it->second : StretchBounds{1, n};
        require(b.min >= 1, "stretch: min length must be >= 1");
        require(b.min <= b.max, "stretch: min length exceeds max");
        b.max = std::min(b.max, n); // states past n are unreachable
        return b;
    };

    // State 0 is the start; state of (value index vi, run length r) follows.
    std::vector<int> offsets(values.size());
    int num_states = 1;
    for (size_t vi = 0; vi < values.size(); ++vi) {
        offsets[vi] = num_states;
        num_states += std::max(0, bounds(values[vi]).max);
    }
    auto state_of = [&](size_t vi, int r) { return offsets[vi] + r - 1; };

    std::vector<std::array<int, 3>> transitions;
    std::vector<int> accepting;
    for (size_t vi = 0; vi < values.size(); ++vi) {
        int v = values[vi];
        StretchBounds b = bounds(v);
        if (b.max < b.min)
            continue; // clamped away: v cannot start a legal run
        transitions.push_back({0, v, state_of(vi, 1)});
        for (int r = 1; r <= b.max; ++r) {
            int s = state_of(vi, r);
            if (r + 1 <= b.max)
                transitions.push_back({s, v, state_of(vi, r + 1)});
            if (r >= b.min) {
                accepting.push_back(s);
                for (size_t wi = 0; wi < values.size(); ++wi) {
                    if (wi == vi)
                        continue;
                    StretchBounds wb = bounds(values[wi]);
                    if (wb.max >= wb.min)
                        transitions.push_back({s, values[wi], state_of(wi, 1)});
                }
            }
        }
    }
    return Dfa(num_states, 0, std::move(accepting), std::move(transitions));
}

EncodingResult encode_stretch(Model& m, std::span<const VarId> xs,
                              const std::map<int, StretchBounds>& lengths) {
    require(!xs.empty(), "encode_stretch: empty sequence");
    require_distinct(xs, "encode_stretch: repeated variable");
    std::set<int> value_set;
    for (VarId x : xs)
        for (int v : m.domain(x).values())
            value_set.insert(v);
    std::vector<int> values(value_set.begin(), value_set.end());
    Dfa dfa = stretch_dfa(values, lengths, static_cast<int>(xs.size()));
    return encode_regular(m, dfa, xs);
}

EncodingResult encode_lex_leq(Model& m, std::span<const VarId> xs, std::span<const VarId> ys) {
    require(!xs.empty(), "encode_lex_leq: empty sequences");
    require(xs.size() == ys.size(), "encode_lex_leq: length mismatch");
    std::vector<VarId> all(xs.begin(), xs.end());
    all.insert(all.end(), ys.begin(), ys.end());
    require_distinct(all, "encode_lex_leq: sequences share a variable");
    int n = static_cast<int>(xs.size());

    std::vector<VarId> flags;
    flags.reserve(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n + 1; ++i)
        flags.push_back(m.new_variable(0, 1, "_eq" + std::to_string(i)));

    std::vector<std::vector<VarId>> windows;
    for (int i = 0; i < n; ++i)
        windows.push_back({flags[static_cast<size_t>(i)], xs[static_cast<size_t>(i)],
                           ys[static_cast<size_t>(i)], flags[static_cast<size_t>(i) + 1]});

    EncodingResult enc{std::move(flags), WindowChain(std::move(windows)), SlidSpec::lex_step(),
                       {}};
    enc.boundary.emplace_back(enc.aux_vars.front(), std::vector<int>{1});
    return enc;
}

EncodingResult encode_contiguity(Model& m, std::span<const VarId> xs) {
    require(!xs.empty(), "encode_contiguity: empty sequence");
    require_distinct(xs, "encode_contiguity: repeated variable");
    for (VarId x : xs)
        require(m.domain(x).original_lower() >= 0 && m.domain(x).original_upper() <= 1,
                "encode_contiguity: variables must be 0/1");
    // 0*1*0*: before the block / inside it / after it.
    Dfa dfa(3, 0, {0, 1, 2},
            {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}, {1, 0, 2}, {2, 0, 2}});
    return encode_regular(m, dfa, xs);
}

EncodingResult encode_cardpath(Model& m, const SlidSpec& spec, std::span<const VarId> xs,
                               VarId count_var) {
    require(!xs.empty(), "encode_cardpath: empty sequence");
    require_distinct(xs, "encode_cardpath: repeated variable");
    require(std::find(xs.begin(), xs.end(), count_var) == xs.end(),
            "encode_cardpath: count variable inside the sequence");
    int k = spec.arity();
    require(k >= 1 && k <= static_cast<int>(xs.size()),
            "encode_cardpath: slid arity exceeds sequence length");
    return counter_slide(m, spec, xs, k, count_var, "_cnt");
}

std::vector<int> post_encoding(Model& m, const EncodingResult& enc, bool decomposed) {
    for (const auto& [var, allowed] : enc.boundary) {
        std::vector<int> sorted(allowed.begin(), allowed.end());
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> snapshot(m.domain(var).values().begin(), m.domain(var).values().end());
        for (int v : snapshot)
            if (!std::binary_search(sorted.begin(), sorted.end(), v))
                m.remove_value(var, v);
    }
    std::vector<int> posted;
    if (decomposed) {
        for (auto& c : decompose(enc.chain, enc.spec))
            posted.push_back(m.post(std::move(c)));
    } else {
        posted.push_back(m.post(std::make_unique<SlideConstraint>(enc.chain, enc.spec)));
    }
    return posted;
}

} // namespace slidekit
