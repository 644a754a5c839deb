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

#include "slidekit/slide.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_set>

namespace slidekit {

namespace {

struct VecIntHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Existence index over overlap value tuples. Keys of width <= 4 pack into a
// uint64 (values normalized by the variable's original lower bound fit in 16
// bits thanks to the domain size cap); wider keys fall back to vectors.
class OverlapIndex {
  public:
    void reset(size_t width, std::vector<int> lowers) {
        width_ = width;
        lowers_ = std::move(lowers);
        packed_ = width_ <= 4;
        packed_set_.clear();
        general_set_.clear();
    }

    void insert(std::span<const int> key) {
        if (packed_)
            packed_set_.insert(pack(key));
        else
            general_set_.insert(std::vector<int>(key.begin(), key.end()));
    }

    bool contains(std::span<const int> key) const {
        if (packed_)
            return packed_set_.count(pack(key)) != 0;
        return general_set_.count(std::vector<int>(key.begin(), key.end())) != 0;
    }

  private:
    uint64_t pack(std::span<const int> key) const {
        uint64_t h = 0;
        for (size_t q = 0; q < width_; ++q) {
            uint64_t x = static_cast<uint64_t>(
                static_cast<uint32_t>(key[q] - lowers_[q]));
            assert(x < (1u << 16));
            h = (h << 16) | x;
        }
        return h;
    }

    size_t width_ = 0;
    bool packed_ = true;
    std::vector<int> lowers_;
    std::unordered_set<uint64_t> packed_set_;
    std::unordered_set<std::vector<int>, VecIntHash> general_set_;
};

} // namespace

SlideConstraint::SlideConstraint(WindowChain chain, SlidSpec spec)
    : chain_(std::move(chain)), spec_(std::move(spec)) {
    for (const auto& w : chain_.windows())
        if (static_cast<int>(w.size()) != spec_.arity())
            throw std::invalid_argument("SlideConstraint: window length != spec arity");
}

SupportSets SlideConstraint::compute_supports(const Model& m) const {
    SupportSets s;
    int nw = chain_.num_windows();
    s.windows.resize(static_cast<size_t>(nw));
    int k = spec_.arity();
    long long cap = m.tuple_cap();

    std::vector<const Domain*> doms(static_cast<size_t>(k));
    for (int i = 0; i < nw; ++i) {
        auto& pw = s.windows[static_cast<size_t>(i)];
        pw.arity = k;
        for (int p = 0; p < k; ++p)
            doms[static_cast<size_t>(p)] = &m.domain(chain_.window(i)[static_cast<size_t>(p)]);
        long long count = 0;
        bool capped = false;
        spec_.for_each_satisfying(doms, [&](std::span<const int> t) {
            if (count >= cap) {
                capped = true;
                return false;
            }
            ++count;
            pw.tuples.insert(pw.tuples.end(), t.begin(), t.end());
            return true;
        });
        if (capped)
            throw ResourceLimitError("slide propagation: window tuple cap exceeded");
        stats_.tuples_enumerated += count;
        pw.forward.assign(static_cast<size_t>(count), 0);
        pw.backward.assign(static_cast<size_t>(count), 0);
        pw.support.assign(static_cast<size_t>(count), 0);
    }

    OverlapIndex index;
    std::vector<int> key;

    // Forward: F_0 = all satisfying tuples; F_i keeps the tuples whose
    // overlap prefix matches the overlap suffix of some tuple in F_{i-1}.
    // With empty overlap the key is the empty tuple, so F_i degenerates to
    // all tuples provided F_{i-1} is nonempty.
    std::fill(s.windows[0].forward.begin(), s.windows[0].forward.end(), 1);
    for (int i = 1; i < nw; ++i) {
        const auto& prev = s.windows[static_cast<size_t>(i - 1)];
        auto& cur = s.windows[static_cast<size_t>(i)];
        const auto& pos = chain_.earlier_positions(i - 1);
        size_t o = pos.size();
        std::vector<int> lowers(o);
        for (size_t q = 0; q < o; ++q)
            lowers[q] = m.domain(chain_.window(i)[q]).original_lower();
        index.reset(o, std::move(lowers));
        key.resize(o);
        for (size_t r = 0; r < prev.count(); ++r) {
            if (!prev.forward[r])
                continue;
            const int* row = prev.row(r);
            for (size_t q = 0; q < o; ++q)
                key[q] = row[pos[q]];
            index.insert(key);
            ++stats_.join_ops;
        }
        for (size_t r = 0; r < cur.count(); ++r) {
            const int* row = cur.row(r);
            for (size_t q = 0; q < o; ++q)
                key[q] = row[q];
            cur.forward[r] = index.contains(key) ? 1 : 0;
            ++stats_.join_ops;
        }
    }

    // Backward, mirrored right to left.
    std::fill(s.windows[static_cast<size_t>(nw - 1)].backward.begin(),
              s.windows[static_cast<size_t>(nw - 1)].backward.end(), 1);
    for (int i = nw - 2; i >= 0; --i) {
        const auto& next = s.windows[static_cast<size_t>(i + 1)];
        auto& cur = s.windows[static_cast<size_t>(i)];
        const auto& pos = chain_.earlier_positions(i);
        size_t o = pos.size();
        std::vector<int> lowers(o);
        for (size_t q = 0; q < o; ++q)
            lowers[q] = m.domain(chain_.window(i + 1)[q]).original_lower();
        index.reset(o, std::move(lowers));
        key.resize(o);
        for (size_t r = 0; r < next.count(); ++r) {
            if (!next.backward[r])
                continue;
            const int* row = next.row(r);
            for (size_t q = 0; q < o; ++q)
                key[q] = row[q];
            index.insert(key);
            ++stats_.join_ops;
        }
        for (size_t r = 0; r < cur.count(); ++r) {
            const int* row = cur.row(r);
            for (size_t q = 0; q < o; ++q)
                key[q] = row[pos[q]];
            cur.backward[r] = index.contains(key) ? 1 : 0;
            ++stats_.join_ops;
        }
    }

    // S_i = F_i n B_i. The chain property makes every such tuple extendable
    // to a full solution, so join partners on both sides come for free.
    for (auto& pw : s.windows) {
        bool any = false;
        for (size_t r = 0; r < pw.count(); ++r) {
            pw.support[r] = pw.forward[r] & pw.backward[r];
            any = any || pw.support[r];
        }
        if (!any) {
            s.failed = true;
            return s;
        }
    }
    return s;
}

bool SlideConstraint::propagate(Model& m) {
    if (m.failed())
        return false;
    ++stats_.calls;
    SupportSets s = compute_supports(m);
    if (s.failed) {
        m.fail();
        return false;
    }

    // A value survives iff it appears in the support projection of the first
    // window containing its variable; prune everything else.
    const auto& vars = chain_.variables();
    const auto& occ = chain_.first_occurrences();
    std::vector<char> alive;
    std::vector<int> snapshot;
    for (size_t vi = 0; vi < vars.size(); ++vi) {
        VarId var = vars[vi];
        const Domain& d = m.domain(var);
        const auto& pw = s.windows[static_cast<size_t>(occ[vi].first)];
        int p = occ[vi].second;
        int lower = d.original_lower();
        alive.assign(static_cast<size_t>(d.original_upper() - lower + 1), 0);
        for (size_t r = 0; r < pw.count(); ++r)
            if (pw.support[r])
                alive[static_cast<size_t>(pw.row(r)[p] - lower)] = 1;
        snapshot.assign(d.values().begin(), d.values().end());
        for (int val : snapshot) {
            if (!alive[static_cast<size_t>(val - lower)]) {
                m.remove_value(var, val);
                ++stats_.values_pruned;
            }
        }
        if (m.failed())
            return false;
    }
    return true;
}

bool SlideConstraint::accepts(std::span<const int> assignment) const {
    std::vector<int> t(static_cast<size_t>(spec_.arity()));
    for (const auto& w : chain_.windows()) {
        for (size_t p = 0; p < w.size(); ++p)
            t[p] = assignment[static_cast<size_t>(w[p])];
        if (!spec_.evaluate(t))
            return false;
    }
    return true;
}

std::vector<int> projection(const SupportSets& s, const WindowChain& chain, VarId var) {
    if (s.failed)
        return {};
    int wi = chain.first_window_of(var);
    int p = chain.position_in_first_window(var);
    const auto& pw = s.windows[static_cast<size_t>(wi)];
    std::vector<int> out;
    for (size_t r = 0; r < pw.count(); ++r)
        if (pw.support[r])
            out.push_back(pw.row(r)[p]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::unique_ptr<SlideConstraint>> decompose(const WindowChain& chain,
                                                        const SlidSpec& spec) {
    std::vector<std::unique_ptr<SlideConstraint>> out;
    out.reserve(static_cast<size_t>(chain.num_windows()));
    for (const auto& w : chain.windows())
        out.push_back(std::make_unique<SlideConstraint>(WindowChain({w}), spec));
    return out;
}

} // namespace slidekit
