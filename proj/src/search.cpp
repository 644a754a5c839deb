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

#include "slidekit/search.hpp"

#include <chrono>

namespace slidekit {

bool fixpoint(Model& m) {
    return m.fixpoint();
}

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
  public:
    Searcher(Model& m, VarOrder var_order, ValOrder val_order, SolveMode mode, Limits limits)
        : m_(m), var_order_(var_order), val_order_(val_order), mode_(mode), limits_(limits) {}

    SolveResult run() {
        start_ = Clock::now();
        long long calls_before = m_.propagation_call_count();
        if (run_fixpoint())
            dfs();
        res_.stats.propagations = m_.propagation_call_count() - calls_before;
        if (limit_)
            res_.status = SolveStatus::Limit;
        else
            res_.status = res_.solution_count > 0 ? SolveStatus::Sat : SolveStatus::Unsat;
        res_.stats.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 Clock::now() - start_)
                                 .count();
        return res_;
    }

  private:
    bool run_fixpoint() {
        long long before = m_.removal_count();
        bool ok = m_.fixpoint();
        res_.stats.values_pruned += m_.removal_count() - before;
        if (!ok)
            ++res_.stats.failures;
        return ok;
    }

    VarId pick_var() const {
        VarId best = -1;
        int best_size = 0;
        for (VarId v = 0; v < m_.num_variables(); ++v) {
            int sz = m_.domain(v).size();
            if (sz < 2)
                continue;
            if (var_order_ == VarOrder::Lexicographic)
                return v;
            if (best < 0 || sz < best_size) {
                best = v;
                best_size = sz;
            }
        }
        return best;
    }

    int pick_val(VarId v) const {
        const Domain& d = m_.domain(v);
        return val_order_ == ValOrder::Ascending ? d.min() : d.max();
    }

    bool limit_hit() {
        if (limit_)
            return true;
        if (limits_.node_limit >= 0 && res_.stats.nodes >= limits_.node_limit) {
            limit_ = true;
            return true;
        }
        if (limits_.time_limit_ms >= 0) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               Clock::now() - start_)
                               .count();
            if (elapsed >= limits_.time_limit_ms) {
                limit_ = true;
                return true;
            }
        }
        return false;
    }

    // Returns false to unwind the whole search (limit hit, or first solution
    // found in First mode).
    bool dfs() {
        VarId x = pick_var();
        if (x < 0) {
            record_solution();
            return mode_ == SolveMode::CountAll;
        }
        int v = pick_val(x);

        // Left branch: x = v.
        if (limit_hit())
            return false;
        ++res_.stats.nodes;
        m_.push_level();
        bool ok = m_.assign(x, v) && run_fixpoint();
        bool keep_going = true;
        if (ok)
            keep_going = dfs();
        m_.pop_level();
        if (!keep_going)
            return false;

        // Right branch: x != v.
        if (limit_hit())
            return false;
        ++res_.stats.nodes;
        m_.push_level();
        m_.remove_value(x, v);
        ok = !m_.failed() && run_fixpoint();
        keep_going = true;
        if (ok)
            keep_going = dfs();
        m_.pop_level();
        return keep_going;
    }

    void record_solution() {
        ++res_.solution_count;
        if (!res_.solution) {
            Assignment a(static_cast<size_t>(m_.num_variables()));
            for (VarId v = 0; v < m_.num_variables(); ++v)
                a[static_cast<size_t>(v)] = m_.domain(v).value();
            res_.solution = std::move(a);
        }
    }

    Model& m_;
    VarOrder var_order_;
    ValOrder val_order_;
    SolveMode mode_;
    Limits limits_;
    SolveResult res_;
    Clock::time_point start_;
    bool limit_ = false;
};

} // namespace

SolveResult solve(Model& m, VarOrder var_order, ValOrder val_order, SolveMode mode,
                  Limits limits) {
    return Searcher(m, var_order, val_order, mode, limits).run();
}

} // namespace slidekit
