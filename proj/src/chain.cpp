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

#include "slidekit/chain.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace slidekit {

WindowChain::WindowChain(std::vector<std::vector<VarId>> windows) : windows_(std::move(windows)) {
    if (windows_.empty())
        throw std::invalid_argument("WindowChain: no windows");

    std::map<VarId, std::pair<int, int>> first_seen; // var -> (window, position)
    std::map<VarId, int> last_window;
    for (int i = 0; i < num_windows(); ++i) {
        const auto& w = windows_[static_cast<size_t>(i)];
        if (w.empty())
            throw std::invalid_argument("WindowChain: empty window");
        std::set<VarId> seen;
        for (int p = 0; p < static_cast<int>(w.size()); ++p) {
            VarId v = w[static_cast<size_t>(p)];
            if (!seen.insert(v).second)
                throw std::invalid_argument("WindowChain: variable repeated inside a window");
            if (!first_seen.count(v)) {
                first_seen[v] = {i, p};
                variables_.push_back(v);
                first_occurrence_.push_back({i, p});
            } else if (last_window[v] != i - 1 && last_window[v] != i) {
                throw std::invalid_argument("WindowChain: variable occurs in non-contiguous windows");
            }
            last_window[v] = i;
        }
    }
    earlier_pos_.resize(static_cast<size_t>(num_windows() - 1));
    for (int i = 0; i + 1 < num_windows(); ++i) {
        const auto& a = windows_[static_cast<size_t>(i)];
        const auto& b = windows_[static_cast<size_t>(i + 1)];
        std::set<VarId> sa(a.begin(), a.end());
        std::set<VarId> shared;
        for (VarId v : b)
            if (sa.count(v))
                shared.insert(v);
        int o = static_cast<int>(shared.size());
        // Shared variables must be the suffix of the earlier window and the
        // prefix of the later one.
        for (int q = 0; q < o; ++q)
            if (!shared.count(b[static_cast<size_t>(q)]))
                throw std::invalid_argument(
                    "WindowChain: shared variables are not a prefix of the later window");
        int alen = static_cast<int>(a.size());
        for (int q = 0; q < o; ++q)
            if (!shared.count(a[static_cast<size_t>(alen - 1 - q)]))
                throw std::invalid_argument(
                    "WindowChain: shared variables are not a suffix of the earlier window");
        std::vector<int>& pos = earlier_pos_[static_cast<size_t>(i)];
        pos.resize(static_cast<size_t>(o));
        for (int q = 0; q < o; ++q) {
            VarId v = b[static_cast<size_t>(q)];
            auto it = std::find(a.begin(), a.end(), v);
            pos[static_cast<size_t>(q)] = static_cast<int>(it - a.begin());
        }
    }
}

int WindowChain::first_window_of(VarId v) const {
    for (size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == v)
            return first_occurrence_[i].first;
    throw std::invalid_argument("WindowChain: variable not in any window");
}

int WindowChain::position_in_first_window(VarId v) const {
    for (size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == v)
            return first_occurrence_[i].second;
    throw std::invalid_argument("WindowChain: variable not in any window");
}

WindowChain build_chain(std::span<const VarId> vars, int k, int step) {
    int n = static_cast<int>(vars.size());
    if (k < 1 || k > n)
        throw std::invalid_argument("build_chain: need 1 <= k <= |vars|");
    if (step < 1)
        throw std::invalid_argument("build_chain: step must be >= 1");
    std::vector<std::vector<VarId>> windows;
    for (int off = 0; off + k <= n; off += step)
        windows.emplace_back(vars.begin() + off, vars.begin() + off + k);
    return WindowChain(std::move(windows));
}

} // namespace slidekit
