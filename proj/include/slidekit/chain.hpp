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

#ifndef SLIDEKIT_CHAIN_HPP
#define SLIDEKIT_CHAIN_HPP

#include <span>
#include <vector>

#include "slidekit/model.hpp"

namespace slidekit {

// An ordered sequence of windows over variable ids with the chain property:
//  - no variable occurs twice inside one window,
//  - the variables shared by consecutive windows are exactly the last o
//    positions of the earlier window and the first o positions of the later
//    one (as sets; the two orders may differ),
//  - every variable occurs in a contiguous run of windows.
// Under these invariants pairwise join consistency between consecutive
// windows is equivalent to global consistency of the conjunction.
class WindowChain {
  public:
    // Validates the invariants; throws std::invalid_argument on violation.
    explicit WindowChain(std::vector<std::vector<VarId>> windows);

    int num_windows() const { return static_cast<int>(windows_.size()); }
    const std::vector<VarId>& window(int i) const { return windows_[static_cast<size_t>(i)]; }
    const std::vector<std::vector<VarId>>& windows() const { return windows_; }

    // Overlap width between window i and window i+1.
    int overlap(int i) const { return static_cast<int>(earlier_pos_[static_cast<size_t>(i)].size()); }

    // For pair (i, i+1): earlier_positions(i)[q] is the position in window i
    // of the variable sitting at position q of window i+1. The later window's
    // key is simply its first o values; the earlier window's key is read
    // through this mapping so both sides produce identically ordered keys.
    const std::vector<int>& earlier_positions(int i) const {
        return earlier_pos_[static_cast<size_t>(i)];
    }

    // Union of window variables, in first-occurrence order.
    const std::vector<VarId>& variables() const { return variables_; }

    // Windows containing each variable form a contiguous run; these give the
    // first window containing the variable and its position there.
    int first_window_of(VarId v) const;
    int position_in_first_window(VarId v) const;

    // Parallel to variables(): (window, position) of each first occurrence.
    const std::vector<std::pair<int, int>>& first_occurrences() const {
        return first_occurrence_;
    }

  private:
    std::vector<std::vector<VarId>> windows_;
    std::vector<std::vector<int>> earlier_pos_;
    std::vector<VarId> variables_;
    // Parallel to variables_: (window, position) of first occurrence.
    std::vector<std::pair<int, int>> first_occurrence_;
};

// Windows of width k starting at offsets 0, j, 2j, ... while offset+k <= n.
// Trailing variables not covered by any window are left unconstrained.
WindowChain build_chain(std::span<const VarId> vars, int k, int step);

} // namespace slidekit

#endif
