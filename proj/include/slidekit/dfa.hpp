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

#ifndef SLIDEKIT_DFA_HPP
#define SLIDEKIT_DFA_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace slidekit {

// Deterministic finite automaton with states 0..num_states-1 and integer
// symbols. The transition map is partial: a missing (state, symbol) pair
// means the word is rejected.
class Dfa {
  public:
    Dfa(int num_states, int initial, std::vector<int> accepting,
        std::vector<std::array<int, 3>> transitions);

    int num_states() const { return num_states_; }
    int initial() const { return initial_; }
    const std::vector<int>& accepting() const { return accepting_; }
    const std::vector<std::array<int, 3>>& transitions() const { return transitions_; }

    bool is_accepting(int state) const;
    std::optional<int> step(int state, int symbol) const;
    bool accepts(std::span<const int> word) const;

  private:
    int num_states_;
    int initial_;
    std::vector<int> accepting_;                   // sorted
    std::vector<std::array<int, 3>> transitions_;  // sorted by (state, symbol)
};

} // namespace slidekit

#endif
