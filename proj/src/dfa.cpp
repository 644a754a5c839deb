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

#include "slidekit/dfa.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace slidekit {

Dfa::Dfa(int num_states, int initial, std::vector<int> accepting,
         std::vector<std::array<int, 3>> transitions)
    : num_states_(num_states), initial_(initial), accepting_(std::move(accepting)),
      transitions_(std::move(transitions)) {
    if (num_states_ < 1)
        throw std::invalid_argument("Dfa: need at least one state");
    if (initial_ < 0 || initial_ >= num_states_)
        throw std::invalid_argument("Dfa: initial state out of range");
    std::sort(accepting_.begin(), accepting_.end());
    accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
    for (int q : accepting_)
        if (q < 0 || q >= num_states_)
            throw std::invalid_argument("Dfa: accepting state out of range");
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                       transitions_.end());
    for (size_t i = 0; i < transitions_.size(); ++i) {
        const auto& t = transitions_[i];
        if (t[0] < 0 || t[0] >= num_states_ || t[2] < 0 || t[2] >= num_states_)
            throw std::invalid_argument("Dfa: transition state out of range");
        if (i > 0 && transitions_[i - 1][0] == t[0] && transitions_[i - 1][1] == t[1])
            throw std::invalid_argument("Dfa: nondeterministic transition");
    }
}

bool Dfa::is_accepting(int state) const {
    return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

std::optional<int> Dfa::step(int state, int symbol) const {
    auto it = std::lower_bound(transitions_.begin(), transitions_.end(),
                               std::array<int, 3>{state, symbol,
                                                  std::numeric_limits<int>::min()});
    if (it != transitions_.end() && (*it)[0] == state && (*it)[1] == symbol)
        return (*it)[2];
    return std::nullopt;
}

bool Dfa::accepts(std::span<const int> word) const {
    int q = initial_;
    for (int sym : word) {
        auto next = step(q, sym);
        if (!next)
            return false;
        q = *next;
    }
    return is_accepting(q);
}

} // namespace slidekit
