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

#ifndef SLIDEKIT_SLIDE_HPP
#define SLIDEKIT_SLIDE_HPP

#include <memory>
#include <vector>

#include "slidekit/chain.hpp"
#include "slidekit/model.hpp"
#include "slidekit/slid_spec.hpp"

namespace slidekit {

struct PropagationStats {
    long long calls = 0;
    long long tuples_enumerated = 0;
    long long join_ops = 0;
    long long values_pruned = 0;
};

// Per-window forward/backward/support tuple sets. Tuples are stored flat
// (stride = arity); the flag vectors are parallel to the tuple rows.
struct SupportSets {
    struct PerWindow {
        std::vector<int> tuples;
        int arity = 0;
        std::vector<char> forward;
        std::vector<char> backward;
        std::vector<char> support;
        size_t count() const { return forward.size(); }
        const int* row(size_t r) const { return tuples.data() + r * static_cast<size_t>(arity); }
    };
    std::vector<PerWindow> windows;
    bool failed = false;
};

// GAC propagator for slide(C, chain): the conjunction of C applied to every
// window. Propagation recomputes the forward/backward sets from scratch on
// each call; overlap joins go through an index keyed by the overlap value
// tuple, one per direction per pair.
class SlideConstraint : public Propagator {
  public:
    SlideConstraint(WindowChain chain, SlidSpec spec);

    bool propagate(Model& m) override;
    std::span<const VarId> scope() const override { return chain_.variables(); }
    bool accepts(std::span<const int> assignment) const override;

    const WindowChain& chain() const { return chain_; }
    const SlidSpec& spec() const { return spec_; }
    const PropagationStats& stats() const { return stats_; }

    // The two DP passes plus the support intersection, without pruning.
    // Exposed so tests can inspect F/B/S directly.
    SupportSets compute_supports(const Model& m) const;

  private:
    WindowChain chain_;
    SlidSpec spec_;
    mutable PropagationStats stats_;
};

// Values at var's position across the support tuples of the first window
// containing it, sorted. Empty after a failed computation.
std::vector<int> projection(const SupportSets& s, const WindowChain& chain, VarId var);

// The weak baseline: each window posted as an independent single-window
// slide, i.e. per-window GAC with no chain joins.
std::vector<std::unique_ptr<SlideConstraint>> decompose(const WindowChain& chain,
                                                        const SlidSpec& spec);

} // namespace slidekit

#endif
