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

#ifndef SLIDEKIT_ENCODINGS_HPP
#define SLIDEKIT_ENCODINGS_HPP

#include <map>
#include <memory>
#include <vector>

#include "slidekit/chain.hpp"
#include "slidekit/dfa.hpp"
#include "slidekit/model.hpp"
#include "slidekit/slid_spec.hpp"
#include "slidekit/slide.hpp"

namespace slidekit {

// Output of a reduction to slide: fresh auxiliary variables (already added to
// the model), the window chain and slid spec, and unary boundary
// restrictions. The solution set of {slide + boundary} projected onto the
// original variables equals the semantics of the encoded constraint.
struct EncodingResult {
    std::vector<VarId> aux_vars;
    WindowChain chain;
    SlidSpec spec;
    std::vector<std::pair<VarId, std::vector<int>>> boundary;
};

// |{i : X_i in values}| = count_var. Counters M_1..M_n are interleaved with
// the X's; count_var takes the place of the final counter.
EncodingResult encode_among(Model& m, std::span<const VarId> xs, const std::vector<int>& values,
                            VarId count_var);

// Every window of q consecutive X's contains between lower and upper values
// from the given set. Plain slide, k=q, step 1.
EncodingResult encode_among_seq(Model& m, int lower, int upper, int q,
                                std::span<const VarId> xs, const std::vector<int>& values);

// lower <= sum of every q consecutive X's <= upper.
EncodingResult encode_sliding_sum(Model& m, int lower, int upper, int q,
                                  std::span<const VarId> xs);

// The word X_1..X_n is accepted by the automaton. State variables Q_0..Q_n
// are interleaved with the X's; windows are (Q_{i-1}, X_i, Q_i).
EncodingResult encode_regular(Model& m, const Dfa& dfa, std::span<const VarId> xs);

// Per-value stretch length bounds.
struct StretchBounds {
    int min;
    int max;
};

// Every maximal run of equal values v has length within lengths(v); values
// without an entry are unconstrained. Compiles to a Dfa and delegates to
// encode_regular.
EncodingResult encode_stretch(Model& m, std::span<const VarId> xs,
                              const std::map<int, StretchBounds>& lengths);

// X <=_lex Y over equal-length disjoint sequences. Flags B_1..B_{n+1} track
// "prefixes so far are equal"; windows are (B_i, X_i, Y_i, B_{i+1}).
EncodingResult encode_lex_leq(Model& m, std::span<const VarId> xs, std::span<const VarId> ys);

// The 1's of a 0/1 sequence form one contiguous block (possibly empty).
EncodingResult encode_contiguity(Model& m, std::span<const VarId> xs);

// |{i <= n-k+1 : C(X_i..X_{i+k-1})}| = count_var, with C = spec of arity k.
// Windows (M_i, X_i..X_{i+k-1}, M_{i+1}) of arity k+2 under a counter step;
// running the slide propagator on the result is a complete CardPath
// propagator.
EncodingResult encode_cardpath(Model& m, const SlidSpec& spec, std::span<const VarId> xs,
                               VarId count_var);

// The stretch automaton: states are (value, run length so far) plus a start
// state; run lengths are capped at min(max bound, n).
Dfa stretch_dfa(const std::vector<int>& values, const std::map<int, StretchBounds>& lengths,
                int n);

// Applies the boundary restrictions (which may fail the model) and posts the
// slide constraint, or each window independently when decomposed is set.
// Returns the posted constraint indices.
std::vector<int> post_encoding(Model& m, const EncodingResult& enc, bool decomposed = false);

} // namespace slidekit

#endif
