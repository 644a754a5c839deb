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

#ifndef SLIDEKIT_MODEL_HPP
#define SLIDEKIT_MODEL_HPP

#include <deque>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidekit {

using VarId = int;

// A full assignment, indexed by VarId.
using Assignment = std::vector<int>;

// Thrown when an enumeration or tuple cap is exceeded. Distinct from domain
// wipeout, which is a Failure outcome and never an exception.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite integer domain backed by a sparse set over the contiguous range
// {lower..upper} given at construction. Membership and removal are O(1),
// iteration is O(size). Removal swaps the value to the tail of the dense
// array; undoing removals in reverse order restores the arrays bit for bit.
class Domain {
  public:
    static constexpr int kMaxSize = 1 << 16;

    Domain(int lower, int upper);

    bool contains(int v) const {
        return v >= lower_ && v <= upper_ && pos_[static_cast<size_t>(v - lower_)] < size_;
    }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool is_singleton() const { return size_ == 1; }

    // The unique value of a singleton domain.
    int value() const { return dense_[0]; }

    int min() const;
    int max() const;

    // Current values in internal (unsorted) order.
    std::span<const int> values() const { return {dense_.data(), static_cast<size_t>(size_)}; }
    std::vector<int> sorted_values() const;

    int original_lower() const { return lower_; }
    int original_upper() const { return upper_; }

  private:
    friend class Model;

    // Removes v; reports its previous dense index so the trail can undo the
    // swap exactly. Returns false when v is not present.
    bool remove(int v, int& old_index);
    void unremove(int v, int old_index);

    int lower_;
    int upper_;
    int size_;
    std::vector<int> dense_;
    std::vector<int> pos_;
};

struct Variable {
    VarId id;
    std::string name;
    Domain domain;
};

class Model;

// A posted constraint. propagate() returns false on failure (domain wipeout);
// prunings stay on the trail either way and the caller pops the level.
class Propagator {
  public:
    virtual ~Propagator() = default;
    virtual bool propagate(Model& m) = 0;
    virtual std::span<const VarId> scope() const = 0;
    // Evaluates the constraint on a full assignment (indexed by VarId).
    // Used by the oracle; must not share machinery with propagate().
    virtual bool accepts(std::span<const int> assignment) const = 0;
};

// The CSP container: variables, posted constraints, a backtrackable trail and
// the propagation queue. Single-threaded mutation; transferable between
// threads when no propagation is in flight.
class Model {
  public:
    Model() = default;
    Model(Model&&) = default;
    Model& operator=(Model&&) = default;
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;

    // Appends a variable with domain {lower..upper}. Rejects lower > upper and
    // ranges wider than Domain::kMaxSize.
    VarId new_variable(int lower, int upper, std::string name = {});

    int num_variables() const { return static_cast<int>(vars_.size()); }
    const Variable& variable(VarId v) const { return vars_[static_cast<size_t>(v)]; }
    const Domain& domain(VarId v) const { return vars_[static_cast<size_t>(v)].domain; }
    const std::string& name(VarId v) const { return vars_[static_cast<size_t>(v)].name; }

    // Removes value from v's domain, recording the change on the trail.
    // Returns whether the domain changed. Wipeout marks the model failed.
    bool remove_value(VarId v, int value);

    // Reduces v's domain to {value}. Fails the model if value is absent.
    bool assign(VarId v, int value);

    void push_level();
    // Restores every domain to its state at the matching push and clears the
    // failure flag. Popping with no open level is a usage error.
    void pop_level();
    int num_levels() const { return static_cast<int>(level_marks_.size()); }

    bool failed() const { return failed_; }
    void fail() { failed_ = true; }

    // Posts a constraint, registers it on its scope and queues it for the
    // next fixpoint. Returns the constraint index.
    int post(std::unique_ptr<Propagator> p);
    int num_constraints() const { return static_cast<int>(props_.size()); }
    Propagator& constraint(int i) { return *props_[static_cast<size_t>(i)]; }
    const Propagator& constraint(int i) const { return *props_[static_cast<size_t>(i)]; }

    // Marks a constraint for re-propagation; duplicates coalesce.
    void schedule(int constraint_index);

    // Drains the queue until no propagator is pending or one fails. On
    // failure the queue is cleared and false returned.
    bool fixpoint();

    // Monotone counters, for search statistics.
    long long removal_count() const { return removal_count_; }
    long long propagation_call_count() const { return propagation_calls_; }

    // Per-window satisfying-tuple cap used by the slide propagator.
    long long tuple_cap() const { return tuple_cap_; }
    void set_tuple_cap(long long cap) { tuple_cap_ = cap; }

  private:
    struct TrailEntry {
        VarId var;
        int value;
        int old_index;
    };

    std::vector<Variable> vars_;
    std::vector<std::unique_ptr<Propagator>> props_;
    std::vector<std::vector<int>> watchers_;
    std::vector<TrailEntry> trail_;
    std::vector<size_t> level_marks_;
    std::deque<int> queue_;
    std::vector<char> queued_;
    int running_ = -1;
    bool failed_ = false;
    long long removal_count_ = 0;
    long long propagation_calls_ = 0;
    long long tuple_cap_ = 1'000'000;
};

} // namespace slidekit

#endif
