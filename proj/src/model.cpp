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

#include "slidekit/model.hpp"

#include <algorithm>
#include <cassert>

namespace slidekit {

Domain::Domain(int lower, int upper) : lower_(lower), upper_(upper) {
    long long width = static_cast<long long>(upper) - lower + 1;
    if (width < 1)
        throw std::invalid_argument("Domain: lower > upper");
    if (width > kMaxSize)
        throw std::invalid_argument("Domain: range wider than 2^16 values");
    size_ = static_cast<int>(width);
    dense_.resize(static_cast<size_t>(size_));
    pos_.resize(static_cast<size_t>(size_));
    for (int i = 0; i < size_; ++i) {
        dense_[static_cast<size_t>(i)] = lower + i;
        pos_[static_cast<size_t>(i)] = i;
    }
}

int Domain::min() const {
    assert(size_ > 0);
    return *std::min_element(dense_.begin(), dense_.begin() + size_);
}

int Domain::max() const {
    assert(size_ > 0);
    return *std::max_element(dense_.begin(), dense_.begin() + size_);
}

std::vector<int> Domain::sorted_values() const {
    std::vector<int> out(dense_.begin(), dense_.begin() + size_);
    std::sort(out.begin(), out.end());
    return out;
}

bool Domain::remove(int v, int& old_index) {
    if (!contains(v))
        return false;
    int i = pos_[static_cast<size_t>(v - lower_)];
    int last = size_ - 1;
    int w = dense_[static_cast<size_t>(last)];
    dense_[static_cast<size_t>(i)] = w;
    pos_[static_cast<size_t>(w - lower_)] = i;
    dense_[static_cast<size_t>(last)] = v;
    pos_[static_cast<size_t>(v - lower_)] = last;
    size_ = last;
    old_index = i;
    return true;
}

void Domain::unremove(int v, int old_index) {
    // Exact inverse of remove(); valid only when undone in reverse order.
    int last = size_;
    int w = dense_[static_cast<size_t>(old_index)];
    dense_[static_cast<size_t>(old_index)] = v;
    pos_[static_cast<size_t>(v - lower_)] = old_index;
    dense_[static_cast<size_t>(last)] = w;
    pos_[static_cast<size_t>(w - lower_)] = last;
    size_ = last + 1;
}

VarId Model::new_variable(int lower, int upper, std::string name) {
    if (lower > upper)
        throw std::invalid_argument("new_variable: lower > upper");
    VarId id = static_cast<VarId>(vars_.size());
    if (name.empty())
        name = "_v" + std::to_string(id);
    vars_.push_back(Variable{id, std::move(name), Domain(lower, upper)});
    watchers_.emplace_back();
    return id;
}

bool Model::remove_value(VarId v, int value) {
    if (failed_)
        return false;
    Domain& d = vars_[static_cast<size_t>(v)].domain;
    int old_index = -1;
    if (!d.remove(value, old_index))
        return false;
    trail_.push_back(TrailEntry{v, value, old_index});
    ++removal_count_;
    if (d.empty()) {
        failed_ = true;
        return true;
    }
    for (int c : watchers_[static_cast<size_t>(v)])
        if (c != running_)
            schedule(c);
    return true;
}

bool Model::assign(VarId v, int value) {
    const Domain& d = domain(v);
    if (!d.contains(value)) {
        failed_ = true;
        return false;
    }
    std::vector<int> snapshot(d.values().begin(), d.values().end());
    for (int w : snapshot)
        if (w != value)
            remove_value(v, w);
    return !failed_;
}

void Model::push_level() {
    level_marks_.push_back(trail_.size());
}

void Model::pop_level() {
    if (level_marks_.empty())
        throw std::logic_error("pop_level: no open level");
    size_t mark = level_marks_.back();
    level_marks_.pop_back();
    while (trail_.size() > mark) {
        const TrailEntry& e = trail_.back();
        vars_[static_cast<size_t>(e.var)].domain.unremove(e.value, e.old_index);
        trail_.pop_back();
    }
    failed_ = false;
    queue_.clear();
    std::fill(queued_.begin(), queued_.end(), 0);
}

int Model::post(std::unique_ptr<Propagator> p) {
    for (VarId v : p->scope())
        if (v < 0 || v >= num_variables())
            throw std::invalid_argument("post: constraint scope refers to unknown variable");
    int idx = static_cast<int>(props_.size());
    props_.push_back(std::move(p));
    queued_.push_back(0);
    for (VarId v : props_.back()->scope())
        watchers_[static_cast<size_t>(v)].push_back(idx);
    schedule(idx);
    return idx;
}

void Model::schedule(int constraint_index) {
    if (queued_[static_cast<size_t>(constraint_index)])
        return;
    queued_[static_cast<size_t>(constraint_index)] = 1;
    queue_.push_back(constraint_index);
}

bool Model::fixpoint() {
    while (!failed_ && !queue_.empty()) {
        int c = queue_.front();
        queue_.pop_front();
        queued_[static_cast<size_t>(c)] = 0;
        running_ = c;
        ++propagation_calls_;
        bool ok = false;
        try {
            ok = props_[static_cast<size_t>(c)]->propagate(*this);
        } catch (...) {
            running_ = -1;
            throw;
        }
        running_ = -1;
        if (!ok)
            failed_ = true;
    }
    if (failed_) {
        queue_.clear();
        std::fill(queued_.begin(), queued_.end(), 0);
        return false;
    }
    return true;
}

} // namespace slidekit
