#pragma once

#include <cstddef>
#include <vector>

#include "cyclight/sim/state_tensor.hpp"
#include "cyclight/util/rng.hpp"

namespace cyclight::drl {

/// One decision-point experience. The reward is stored already scaled.
struct Transition {
    sim::StateTensor s;
    int action = 0;
    sim::StateTensor s_next;
    double reward = 0.0;
    bool done = false;
};

/// Fixed-capacity FIFO of transitions; once full, pushing evicts the oldest.
class ReplayBuffer {
  public:
    explicit ReplayBuffer(std::size_t capacity = 25000) : capacity_(capacity) {
        data_.reserve(capacity);
    }

    void push(Transition t) {
        if (data_.size() < capacity_) {
            data_.push_back(std::move(t));
        } else {
            data_[head_] = std::move(t);
            head_ = (head_ + 1) % capacity_;
        }
    }

    std::size_t size() const { return data_.size(); }
    std::size_t capacity() const { return capacity_; }

    /// Index 0 is the oldest stored transition.
    const Transition& at(std::size_t i) const { return data_[(head_ + i) % data_.size()]; }

    const Transition& sample(Rng& rng) const {
        return at(static_cast<std::size_t>(rng.uniform_int(data_.size())));
    }

  private:
    std::size_t capacity_;
    std::size_t head_ = 0;
    std::vector<Transition> data_;
};

}  // namespace cyclight::drl
