#pragma once

#include <cmath>
#include <cstdint>

namespace cyclight::drl {

/// Raw reward: minus the squared number of waiting vehicles.
inline double compute_reward(int waiting_bikes, int waiting_cars) {
    const double w = waiting_bikes + waiting_cars;
    return -(w * w);
}

/// Normalizes rewards by |r_mean|, the absolute running mean of every raw
/// reward seen so far. The divisor snapshot only moves at episode ends, so
/// stored transitions within an episode share one scale. Dividing by the
/// absolute value keeps scaled rewards negative.
class RewardScaler {
  public:
    void record(double raw) {
        sum_ += raw;
        ++count_;
    }

    void end_episode() {
        if (count_ == 0) return;
        const double mean = sum_ / static_cast<double>(count_);
        divisor_ = std::abs(mean);
        if (divisor_ == 0.0) divisor_ = 1.0;
        has_snapshot_ = true;
    }

    double scale(double raw) const { return raw / divisor_; }

    double divisor() const { return divisor_; }
    bool has_snapshot() const { return has_snapshot_; }
    double sum() const { return sum_; }
    std::uint64_t count() const { return count_; }

    void restore(double sum, std::uint64_t count, double divisor, bool has_snapshot) {
        sum_ = sum;
        count_ = count;
        divisor_ = divisor;
        has_snapshot_ = has_snapshot;
    }

  private:
    double sum_ = 0.0;
    std::uint64_t count_ = 0;
    double divisor_ = 1.0;
    bool has_snapshot_ = false;
};

}  // namespace cyclight::drl
