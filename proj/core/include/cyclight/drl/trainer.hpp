#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "cyclight/drl/checkpoint.hpp"
#include "cyclight/drl/config.hpp"
#include "cyclight/drl/network.hpp"
#include "cyclight/sim/types.hpp"
#include "cyclight/synth/counts.hpp"

namespace cyclight::drl {

struct TrainPaths {
    std::filesystem::path checkpoint;  // empty disables checkpointing
    std::filesystem::path log_csv;     // empty disables the training log
};

struct EpisodeRow {
    std::uint64_t episode = 0;
    std::uint64_t actions = 0;  // cumulative
    double mean_raw_reward = 0;
    double mean_loss = 0;  // 0 before learning starts
    double epsilon = 0;
};

struct TrainResult {
    std::uint64_t actions = 0;
    std::uint64_t episodes = 0;
};

/// Episode-driven 3DQN training: each episode spawns six hours of demand
/// from a random window of the count profile and runs until the map drains.
/// Transitions are collected at decision points; learning happens at episode
/// ends once the pretraining action count is reached; the target network is
/// hard-synced on the action counter.
class Trainer {
  public:
    Trainer(const sim::IntersectionLayout& layout, const sim::VehicleType& car,
            const sim::VehicleType& bike, synth::CountProfile profile, TrainConfig cfg,
            std::uint64_t seed);

    /// Continue from a checkpoint (the stored config and counters win; the
    /// replay buffer restarts empty).
    Trainer(const sim::IntersectionLayout& layout, const sim::VehicleType& car,
            const sim::VehicleType& bike, synth::CountProfile profile,
            const Checkpoint& ckpt);

    using EpisodeCallback = std::function<void(const EpisodeRow&)>;

    TrainResult run(const TrainPaths& paths, const EpisodeCallback& on_episode = nullptr);

    const QNetwork& network() const { return net_; }
    const QNetwork& target_network() const { return target_; }
    std::uint64_t actions() const { return actions_; }

    Checkpoint make_checkpoint() const;

  private:
    struct Impl;
    void learn_phase(std::uint64_t steps, double& loss_sum, std::uint64_t& loss_count);

    sim::IntersectionLayout layout_;
    sim::VehicleType car_;
    sim::VehicleType bike_;
    synth::CountProfile profile_;
    TrainConfig cfg_;
    std::uint64_t seed_;

    QNetwork net_;
    QNetwork target_;
    Adam adam_;
    ReplayBuffer buffer_;
    RewardScaler scaler_;
    Rng rng_;
    std::uint64_t actions_ = 0;
    std::uint64_t episodes_ = 0;

    BatchWorkspace ws_a_, ws_b_;
    std::vector<double> grads_;
};

}  // namespace cyclight::drl
