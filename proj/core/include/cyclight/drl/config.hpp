#pragma once

#include <cstdint>

#include "cyclight/errors.hpp"

namespace cyclight::drl {

/// Training hyperparameters. Defaults are the full-scale values; scaled-down
/// runs override final_action / pretrain_actions / target_update.
struct TrainConfig {
    int batch_size = 128;
    double eps_start = 1.0;
    double eps_end = 0.01;
    std::uint64_t pretrain_actions = 10000;    // actions before the first learning phase
    std::uint64_t final_action = 1500000;      // training stops at this action count
    double gamma = 0.99;
    std::uint64_t target_update = 7500;        // hard target sync period, in actions
    double learning_rate = 0.001;
    int decision_lock_s = 10;
    int episode_spawn_hours = 6;
    std::uint64_t replay_capacity = 25000;
    /// Gradient steps per action taken in the finished episode.
    double grad_steps_per_action = 1.0;
    /// Periodic checkpoint cadence in actions (0 disables).
    std::uint64_t checkpoint_every = 25000;

    void validate() const {
        if (batch_size <= 0 || final_action == 0 || gamma < 0 || gamma >= 1 ||
            learning_rate <= 0 || target_update == 0 || replay_capacity == 0 ||
            decision_lock_s <= 0 || episode_spawn_hours <= 0 || grad_steps_per_action < 0) {
            throw ConfigError("invalid training configuration");
        }
        if (eps_end >= eps_start || eps_start > 1.0 || eps_end < 0.0) {
            throw ConfigError("epsilon schedule must decrease within [0, 1]");
        }
        if (pretrain_actions >= final_action) {
            throw ConfigError("pretrain_actions must be below final_action");
        }
    }
};

}  // namespace cyclight::drl
