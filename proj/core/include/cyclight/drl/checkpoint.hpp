#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "cyclight/drl/config.hpp"
#include "cyclight/drl/network.hpp"
#include "cyclight/util/rng.hpp"

namespace cyclight::drl {

/// Everything needed to evaluate a trained agent or continue training:
/// both parameter sets, optimizer state, counters, reward-scaler state and
/// the training RNG. The replay buffer is not persisted.
struct Checkpoint {
    NetDims dims;
    TrainConfig cfg;
    std::uint64_t profile_hash = 0;
    std::uint64_t seed = 0;

    std::vector<double> params;
    std::vector<double> target_params;
    std::vector<double> adam_m;
    std::vector<double> adam_v;
    std::uint64_t adam_t = 0;

    std::uint64_t action_count = 0;
    std::uint64_t episode_count = 0;

    double scaler_sum = 0;
    std::uint64_t scaler_count = 0;
    double scaler_divisor = 1;
    bool scaler_has_snapshot = false;

    Rng::State rng_state{};
};

void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace cyclight::drl
