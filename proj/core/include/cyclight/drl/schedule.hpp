#pragma once

#include <algorithm>
#include <cstdint>

#include "cyclight/drl/config.hpp"

namespace cyclight::drl {

/// Linear epsilon decay: eps_start at action 0, eps_end from final_action on.
inline double epsilon_value(const TrainConfig& cfg, std::uint64_t actions_taken) {
    const double progress =
        static_cast<double>(actions_taken) / static_cast<double>(cfg.final_action);
    return std::max(cfg.eps_end, cfg.eps_start - (cfg.eps_start - cfg.eps_end) * progress);
}

}  // namespace cyclight::drl
