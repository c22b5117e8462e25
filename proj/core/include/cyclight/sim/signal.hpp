#pragma once

#include <array>

#include "cyclight/sim/types.hpp"

namespace cyclight::sim {

enum class Light : std::uint8_t { Red = 0, Orange = 1, Green = 2 };

/// Per-lane indication for one simulation second.
struct SignalIndication {
    std::array<Light, kNumLanes> lanes{};  // value-initialized to Red

    Light at(LaneId l) const { return lanes[static_cast<std::size_t>(l)]; }
    void set(LaneId l, Light c) { lanes[static_cast<std::size_t>(l)] = c; }

    bool operator==(const SignalIndication&) const = default;
};

inline SignalIndication all_red() { return SignalIndication{}; }

}  // namespace cyclight::sim
