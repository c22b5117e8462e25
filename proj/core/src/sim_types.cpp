#include "cyclight/sim/types.hpp"

#include <cmath>

namespace cyclight::sim {

namespace {
constexpr std::array<std::string_view, 4> kApproachNames{"N", "S", "E", "W"};
constexpr std::array<std::string_view, 8> kLaneNames{"N_car", "N_bike", "S_car", "S_bike",
                                                     "E_car", "E_bike", "W_car", "W_bike"};
}  // namespace

std::string_view approach_name(Approach a) { return kApproachNames[static_cast<int>(a)]; }

std::string_view lane_name(LaneId l) { return kLaneNames[static_cast<std::size_t>(l)]; }

LaneId parse_lane(std::string_view name) {
    for (int i = 0; i < kNumLanes; ++i) {
        if (kLaneNames[static_cast<std::size_t>(i)] == name) return i;
    }
    throw TraceError("unknown lane id: " + std::string(name));
}

Approach parse_approach(std::string_view name) {
    for (int i = 0; i < kNumApproaches; ++i) {
        if (kApproachNames[static_cast<std::size_t>(i)] == name) return static_cast<Approach>(i);
    }
    throw TraceError("unknown road side: " + std::string(name));
}

void VehicleType::validate() const {
    if (max_speed_mps <= 0 || accel_mps2 <= 0 || decel_mps2 <= 0 || length_m <= 0 ||
        min_gap_m <= 0) {
        throw ConfigError("vehicle kinematic parameters must be strictly positive");
    }
}

VehicleType default_car() {
    return VehicleType{LaneKind::Car, 13.89, 2.6, 4.5, 5.0, 2.5};
}

VehicleType default_bike() {
    return VehicleType{LaneKind::Bike, 5.56, 1.2, 3.0, 1.6, 0.5};
}

void IntersectionLayout::validate() const {
    if (approach_length_m <= 0 || cell_length_m <= 0) {
        throw ConfigError("layout lengths must be positive");
    }
    const double ratio = approach_length_m / cell_length_m;
    if (std::abs(ratio - std::round(ratio)) > 1e-9) {
        throw ConfigError("cell length must divide the approach length exactly");
    }
}

}  // namespace cyclight::sim
