#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "cyclight/errors.hpp"

namespace cyclight::sim {

/// Compass side of the junction. Used both for the four incoming approaches
/// and for the four outgoing roads (named by the side they leave toward).
enum class Approach : std::uint8_t { N = 0, S = 1, E = 2, W = 3 };

enum class LaneKind : std::uint8_t { Car = 0, Bike = 1 };

/// Incoming lanes are indexed 0..7 in the fixed order
/// [N-car, N-bike, S-car, S-bike, E-car, E-bike, W-car, W-bike].
/// The same order is used for signal indications and observation rows.
using LaneId = int;

inline constexpr int kNumLanes = 8;
inline constexpr int kNumApproaches = 4;

/// A vehicle counts as waiting below 0.5 km/h.
inline constexpr double kWaitingSpeedMps = 0.5 / 3.6;

constexpr LaneId lane_id(Approach a, LaneKind k) {
    return static_cast<int>(a) * 2 + static_cast<int>(k);
}
constexpr Approach lane_approach(LaneId l) { return static_cast<Approach>(l / 2); }
constexpr LaneKind lane_kind(LaneId l) { return static_cast<LaneKind>(l % 2); }

std::string_view approach_name(Approach a);
std::string_view lane_name(LaneId l);
LaneId parse_lane(std::string_view name);        // throws TraceError on unknown names
Approach parse_approach(std::string_view name);  // throws TraceError

/// Exit side reached by continuing straight. Traffic drives on the right and
/// left turns are banned, so each lane has exactly two legal destinations.
constexpr Approach straight_exit(Approach from) {
    switch (from) {
        case Approach::N: return Approach::S;
        case Approach::S: return Approach::N;
        case Approach::E: return Approach::W;
        case Approach::W: return Approach::E;
    }
    return Approach::N;
}

/// Exit side reached by turning right.
constexpr Approach right_exit(Approach from) {
    switch (from) {
        case Approach::N: return Approach::W;
        case Approach::S: return Approach::E;
        case Approach::E: return Approach::N;
        case Approach::W: return Approach::S;
    }
    return Approach::N;
}

constexpr bool is_legal_destination(Approach from, Approach dest) {
    return dest == straight_exit(from) || dest == right_exit(from);
}

struct VehicleType {
    LaneKind kind = LaneKind::Car;
    double max_speed_mps = 0;
    double accel_mps2 = 0;
    double decel_mps2 = 0;
    double length_m = 0;
    double min_gap_m = 0;

    void validate() const;
};

/// Defaults mirror common microsimulation parameter sets.
VehicleType default_car();
VehicleType default_bike();

struct Vehicle {
    std::uint64_t id = 0;
    LaneKind kind = LaneKind::Car;
    /// Front-bumper position: distance to the stop line on incoming lanes,
    /// distance past the junction on outgoing lanes. Meters.
    double pos_m = 0;
    double speed_mps = 0;
    /// Distance moved in the last step, for swept detector checks.
    double last_move_m = 0;
    Approach destination = Approach::N;
    std::uint32_t spawn_time_s = 0;
    std::uint32_t waiting_time_s = 0;
};

struct IntersectionLayout {
    double approach_length_m = 150.0;
    double cell_length_m = 5.0;

    int cells() const { return static_cast<int>(approach_length_m / cell_length_m); }

    void validate() const;
};

}  // namespace cyclight::sim
