#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "cyclight/synth/counts.hpp"

namespace cyclight::synth {

struct SpawnEvent {
    std::uint32_t time_s = 0;
    sim::LaneId lane = 0;
    sim::Approach destination = sim::Approach::N;

    bool operator==(const SpawnEvent&) const = default;
};

struct TraceMeta {
    std::uint64_t seed = 0;
    double bike_coeff = 1.0;
    std::uint64_t profile_hash = 0;
    int start_hour = 0;
    std::uint32_t duration_s = 0;
};

/// A concrete spawn-event sequence. Replaying one trace under different
/// controllers yields identical demand.
struct TrafficTrace {
    TraceMeta meta;
    std::vector<SpawnEvent> events;  // times non-decreasing

    /// Identity used to guard comparisons: hash of the meta fields.
    std::string id() const;
};

/// Draw the per-second Poisson arrivals for every lane over
/// [start_hour*3600, start_hour*3600 + duration_s), bike-lane intensities
/// scaled by bike_coeff. Event times are relative to the window start.
/// Destinations are uniform over the two legal exits.
TrafficTrace synthesize_trace(const CountProfile& profile, int start_hour,
                              std::uint32_t duration_s, std::uint64_t seed, double bike_coeff);

void save_trace(const TrafficTrace& trace, const std::filesystem::path& path);
TrafficTrace load_trace(const std::filesystem::path& path);

}  // namespace cyclight::synth
