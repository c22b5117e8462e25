#include "cyclight/synth/trace.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cyclight/errors.hpp"
#include "cyclight/util/fnv.hpp"
#include "cyclight/util/rng.hpp"

namespace cyclight::synth {

std::string TrafficTrace::id() const {
    Fnv1a h;
    h.add(meta.seed);
    h.add(meta.bike_coeff);
    h.add(meta.profile_hash);
    h.add(meta.start_hour);
    h.add(meta.duration_s);
    return to_hex(h.value());
}

TrafficTrace synthesize_trace(const CountProfile& profile, int start_hour,
                              std::uint32_t duration_s, std::uint64_t seed, double bike_coeff) {
    if (duration_s == 0) throw ConfigError("trace duration must be positive");
    if (bike_coeff <= 0) throw ConfigError("bike coefficient must be positive");
    if (start_hour < 0 || start_hour >= CountProfile::kHours) {
        throw ConfigError("start hour out of range");
    }

    TrafficTrace trace;
    trace.meta = TraceMeta{seed, bike_coeff, profile.hash(), start_hour, duration_s};
    Rng rng(seed);
    const int offset_s = start_hour * 3600;
    for (std::uint32_t t = 0; t < duration_s; ++t) {
        for (sim::LaneId lane = 0; lane < sim::kNumLanes; ++lane) {
            double lambda = lambda_at(profile, lane, offset_s + static_cast<int>(t));
            if (sim::lane_kind(lane) == sim::LaneKind::Bike) lambda *= bike_coeff;
            if (lambda <= 0) continue;
            const std::uint32_t n = rng.poisson(lambda);
            for (std::uint32_t i = 0; i < n; ++i) {
                const sim::Approach from = sim::lane_approach(lane);
                const sim::Approach dest =
                    rng.uniform_int(2) == 0 ? sim::straight_exit(from) : sim::right_exit(from);
                trace.events.push_back(SpawnEvent{t, lane, dest});
            }
        }
    }
    return trace;
}

void save_trace(const TrafficTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw TraceError("cannot write trace file: " + path.string());
    char header[192];
    std::snprintf(header, sizeof(header),
                  "#cyclight-trace v1 seed=%" PRIu64 " coeff=%.6g profile=%s start_hour=%d "
                  "duration_s=%u\n",
                  trace.meta.seed, trace.meta.bike_coeff,
                  to_hex(trace.meta.profile_hash).c_str(), trace.meta.start_hour,
                  trace.meta.duration_s);
    out << header;
    for (const SpawnEvent& e : trace.events) {
        out << e.time_s << "," << sim::lane_name(e.lane) << ","
            << (sim::lane_kind(e.lane) == sim::LaneKind::Bike ? "bike" : "car") << ","
            << sim::approach_name(e.destination) << "\n";
    }
}

TrafficTrace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw TraceError("cannot open trace file: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("#cyclight-trace v1 ", 0) != 0) {
        throw TraceError("missing trace header in " + path.string());
    }

    TrafficTrace trace;
    {
        std::stringstream header(line.substr(std::string("#cyclight-trace v1 ").size()));
        std::string token;
        while (header >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos) throw TraceError("bad trace header token: " + token);
            const std::string key = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            if (key == "seed") {
                trace.meta.seed = std::stoull(value);
            } else if (key == "coeff") {
                trace.meta.bike_coeff = std::stod(value);
            } else if (key == "profile") {
                trace.meta.profile_hash = std::stoull(value, nullptr, 16);
            } else if (key == "start_hour") {
                trace.meta.start_hour = std::stoi(value);
            } else if (key == "duration_s") {
                trace.meta.duration_s = static_cast<std::uint32_t>(std::stoul(value));
            } else {
                throw TraceError("unknown trace header key: " + key);
            }
        }
    }

    int line_no = 1;
    std::uint32_t last_time = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string time_s, lane_s, kind_s, dest_s;
        if (!std::getline(ss, time_s, ',') || !std::getline(ss, lane_s, ',') ||
            !std::getline(ss, kind_s, ',') || !std::getline(ss, dest_s)) {
            throw TraceError("bad trace row at " + path.string() + ":" +
                             std::to_string(line_no));
        }
        SpawnEvent e;
        e.time_s = static_cast<std::uint32_t>(std::stoul(time_s));
        e.lane = sim::parse_lane(lane_s);
        e.destination = sim::parse_approach(dest_s);
        const bool is_bike = sim::lane_kind(e.lane) == sim::LaneKind::Bike;
        if (kind_s != (is_bike ? "bike" : "car")) {
            throw TraceError("vehicle type does not match lane at " + path.string() + ":" +
                             std::to_string(line_no));
        }
        if (e.time_s < last_time) {
            throw TraceError("trace times must be non-decreasing at " + path.string() + ":" +
                             std::to_string(line_no));
        }
        last_time = e.time_s;
        trace.events.push_back(e);
    }
    return trace;
}

}  // namespace cyclight::synth
