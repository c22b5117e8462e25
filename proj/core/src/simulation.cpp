#include "cyclight/sim/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "cyclight/util/fnv.hpp"

namespace cyclight::sim {

double stop_speed(double gap_m, double decel_mps2) {
    if (gap_m <= 0) return 0.0;
    const double b = decel_mps2;
    // Largest v with sum_{i=0..n} (v - i*b) <= gap, n = floor(v/b).
    // On v in [n*b, (n+1)*b) the distance is (n+1)*(v - b*n/2), so the
    // bracket index satisfies (n+1)*n*b/2 <= gap < (n+2)*(n+1)*b/2.
    double n = std::floor((std::sqrt(1.0 + 8.0 * gap_m / b) - 1.0) / 2.0);
    if (n < 0) n = 0;
    while (n > 0 && (n + 1.0) * n * b / 2.0 > gap_m) n -= 1.0;
    while ((n + 2.0) * (n + 1.0) * b / 2.0 <= gap_m) n += 1.0;
    return gap_m / (n + 1.0) + b * n / 2.0;
}

double next_speed(const VehicleType& vt, double current_speed,
                  std::optional<double> leader_gap_m, Light signal, double dist_to_stop_m,
                  bool may_clear_orange) {
    double v = std::min(current_speed + vt.accel_mps2, vt.max_speed_mps);
    if (leader_gap_m) {
        v = std::min(v, stop_speed(*leader_gap_m, vt.decel_mps2));
    }
    bool must_stop = false;
    if (signal == Light::Red) {
        must_stop = true;
    } else if (signal == Light::Orange) {
        // Stop only when braking to rest before the line is still possible at
        // the comfortable deceleration; otherwise the vehicle clears. Vehicles
        // that are not at the front of their lane never clear.
        const bool can_stop = stop_speed(dist_to_stop_m, vt.decel_mps2) >=
                              current_speed - vt.decel_mps2;
        must_stop = can_stop || !may_clear_orange;
    }
    if (must_stop) {
        v = std::min(v, stop_speed(dist_to_stop_m, vt.decel_mps2));
    }
    return std::max(v, 0.0);
}

Simulation::Simulation(const IntersectionLayout& layout, const VehicleType& car,
                       const VehicleType& bike)
    : layout_(layout), car_(car), bike_(bike) {
    layout_.validate();
    car_.validate();
    bike_.validate();
    if (bike_.max_speed_mps >= car_.max_speed_mps) {
        throw ConfigError("bike max speed must be below car max speed");
    }
    if (car_.kind != LaneKind::Car || bike_.kind != LaneKind::Bike) {
        throw ConfigError("vehicle types assigned to the wrong lane kinds");
    }
}

bool Simulation::entry_free(LaneId lane, const VehicleType& vt) const {
    const auto& q = incoming_[lane];
    if (q.empty()) return true;
    const Vehicle& rear = q.back();  // largest pos, nearest the entry edge
    const VehicleType& rt = vehicle_type(rear.kind);
    const double gap = layout_.approach_length_m - rear.pos_m - rt.length_m;
    return gap >= vt.min_gap_m;
}

void Simulation::place(LaneId lane, LaneKind kind, Approach destination) {
    Vehicle v;
    v.id = next_id_++;
    v.kind = kind;
    v.pos_m = layout_.approach_length_m;
    v.speed_mps = vehicle_type(kind).max_speed_mps;
    v.destination = destination;
    v.spawn_time_s = time_s_;
    incoming_[lane].push_back(v);
    ++placed_;
    ++arrivals_this_step_;
}

SpawnResult Simulation::spawn(LaneId lane, Approach destination) {
    const Approach from = lane_approach(lane);
    if (!is_legal_destination(from, destination)) {
        throw RouteError(std::string("illegal destination ") +
                         std::string(approach_name(destination)) + " from lane " +
                         std::string(lane_name(lane)));
    }
    const LaneKind kind = lane_kind(lane);
    if (pending_[lane].empty() && entry_free(lane, vehicle_type(kind))) {
        place(lane, kind, destination);
        return SpawnResult::Placed;
    }
    pending_[lane].push_back(Pending{kind, destination});
    return SpawnResult::Queued;
}

void Simulation::flush_pending() {
    for (LaneId lane = 0; lane < kNumLanes; ++lane) {
        auto& q = pending_[lane];
        while (!q.empty() && entry_free(lane, vehicle_type(q.front().kind))) {
            place(lane, q.front().kind, q.front().destination);
            q.pop_front();
        }
    }
}

StepReport Simulation::step(const SignalIndication& indication) {
    arrivals_this_step_ = 0;
    flush_pending();

    // All next speeds are computed from the pre-step snapshot, then every
    // position is integrated at once.
    std::vector<double> new_speeds[kNumLanes];
    for (LaneId lane = 0; lane < kNumLanes; ++lane) {
        const auto& q = incoming_[lane];
        auto& speeds = new_speeds[lane];
        speeds.resize(q.size());
        const Light light = indication.at(lane);
        for (std::size_t i = 0; i < q.size(); ++i) {
            const Vehicle& veh = q[i];
            const VehicleType& vt = vehicle_type(veh.kind);
            std::optional<double> gap;
            if (i > 0) {
                const Vehicle& leader = q[i - 1];
                const VehicleType& lt = vehicle_type(leader.kind);
                gap = veh.pos_m - leader.pos_m - lt.length_m - vt.min_gap_m;
            } else {
                // The front vehicle also respects the tail of its destination
                // lane across the junction, which doubles as a spillback guard.
                const auto& out =
                    outgoing_[static_cast<int>(veh.destination)][static_cast<int>(veh.kind)];
                if (!out.empty()) {
                    const Vehicle& tail = out.back();
                    const VehicleType& tt = vehicle_type(tail.kind);
                    gap = veh.pos_m + tail.pos_m - tt.length_m - vt.min_gap_m;
                }
            }
            const bool front = i == 0;
            speeds[i] = next_speed(vt, veh.speed_mps, gap, light, veh.pos_m, front);
        }
    }

    StepReport report;
    report.arrivals = arrivals_this_step_;

    // Outgoing lanes first: advance, then drop vehicles past the end.
    for (auto& side : outgoing_) {
        for (auto& lane : side) {
            for (std::size_t i = 0; i < lane.size(); ++i) {
                Vehicle& veh = lane[i];
                const VehicleType& vt = vehicle_type(veh.kind);
                std::optional<double> gap;
                if (i > 0) {
                    const Vehicle& leader = lane[i - 1];
                    const VehicleType& lt = vehicle_type(leader.kind);
                    gap = leader.pos_m - lt.length_m - veh.pos_m - vt.min_gap_m;
                }
                const double v = next_speed(vt, veh.speed_mps, gap, Light::Green,
                                            layout_.approach_length_m + 1.0, false);
                veh.last_move_m = v;
                veh.pos_m += v;
                veh.speed_mps = v;
            }
            while (!lane.empty() && lane.front().pos_m >= layout_.approach_length_m) {
                const Vehicle& veh = lane.front();
                VehicleRecord rec;
                rec.id = veh.id;
                rec.kind = veh.kind;
                rec.spawn_time_s = veh.spawn_time_s;
                rec.depart_time_s = static_cast<std::int64_t>(time_s_) + 1;
                rec.waiting_time_s = veh.waiting_time_s;
                finished_.push_back(rec);
                lane.erase(lane.begin());
                ++departed_;
                ++report.departures;
            }
        }
    }

    // Incoming lanes: integrate, transferring stop-line crossers onto their
    // destination road at unchanged speed.
    for (LaneId lane = 0; lane < kNumLanes; ++lane) {
        auto& q = incoming_[lane];
        std::size_t write = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            Vehicle veh = q[i];
            const double v = new_speeds[lane][i];
            veh.last_move_m = v;
            veh.speed_mps = v;
            veh.pos_m -= v;
            if (veh.pos_m < 0) {
                assert(i == 0 && indication.at(lane) != Light::Red);
                veh.pos_m = -veh.pos_m;
                outgoing_[static_cast<int>(veh.destination)][static_cast<int>(veh.kind)]
                    .push_back(veh);
            } else {
                q[write++] = veh;
            }
        }
        q.resize(write);
    }

    // Waiting time accrues for every on-map vehicle below the threshold.
    auto accrue = [&report](Vehicle& veh) {
        if (veh.speed_mps < kWaitingSpeedMps) {
            ++veh.waiting_time_s;
            if (veh.kind == LaneKind::Bike) {
                ++report.waiting_bikes;
            } else {
                ++report.waiting_cars;
            }
        }
    };
    for (auto& q : incoming_) {
        for (auto& veh : q) accrue(veh);
    }
    for (auto& side : outgoing_) {
        for (auto& lane : side) {
            for (auto& veh : lane) accrue(veh);
        }
    }

    ++time_s_;
    return report;
}

StateTensor Simulation::observe() const {
    StateTensor s(kNumLanes, layout_.cells());
    for (LaneId lane = 0; lane < kNumLanes; ++lane) {
        for (const Vehicle& veh : incoming_[lane]) {
            int cell = static_cast<int>(veh.pos_m / layout_.cell_length_m);
            cell = std::clamp(cell, 0, layout_.cells() - 1);
            const std::size_t idx = s.index(lane, cell);
            s.position[idx] += 1.0f;
            s.speed[idx] += static_cast<float>(veh.speed_mps);
        }
    }
    for (std::size_t i = 0; i < s.position.size(); ++i) {
        if (s.position[i] > 0) s.speed[i] /= s.position[i];
    }
    return s;
}

std::pair<int, int> Simulation::waiting_counts() const {
    int bikes = 0;
    int cars = 0;
    auto count = [&](const Vehicle& veh) {
        if (veh.speed_mps < kWaitingSpeedMps) {
            (veh.kind == LaneKind::Bike ? bikes : cars) += 1;
        }
    };
    for (const auto& q : incoming_) {
        for (const auto& veh : q) count(veh);
    }
    for (const auto& side : outgoing_) {
        for (const auto& lane : side) {
            for (const auto& veh : lane) count(veh);
        }
    }
    return {bikes, cars};
}

int Simulation::vehicles_on_map() const {
    int n = 0;
    for (const auto& q : incoming_) n += static_cast<int>(q.size());
    for (const auto& side : outgoing_) {
        for (const auto& lane : side) n += static_cast<int>(lane.size());
    }
    return n;
}

int Simulation::pending_count() const {
    int n = 0;
    for (const auto& q : pending_) n += static_cast<int>(q.size());
    return n;
}

std::vector<VehicleRecord> Simulation::records() const {
    std::vector<VehicleRecord> all = finished_;
    auto add_live = [&all](const Vehicle& veh) {
        VehicleRecord rec;
        rec.id = veh.id;
        rec.kind = veh.kind;
        rec.spawn_time_s = veh.spawn_time_s;
        rec.depart_time_s = -1;
        rec.waiting_time_s = veh.waiting_time_s;
        all.push_back(rec);
    };
    for (const auto& q : incoming_) {
        for (const auto& veh : q) add_live(veh);
    }
    for (const auto& side : outgoing_) {
        for (const auto& lane : side) {
            for (const auto& veh : lane) add_live(veh);
        }
    }
    std::sort(all.begin(), all.end(),
              [](const VehicleRecord& a, const VehicleRecord& b) { return a.id < b.id; });
    return all;
}

std::uint64_t Simulation::state_hash() const {
    Fnv1a h;
    h.add(time_s_);
    auto add_vehicle = [&h](const Vehicle& veh) {
        h.add(veh.id);
        h.add(veh.kind);
        h.add(veh.pos_m);
        h.add(veh.speed_mps);
        h.add(veh.destination);
        h.add(veh.waiting_time_s);
    };
    for (const auto& q : incoming_) {
        h.add(q.size());
        for (const auto& veh : q) add_vehicle(veh);
    }
    for (const auto& side : outgoing_) {
        for (const auto& lane : side) {
            h.add(lane.size());
            for (const auto& veh : lane) add_vehicle(veh);
        }
    }
    for (const auto& q : pending_) {
        h.add(q.size());
        for (const auto& p : q) {
            h.add(p.kind);
            h.add(p.destination);
        }
    }
    return h.value();
}

}  // namespace cyclight::sim
