#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "cyclight/sim/signal.hpp"
#include "cyclight/sim/state_tensor.hpp"
#include "cyclight/sim/types.hpp"

namespace cyclight::sim {

struct StepReport {
    int arrivals = 0;    // vehicles placed on the map this step
    int departures = 0;  // vehicles that reached the end of an outgoing road
    int waiting_bikes = 0;
    int waiting_cars = 0;
};

enum class SpawnResult { Placed, Queued };

/// Final record of one vehicle's passage, kept for metrics.
struct VehicleRecord {
    std::uint64_t id = 0;
    LaneKind kind = LaneKind::Car;
    std::uint32_t spawn_time_s = 0;
    std::int64_t depart_time_s = -1;  // -1 while still on the map
    std::uint32_t waiting_time_s = 0;
};

/// Largest next speed from which a full stop within `gap` meters is possible
/// under the discrete dynamics (speed held for one 1 s step, then reduced by
/// `decel` each following step).
double stop_speed(double gap_m, double decel_mps2);

/// One-second car-following update. Returns the vehicle's next speed given
/// an optional leader gap (bumper-to-bumper minus the follower's min gap),
/// the signal ahead and the distance to the stop line. `may_clear_orange`
/// grants the front vehicle the right to pass on orange when it can no
/// longer brake to rest at its comfortable deceleration.
double next_speed(const VehicleType& vt, double current_speed,
                  std::optional<double> leader_gap_m, Light signal, double dist_to_stop_m,
                  bool may_clear_orange);

/// Deterministic 1-second-step microsimulation of a two-axis intersection
/// with a car and a bike lane per approach, plus one two-lane outgoing road
/// per side. Signal indications are supplied by the caller each step.
class Simulation {
  public:
    Simulation(const IntersectionLayout& layout, const VehicleType& car, const VehicleType& bike);

    /// Insert a vehicle at the approach edge, or queue it off-map per lane
    /// (FIFO) until the entry region is free. Throws RouteError when the
    /// destination would require a left turn or a U-turn.
    SpawnResult spawn(LaneId lane, Approach destination);

    /// Advance one second under the given indication.
    StepReport step(const SignalIndication& indication);

    StateTensor observe() const;

    /// (waiting bikes, waiting cars) over all on-map vehicles, strict
    /// speed < 0.5 km/h.
    std::pair<int, int> waiting_counts() const;

    std::uint32_t time_s() const { return time_s_; }
    const IntersectionLayout& layout() const { return layout_; }
    const VehicleType& vehicle_type(LaneKind k) const {
        return k == LaneKind::Car ? car_ : bike_;
    }

    int vehicles_on_map() const;
    int pending_count() const;
    std::uint64_t total_placed() const { return placed_; }
    std::uint64_t total_departed() const { return departed_; }

    /// Front vehicle first (closest to the stop line).
    const std::vector<Vehicle>& incoming_lane(LaneId l) const { return incoming_[l]; }
    /// Front vehicle first (furthest from the junction).
    const std::vector<Vehicle>& outgoing_lane(Approach side, LaneKind k) const {
        return outgoing_[static_cast<int>(side)][static_cast<int>(k)];
    }

    /// Records for all vehicles ever placed, in placement order. Vehicles
    /// still on the map carry their waiting time so far and no depart time.
    std::vector<VehicleRecord> records() const;

    /// Hash over the full dynamic state, for determinism checks.
    std::uint64_t state_hash() const;

  private:
    bool entry_free(LaneId lane, const VehicleType& vt) const;
    void place(LaneId lane, LaneKind kind, Approach destination);
    void flush_pending();

    IntersectionLayout layout_;
    VehicleType car_;
    VehicleType bike_;
    std::uint32_t time_s_ = 0;

    std::vector<Vehicle> incoming_[kNumLanes];
    std::vector<Vehicle> outgoing_[kNumApproaches][2];
    struct Pending {
        LaneKind kind;
        Approach destination;
    };
    std::deque<Pending> pending_[kNumLanes];

    std::uint64_t next_id_ = 0;
    std::uint64_t placed_ = 0;
    std::uint64_t departed_ = 0;
    int arrivals_this_step_ = 0;

    std::vector<VehicleRecord> finished_;
};

}  // namespace cyclight::sim
