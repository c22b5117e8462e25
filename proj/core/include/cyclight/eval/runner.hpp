#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cyclight/ctrl/controllers.hpp"
#include "cyclight/ctrl/sequencer.hpp"
#include "cyclight/sim/simulation.hpp"
#include "cyclight/synth/trace.hpp"

namespace cyclight::eval {

struct RunResult {
    std::string controller;
    std::string trace_id;
    std::vector<sim::VehicleRecord> records;
    std::uint32_t steps = 0;
    std::uint64_t spawn_calls = 0;
    /// Step-wise integral of waiting counts, split by type.
    std::uint64_t waiting_step_sum_bikes = 0;
    std::uint64_t waiting_step_sum_cars = 0;
    std::uint64_t final_state_hash = 0;
};

/// Drives one simulation second at a time: sequencer tick, trace spawns due
/// this second, then the simulation step.
class SimDriver {
  public:
    SimDriver(sim::Simulation& sim, ctrl::Controller& controller,
              const synth::TrafficTrace& trace);

    /// Issue due spawn events and advance one second. Spawn calls are
    /// appended to spawn_log (one "t,lane,kind,dest" line each) when given.
    sim::StepReport tick(std::ostream* spawn_log = nullptr);

    bool trace_exhausted() const { return cursor_ == trace_->events.size(); }
    /// True once the trace is exhausted and no vehicle remains on or off map.
    bool drained() const;

    const ctrl::PhaseSequencer& sequencer() const { return seq_; }
    std::uint64_t spawn_calls() const { return spawn_calls_; }

  private:
    sim::Simulation* sim_;
    ctrl::Controller* controller_;
    ctrl::PhaseSequencer seq_;
    const synth::TrafficTrace* trace_;
    std::size_t cursor_ = 0;
    std::uint64_t spawn_calls_ = 0;
};

/// Replay a trace under a controller. Runs exactly `duration_s` steps when
/// positive, otherwise until the trace is exhausted and the map drains.
RunResult run_trace(const sim::IntersectionLayout& layout, const sim::VehicleType& car,
                    const sim::VehicleType& bike, const synth::TrafficTrace& trace,
                    ctrl::Controller& controller, std::uint32_t duration_s,
                    std::ostream* spawn_log = nullptr);

}  // namespace cyclight::eval
