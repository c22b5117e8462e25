#include "cyclight/eval/runner.hpp"

namespace cyclight::eval {

SimDriver::SimDriver(sim::Simulation& sim, ctrl::Controller& controller,
                     const synth::TrafficTrace& trace)
    : sim_(&sim), controller_(&controller), seq_(controller.phases()), trace_(&trace) {}

sim::StepReport SimDriver::tick(std::ostream* spawn_log) {
    const sim::SignalIndication indication = seq_.tick(*controller_, *sim_);
    const std::uint32_t now = sim_->time_s();
    const auto& events = trace_->events;
    while (cursor_ < events.size() && events[cursor_].time_s == now) {
        const synth::SpawnEvent& e = events[cursor_];
        sim_->spawn(e.lane, e.destination);
        ++spawn_calls_;
        if (spawn_log) {
            *spawn_log << e.time_s << "," << sim::lane_name(e.lane) << ","
                       << (sim::lane_kind(e.lane) == sim::LaneKind::Bike ? "bike" : "car")
                       << "," << sim::approach_name(e.destination) << "\n";
        }
        ++cursor_;
    }
    return sim_->step(indication);
}

bool SimDriver::drained() const {
    return trace_exhausted() && sim_->vehicles_on_map() == 0 && sim_->pending_count() == 0;
}

RunResult run_trace(const sim::IntersectionLayout& layout, const sim::VehicleType& car,
                    const sim::VehicleType& bike, const synth::TrafficTrace& trace,
                    ctrl::Controller& controller, std::uint32_t duration_s,
                    std::ostream* spawn_log) {
    sim::Simulation sim(layout, car, bike);
    SimDriver driver(sim, controller, trace);
    RunResult result;
    result.controller = std::string(controller.name());
    result.trace_id = trace.id();
    while (duration_s > 0 ? sim.time_s() < duration_s : !driver.drained()) {
        const sim::StepReport report = driver.tick(spawn_log);
        result.waiting_step_sum_bikes += static_cast<std::uint64_t>(report.waiting_bikes);
        result.waiting_step_sum_cars += static_cast<std::uint64_t>(report.waiting_cars);
    }
    result.steps = sim.time_s();
    result.spawn_calls = driver.spawn_calls();
    result.records = sim.records();
    result.final_state_hash = sim.state_hash();
    return result;
}

}  // namespace cyclight::eval
