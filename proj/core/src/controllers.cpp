#include "cyclight/ctrl/controllers.hpp"

#include <cmath>

#include "cyclight/drl/network.hpp"

namespace cyclight::ctrl {

StaticController::StaticController(PhaseLayout layout, StaticCycleConfig cfg)
    : set_(layout), cfg_(cfg) {
    if (cfg_.phase_duration_s <= 4) {
        throw ConfigError("static phase duration must exceed the orange interval");
    }
    name_ = layout == PhaseLayout::Secured ? "static-secured" : "static-unsecured";
}

std::optional<int> StaticController::decide(const sim::Simulation& /*sim*/,
                                            int green_elapsed_s) {
    if (green_elapsed_s >= cfg_.phase_duration_s) {
        return (current_ + 1) % set_.size();
    }
    return std::nullopt;
}

ActuatedController::ActuatedController(ActuatedConfig cfg, PhaseLayout layout)
    : cfg_(cfg), set_(layout) {
    if (cfg_.min_dur_s > cfg_.max_dur_s || cfg_.duration_s <= 0) {
        throw ConfigError("actuated config requires minDur <= maxDur and duration > 0");
    }
    counter_ = cfg_.duration_s;
}

void ActuatedController::on_phase_start(int phase) {
    current_ = phase;
    counter_ = cfg_.duration_s;
    running_ = false;
}

bool ActuatedController::detection(const sim::Simulation& sim) const {
    const double lo = cfg_.detector_offset_m - cfg_.detector_half_width_m;
    const double hi = cfg_.detector_offset_m + cfg_.detector_half_width_m;
    for (sim::LaneId lane : set_.green_lanes(current_)) {
        for (const sim::Vehicle& veh : sim.incoming_lane(lane)) {
            // Swept interval over the last second, so a vehicle cannot jump
            // the band between two 1 s samples.
            if (veh.pos_m <= hi && veh.pos_m + veh.last_move_m >= lo) return true;
        }
    }
    return false;
}

std::optional<int> ActuatedController::decide(const sim::Simulation& sim, int green_elapsed_s) {
    if (green_elapsed_s >= cfg_.max_dur_s) {
        return (current_ + 1) % set_.size();
    }
    if (green_elapsed_s < cfg_.min_dur_s) {
        counter_ = cfg_.duration_s;
        return std::nullopt;
    }
    if (!running_) {
        // First poll past minDur starts the gap countdown.
        running_ = true;
        counter_ = cfg_.duration_s;
        return std::nullopt;
    }
    if (detection(sim)) {
        counter_ = cfg_.duration_s;
    } else {
        --counter_;
    }
    if (counter_ <= 0) {
        return (current_ + 1) % set_.size();
    }
    return std::nullopt;
}

AgentController::AgentController(const drl::QNetwork& net, double epsilon, Rng* rng)
    : net_(&net), set_(PhaseLayout::Secured), epsilon_(epsilon), rng_(rng) {
    if (epsilon_ > 0.0 && rng_ == nullptr) {
        throw ConfigError("epsilon-greedy agent control needs an RNG");
    }
}

std::optional<int> AgentController::decide(const sim::Simulation& sim, int /*green_elapsed_s*/) {
    const sim::StateTensor s = sim.observe();
    if (epsilon_ > 0.0) {
        return drl::select_action(*net_, s, epsilon_, *rng_);
    }
    return drl::greedy_action(net_->forward(s));
}

}  // namespace cyclight::ctrl
