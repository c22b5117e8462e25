#include "cyclight/ctrl/sequencer.hpp"

#include <cassert>

namespace cyclight::ctrl {

PhaseSequencer::PhaseSequencer(const PhaseSet& set, int lock_s, int orange_s)
    : set_(set), lock_s_(lock_s), orange_s_(orange_s) {}

sim::SignalIndication PhaseSequencer::tick(Controller& controller, const sim::Simulation& sim) {
    if (!started_) {
        started_ = true;
        controller.on_phase_start(phase_);
    }
    if (mode_ == SeqMode::Orange) {
        const auto ind = set_.orange_indication(previous_phase_);
        if (--orange_left_ == 0) {
            mode_ = SeqMode::Green;
            phase_ = pending_phase_;
            green_elapsed_ = 0;
            controller.on_phase_start(phase_);
        }
        return ind;
    }
    if (green_elapsed_ >= lock_s_) {
        if (auto request = controller.decide(sim, green_elapsed_)) {
            assert(*request >= 0 && *request < set_.size());
            if (*request == phase_) {
                green_elapsed_ = 0;  // same phase chosen again: fresh lock
            } else {
                mode_ = SeqMode::Orange;
                orange_left_ = orange_s_;
                previous_phase_ = phase_;
                pending_phase_ = *request;
                --orange_left_;
                return set_.orange_indication(previous_phase_);
            }
        }
    }
    ++green_elapsed_;
    return set_.green_indication(phase_);
}

}  // namespace cyclight::ctrl
