#pragma once

#include "cyclight/ctrl/controllers.hpp"
#include "cyclight/ctrl/phase.hpp"
#include "cyclight/sim/signal.hpp"

namespace cyclight::ctrl {

enum class SeqMode { Green, Orange };

/// Shared phase-sequencing machinery for every controller: a fresh green is
/// locked for `lock_s` seconds, then the controller is polled once per
/// second; switching to a different phase inserts an `orange_s` interlude on
/// the lanes that were green. All controllers run through the same sequencer
/// so baselines pay the same orange cost as the agent.
class PhaseSequencer {
  public:
    explicit PhaseSequencer(const PhaseSet& set, int lock_s = 10, int orange_s = 4);

    /// Produce the indication in force for the next second, polling the
    /// controller when the current green is open for decisions.
    sim::SignalIndication tick(Controller& controller, const sim::Simulation& sim);

    SeqMode mode() const { return mode_; }
    int current_phase() const { return phase_; }
    int green_elapsed_s() const { return green_elapsed_; }

  private:
    PhaseSet set_;
    int lock_s_;
    int orange_s_;
    SeqMode mode_ = SeqMode::Green;
    int phase_ = 0;
    int pending_phase_ = 0;
    int previous_phase_ = 0;
    int green_elapsed_ = 0;
    int orange_left_ = 0;
    bool started_ = false;
};

}  // namespace cyclight::ctrl
