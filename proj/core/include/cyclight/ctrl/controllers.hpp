#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cyclight/ctrl/phase.hpp"
#include "cyclight/sim/simulation.hpp"
#include "cyclight/util/rng.hpp"

namespace cyclight::drl {
class QNetwork;
}

namespace cyclight::ctrl {

/// A signal-control policy. The sequencer polls `decide` once per second
/// while the current green is open for decisions (after the 10 s lock).
/// Returning nullopt holds the current green without restarting the lock;
/// returning the current phase restarts the lock; returning another phase
/// triggers the orange interlude and the switch.
class Controller {
  public:
    virtual ~Controller() = default;
    virtual const PhaseSet& phases() const = 0;
    virtual std::string_view name() const = 0;
    virtual void on_phase_start(int /*phase*/) {}
    virtual std::optional<int> decide(const sim::Simulation& sim, int green_elapsed_s) = 0;
};

struct StaticCycleConfig {
    int phase_duration_s = 40;
};

/// Fixed cycle: hold each green for the configured duration, then advance.
class StaticController : public Controller {
  public:
    StaticController(PhaseLayout layout, StaticCycleConfig cfg);

    const PhaseSet& phases() const override { return set_; }
    std::string_view name() const override { return name_; }
    void on_phase_start(int phase) override { current_ = phase; }
    std::optional<int> decide(const sim::Simulation& sim, int green_elapsed_s) override;

  private:
    PhaseSet set_;
    StaticCycleConfig cfg_;
    std::string name_;
    int current_ = 0;
};

struct ActuatedConfig {
    int min_dur_s = 10;
    int max_dur_s = 40;
    int duration_s = 5;
    double detector_offset_m = 50.0;
    double detector_half_width_m = 2.5;
};

/// Detector-driven phase changes: hold for min_dur, then run a resettable
/// gap countdown; advance when it expires or the green reaches max_dur.
class ActuatedController : public Controller {
  public:
    explicit ActuatedController(ActuatedConfig cfg, PhaseLayout layout = PhaseLayout::Secured);

    const PhaseSet& phases() const override { return set_; }
    std::string_view name() const override { return "actuated"; }
    void on_phase_start(int phase) override;
    std::optional<int> decide(const sim::Simulation& sim, int green_elapsed_s) override;

    /// True when any vehicle on a lane of the current green phase touched the
    /// detector band during the last second (swept interval, so fast vehicles
    /// cannot jump over it between samples).
    bool detection(const sim::Simulation& sim) const;

  private:
    ActuatedConfig cfg_;
    PhaseSet set_;
    int current_ = 0;
    int counter_ = 0;
    bool running_ = false;
};

/// Greedy (or epsilon-greedy) phase choice from a Q-network. Always returns
/// a phase, so every decision restarts the 10 s lock.
class AgentController : public Controller {
  public:
    AgentController(const drl::QNetwork& net, double epsilon = 0.0, Rng* rng = nullptr);

    const PhaseSet& phases() const override { return set_; }
    std::string_view name() const override { return "3dqn"; }
    std::optional<int> decide(const sim::Simulation& sim, int green_elapsed_s) override;

  private:
    const drl::QNetwork* net_;
    PhaseSet set_;
    double epsilon_;
    Rng* rng_;
};

}  // namespace cyclight::ctrl
