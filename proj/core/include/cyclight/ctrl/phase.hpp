#pragma once

#include <string_view>
#include <vector>

#include "cyclight/sim/signal.hpp"
#include "cyclight/sim/types.hpp"

namespace cyclight::ctrl {

/// Which green phases the light offers.
///
/// Secured lights separate cars and bikes per axis:
///   [NS-car, NS-bike, EW-car, EW-bike]
/// Unsecured lights release a whole axis at once:
///   [NS-all, EW-all]
enum class PhaseLayout { Secured, Unsecured };

class PhaseSet {
  public:
    explicit PhaseSet(PhaseLayout layout);

    PhaseLayout layout() const { return layout_; }
    int size() const { return static_cast<int>(green_.size()); }
    const std::vector<sim::LaneId>& green_lanes(int phase) const { return green_[phase]; }
    std::string_view name(int phase) const;

    /// Indication with this phase's lanes green and everything else red.
    sim::SignalIndication green_indication(int phase) const;
    /// Indication with the given phase's lanes orange and everything else red.
    sim::SignalIndication orange_indication(int phase) const;

  private:
    PhaseLayout layout_;
    std::vector<std::vector<sim::LaneId>> green_;
};

}  // namespace cyclight::ctrl
