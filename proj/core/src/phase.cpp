#include "cyclight/ctrl/phase.hpp"

namespace cyclight::ctrl {

using sim::Approach;
using sim::LaneId;
using sim::LaneKind;
using sim::lane_id;

PhaseSet::PhaseSet(PhaseLayout layout) : layout_(layout) {
    const LaneId n_car = lane_id(Approach::N, LaneKind::Car);
    const LaneId n_bike = lane_id(Approach::N, LaneKind::Bike);
    const LaneId s_car = lane_id(Approach::S, LaneKind::Car);
    const LaneId s_bike = lane_id(Approach::S, LaneKind::Bike);
    const LaneId e_car = lane_id(Approach::E, LaneKind::Car);
    const LaneId e_bike = lane_id(Approach::E, LaneKind::Bike);
    const LaneId w_car = lane_id(Approach::W, LaneKind::Car);
    const LaneId w_bike = lane_id(Approach::W, LaneKind::Bike);
    if (layout == PhaseLayout::Secured) {
        green_ = {{n_car, s_car}, {n_bike, s_bike}, {e_car, w_car}, {e_bike, w_bike}};
    } else {
        green_ = {{n_car, n_bike, s_car, s_bike}, {e_car, e_bike, w_car, w_bike}};
    }
}

std::string_view PhaseSet::name(int phase) const {
    static constexpr std::string_view kSecured[] = {"NS-car", "NS-bike", "EW-car", "EW-bike"};
    static constexpr std::string_view kUnsecured[] = {"NS-all", "EW-all"};
    return layout_ == PhaseLayout::Secured ? kSecured[phase] : kUnsecured[phase];
}

sim::SignalIndication PhaseSet::green_indication(int phase) const {
    sim::SignalIndication ind;
    for (LaneId l : green_[phase]) ind.set(l, sim::Light::Green);
    return ind;
}

sim::SignalIndication PhaseSet::orange_indication(int phase) const {
    sim::SignalIndication ind;
    for (LaneId l : green_[phase]) ind.set(l, sim::Light::Orange);
    return ind;
}

}  // namespace cyclight::ctrl
