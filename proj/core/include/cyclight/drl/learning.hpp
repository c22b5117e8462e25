#pragma once

#include <vector>

#include "cyclight/drl/network.hpp"
#include "cyclight/drl/replay.hpp"

namespace cyclight::drl {

/// Double-DQN targets: the next action is chosen by the online network and
/// evaluated by the target network; terminal transitions keep only their
/// reward.
std::vector<double> ddqn_targets(const QNetwork& net, const QNetwork& target_net,
                                 const std::vector<const Transition*>& batch, double gamma,
                                 BatchWorkspace& ws_online, BatchWorkspace& ws_target);

/// Mean squared error between targets and Q(s, a) over the batch, with
/// gradients for every parameter. Returns the loss.
double loss_and_gradients(const QNetwork& net, const std::vector<const Transition*>& batch,
                          const std::vector<double>& targets, std::vector<double>& grads,
                          BatchWorkspace& ws);

}  // namespace cyclight::drl
