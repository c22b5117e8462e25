#include "cyclight/drl/learning.hpp"

#include <cassert>

namespace cyclight::drl {

std::vector<double> ddqn_targets(const QNetwork& net, const QNetwork& target_net,
                                 const std::vector<const Transition*>& batch, double gamma,
                                 BatchWorkspace& ws_online, BatchWorkspace& ws_target) {
    assert(!batch.empty());
    const int b = static_cast<int>(batch.size());
    const int actions = net.dims().actions;

    std::vector<const sim::StateTensor*> next_states(batch.size());
    for (int i = 0; i < b; ++i) next_states[static_cast<std::size_t>(i)] = &batch[i]->s_next;

    net.forward_batch(next_states.data(), b, ws_online);
    target_net.forward_batch(next_states.data(), b, ws_target);

    std::vector<double> targets(batch.size());
    for (int i = 0; i < b; ++i) {
        const Transition& t = *batch[static_cast<std::size_t>(i)];
        double y = t.reward;
        if (!t.done) {
            int best = 0;
            for (int a = 1; a < actions; ++a) {
                if (ws_online.q_at(a, i, actions) > ws_online.q_at(best, i, actions)) best = a;
            }
            y += gamma * ws_target.q_at(best, i, actions);
        }
        targets[static_cast<std::size_t>(i)] = y;
    }
    return targets;
}

double loss_and_gradients(const QNetwork& net, const std::vector<const Transition*>& batch,
                          const std::vector<double>& targets, std::vector<double>& grads,
                          BatchWorkspace& ws) {
    assert(batch.size() == targets.size() && !batch.empty());
    const int b = static_cast<int>(batch.size());
    std::vector<const sim::StateTensor*> states(batch.size());
    std::vector<int> actions(batch.size());
    for (int i = 0; i < b; ++i) {
        states[static_cast<std::size_t>(i)] = &batch[static_cast<std::size_t>(i)]->s;
        actions[static_cast<std::size_t>(i)] = batch[static_cast<std::size_t>(i)]->action;
    }
    net.forward_batch(states.data(), b, ws);
    return net.backward_mse(actions, targets, ws, grads);
}

}  // namespace cyclight::drl
