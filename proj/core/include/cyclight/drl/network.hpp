#pragma once

#include <cstddef>
#include <vector>

#include "cyclight/errors.hpp"
#include "cyclight/sim/state_tensor.hpp"
#include "cyclight/util/rng.hpp"

namespace cyclight::drl {

/// Architecture of the dueling Q-network: two 2x2 valid convolutions with 16
/// kernels over the 2-channel observation, two 128-unit dense layers, then a
/// scalar value head and a per-action advantage head. ReLU between hidden
/// layers, linear heads.
struct NetDims {
    int lanes = 8;
    int cells = 30;
    int channels = 2;
    int actions = 4;
    int conv_kernels = 16;
    int kernel = 2;
    int fc_units = 128;

    int c1_h() const { return lanes - kernel + 1; }
    int c1_w() const { return cells - kernel + 1; }
    int c2_h() const { return c1_h() - kernel + 1; }
    int c2_w() const { return c1_w() - kernel + 1; }
    int flat() const { return c2_h() * c2_w() * conv_kernels; }

    void validate() const {
        if (lanes < kernel + 1 || cells < kernel + 1 || channels <= 0 || actions <= 0 ||
            conv_kernels <= 0 || fc_units <= 0 || kernel <= 0) {
            throw ConfigError("invalid network dimensions");
        }
    }

    bool operator==(const NetDims&) const = default;
};

/// Offsets of each parameter block inside the flat parameter vector.
/// Convolution weights are laid out [kernel][dh][dw][in_channel] (matching
/// the channels-last patch order), dense weights row-major [out][in].
struct ParamLayout {
    std::size_t conv1_w = 0, conv1_b = 0;
    std::size_t conv2_w = 0, conv2_b = 0;
    std::size_t fc1_w = 0, fc1_b = 0;
    std::size_t fc2_w = 0, fc2_b = 0;
    std::size_t value_w = 0, value_b = 0;
    std::size_t adv_w = 0, adv_b = 0;
    std::size_t total = 0;

    static ParamLayout make(const NetDims& d);
};

/// Scratch buffers for batched forward/backward passes. Reused across calls;
/// sized on demand.
struct BatchWorkspace {
    // Filled by forward_batch: q(row=action, col=sample), plus retained
    // activations needed by the backward pass.
    std::vector<double> m1, a1, m2, a2;       // im2col patches and conv activations
    std::vector<double> h1, h2, value, adv, q;  // dense activations, heads, q-values
    std::vector<double> d_a2, d_a1, d_m2, d_h1, d_h2, d_q, d_adv, d_value;
    int batch = 0;

    double q_at(int action, int sample, int n_actions) const {
        return q[static_cast<std::size_t>(sample) * n_actions + action];
    }
};

class QNetwork {
  public:
    explicit QNetwork(NetDims dims = {});

    const NetDims& dims() const { return dims_; }
    const ParamLayout& layout() const { return layout_; }
    std::size_t param_count() const { return layout_.total; }
    std::vector<double>& params() { return params_; }
    const std::vector<double>& params() const { return params_; }

    /// He-uniform weights, zero biases, drawn in parameter order.
    void init_he_uniform(Rng& rng);

    void copy_params_from(const QNetwork& other);

    /// Q-values for a single observation.
    std::vector<double> forward(const sim::StateTensor& s) const;

    /// Batched forward over `batch` observations. Results land in ws.q
    /// (sample-major, `actions` values per sample) and activations are
    /// retained for backward_mse.
    void forward_batch(const sim::StateTensor* const* states, int batch,
                       BatchWorkspace& ws) const;

    /// Mean squared error between targets and Q at the taken actions,
    /// backpropagated through the workspace of the preceding forward_batch.
    /// Gradients (same layout as params) are written into `grads`.
    double backward_mse(const std::vector<int>& actions, const std::vector<double>& targets,
                        BatchWorkspace& ws, std::vector<double>& grads) const;

  private:
    NetDims dims_;
    ParamLayout layout_;
    std::vector<double> params_;
};

/// Greedy action with ties broken toward the lowest index.
int greedy_action(const std::vector<double>& q);

/// Epsilon-greedy: with probability epsilon a uniform action, otherwise the
/// greedy one. The exploration draw happens first, matching the convention
/// that a single uniform number decides the branch.
int select_action(const QNetwork& net, const sim::StateTensor& s, double epsilon, Rng& rng);

}  // namespace cyclight::drl
