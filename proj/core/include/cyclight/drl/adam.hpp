#pragma once

#include <cstdint>
#include <vector>

namespace cyclight::drl {

/// Adam with the standard moment estimates and bias correction.
class Adam {
  public:
    explicit Adam(std::size_t n_params, double lr = 0.001, double beta1 = 0.9,
                  double beta2 = 0.999, double eps = 1e-8)
        : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps), m_(n_params, 0.0), v_(n_params, 0.0) {}

    void step(std::vector<double>& params, const std::vector<double>& grads);

    std::uint64_t t() const { return t_; }
    const std::vector<double>& m() const { return m_; }
    const std::vector<double>& v() const { return v_; }
    double learning_rate() const { return lr_; }

    void restore(std::vector<double> m, std::vector<double> v, std::uint64_t t) {
        m_ = std::move(m);
        v_ = std::move(v);
        t_ = t;
    }

  private:
    double lr_, beta1_, beta2_, eps_;
    std::uint64_t t_ = 0;
    std::vector<double> m_, v_;
};

}  // namespace cyclight::drl
