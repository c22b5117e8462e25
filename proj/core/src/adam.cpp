#include "cyclight/drl/adam.hpp"

#include <Eigen/Dense>

#include <cassert>
#include <cmath>

namespace cyclight::drl {

void Adam::step(std::vector<double>& params, const std::vector<double>& grads) {
    assert(params.size() == m_.size() && grads.size() == m_.size());
    ++t_;
    const auto n = static_cast<Eigen::Index>(params.size());
    Eigen::Map<Eigen::ArrayXd> p(params.data(), n);
    Eigen::Map<const Eigen::ArrayXd> g(grads.data(), n);
    Eigen::Map<Eigen::ArrayXd> m(m_.data(), n);
    Eigen::Map<Eigen::ArrayXd> v(v_.data(), n);

    m = beta1_ * m + (1.0 - beta1_) * g;
    v = beta2_ * v + (1.0 - beta2_) * g.square();
    const double mc = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double vc = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    p -= lr_ * (m / mc) / ((v / vc).sqrt() + eps_);
}

}  // namespace cyclight::drl
