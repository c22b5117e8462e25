#include "cyclight/drl/network.hpp"

#include <Eigen/Dense>

#include <cassert>
#include <cmath>
#include <cstring>

namespace cyclight::drl {

namespace {

using MatrixRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapRM = Eigen::Map<MatrixRM>;
using CMapRM = Eigen::Map<const MatrixRM>;
using MapCM = Eigen::Map<Eigen::MatrixXd>;
using CMapCM = Eigen::Map<const Eigen::MatrixXd>;
using MapVec = Eigen::Map<Eigen::VectorXd>;
using CMapVec = Eigen::Map<const Eigen::VectorXd>;

void ensure_size(std::vector<double>& v, std::size_t n) {
    if (v.size() < n) v.resize(n);
}

}  // namespace

ParamLayout ParamLayout::make(const NetDims& d) {
    const auto k2 = static_cast<std::size_t>(d.kernel) * d.kernel;
    ParamLayout l;
    std::size_t off = 0;
    auto block = [&off](std::size_t n) {
        const std::size_t at = off;
        off += n;
        return at;
    };
    l.conv1_w = block(static_cast<std::size_t>(d.conv_kernels) * k2 * d.channels);
    l.conv1_b = block(static_cast<std::size_t>(d.conv_kernels));
    l.conv2_w = block(static_cast<std::size_t>(d.conv_kernels) * k2 * d.conv_kernels);
    l.conv2_b = block(static_cast<std::size_t>(d.conv_kernels));
    l.fc1_w = block(static_cast<std::size_t>(d.fc_units) * d.flat());
    l.fc1_b = block(static_cast<std::size_t>(d.fc_units));
    l.fc2_w = block(static_cast<std::size_t>(d.fc_units) * d.fc_units);
    l.fc2_b = block(static_cast<std::size_t>(d.fc_units));
    l.value_w = block(static_cast<std::size_t>(d.fc_units));
    l.value_b = block(1);
    l.adv_w = block(static_cast<std::size_t>(d.actions) * d.fc_units);
    l.adv_b = block(static_cast<std::size_t>(d.actions));
    l.total = off;
    return l;
}

QNetwork::QNetwork(NetDims dims) : dims_(dims) {
    dims_.validate();
    layout_ = ParamLayout::make(dims_);
    params_.assign(layout_.total, 0.0);
}

void QNetwork::init_he_uniform(Rng& rng) {
    const auto k2 = static_cast<std::size_t>(dims_.kernel) * dims_.kernel;
    struct Block {
        std::size_t offset, count, fan_in;
    };
    const Block weights[] = {
        {layout_.conv1_w, k2 * dims_.channels * dims_.conv_kernels, k2 * dims_.channels},
        {layout_.conv2_w, k2 * dims_.conv_kernels * dims_.conv_kernels, k2 * dims_.conv_kernels},
        {layout_.fc1_w, static_cast<std::size_t>(dims_.fc_units) * dims_.flat(),
         static_cast<std::size_t>(dims_.flat())},
        {layout_.fc2_w, static_cast<std::size_t>(dims_.fc_units) * dims_.fc_units,
         static_cast<std::size_t>(dims_.fc_units)},
        {layout_.value_w, static_cast<std::size_t>(dims_.fc_units),
         static_cast<std::size_t>(dims_.fc_units)},
        {layout_.adv_w, static_cast<std::size_t>(dims_.actions) * dims_.fc_units,
         static_cast<std::size_t>(dims_.fc_units)},
    };
    std::fill(params_.begin(), params_.end(), 0.0);
    for (const Block& b : weights) {
        const double limit = std::sqrt(6.0 / static_cast<double>(b.fan_in));
        for (std::size_t i = 0; i < b.count; ++i) {
            params_[b.offset + i] = rng.uniform(-limit, limit);
        }
    }
}

void QNetwork::copy_params_from(const QNetwork& other) {
    if (!(other.dims_ == dims_)) throw ConfigError("network dimension mismatch");
    params_ = other.params_;
}

void QNetwork::forward_batch(const sim::StateTensor* const* states, int batch,
                             BatchWorkspace& ws) const {
    const NetDims& d = dims_;
    const int k = d.kernel;
    const int c1h = d.c1_h(), c1w = d.c1_w();
    const int c2h = d.c2_h(), c2w = d.c2_w();
    const int kc = d.conv_kernels;
    const int patch1 = k * k * d.channels;
    const int patch2 = k * k * kc;
    const std::size_t rows1 = static_cast<std::size_t>(batch) * c1h * c1w;
    const std::size_t rows2 = static_cast<std::size_t>(batch) * c2h * c2w;
    const int fc = d.fc_units;
    const int flat = d.flat();

    ws.batch = batch;
    ensure_size(ws.m1, rows1 * patch1);
    ensure_size(ws.a1, rows1 * kc);
    ensure_size(ws.m2, rows2 * patch2);
    ensure_size(ws.a2, rows2 * kc);
    ensure_size(ws.h1, static_cast<std::size_t>(fc) * batch);
    ensure_size(ws.h2, static_cast<std::size_t>(fc) * batch);
    ensure_size(ws.value, static_cast<std::size_t>(batch));
    ensure_size(ws.adv, static_cast<std::size_t>(d.actions) * batch);
    ensure_size(ws.q, static_cast<std::size_t>(d.actions) * batch);

    // conv1 im2col: channels-last patches from the two observation planes.
    for (int s = 0; s < batch; ++s) {
        const sim::StateTensor& st = *states[s];
        assert(st.lanes == d.lanes && st.cells == d.cells);
        double* row = ws.m1.data() + static_cast<std::size_t>(s) * c1h * c1w * patch1;
        for (int h = 0; h < c1h; ++h) {
            for (int w = 0; w < c1w; ++w) {
                for (int dh = 0; dh < k; ++dh) {
                    for (int dw = 0; dw < k; ++dw) {
                        const std::size_t src = static_cast<std::size_t>(h + dh) * d.cells + (w + dw);
                        *row++ = static_cast<double>(st.position[src]);
                        *row++ = static_cast<double>(st.speed[src]);
                    }
                }
            }
        }
    }

    const double* p = params_.data();
    CMapRM w1(p + layout_.conv1_w, kc, patch1);
    CMapVec b1(p + layout_.conv1_b, kc);
    MapRM m1(ws.m1.data(), static_cast<Eigen::Index>(rows1), patch1);
    MapRM a1(ws.a1.data(), static_cast<Eigen::Index>(rows1), kc);
    a1.noalias() = m1 * w1.transpose();
    a1.rowwise() += b1.transpose();
    a1 = a1.cwiseMax(0.0);

    // conv2 im2col: each patch is kernel*kernel contiguous 16-channel runs.
    const int pos1 = c1h * c1w;
    for (int s = 0; s < batch; ++s) {
        const double* base = ws.a1.data() + static_cast<std::size_t>(s) * pos1 * kc;
        double* row = ws.m2.data() + static_cast<std::size_t>(s) * c2h * c2w * patch2;
        for (int h = 0; h < c2h; ++h) {
            for (int w = 0; w < c2w; ++w) {
                for (int dh = 0; dh < k; ++dh) {
                    const double* src = base + (static_cast<std::size_t>(h + dh) * c1w + w) * kc;
                    std::memcpy(row, src, sizeof(double) * static_cast<std::size_t>(k) * kc);
                    row += static_cast<std::size_t>(k) * kc;
                }
            }
        }
    }

    CMapRM w2(p + layout_.conv2_w, kc, patch2);
    CMapVec b2(p + layout_.conv2_b, kc);
    MapRM m2(ws.m2.data(), static_cast<Eigen::Index>(rows2), patch2);
    MapRM a2(ws.a2.data(), static_cast<Eigen::Index>(rows2), kc);
    a2.noalias() = m2 * w2.transpose();
    a2.rowwise() += b2.transpose();
    a2 = a2.cwiseMax(0.0);

    // Row-major conv activations double as the column-major flattened input.
    CMapCM x2(ws.a2.data(), flat, batch);
    CMapRM fc1w(p + layout_.fc1_w, fc, flat);
    CMapVec fc1b(p + layout_.fc1_b, fc);
    MapCM h1(ws.h1.data(), fc, batch);
    h1.noalias() = fc1w * x2;
    h1.colwise() += fc1b;
    h1 = h1.cwiseMax(0.0);

    CMapRM fc2w(p + layout_.fc2_w, fc, fc);
    CMapVec fc2b(p + layout_.fc2_b, fc);
    MapCM h2(ws.h2.data(), fc, batch);
    h2.noalias() = fc2w * h1;
    h2.colwise() += fc2b;
    h2 = h2.cwiseMax(0.0);

    CMapVec vw(p + layout_.value_w, fc);
    CMapRM aw(p + layout_.adv_w, d.actions, fc);
    MapCM value(ws.value.data(), 1, batch);
    MapCM adv(ws.adv.data(), d.actions, batch);
    value.noalias() = vw.transpose() * h2;
    value.array() += p[layout_.value_b];
    adv.noalias() = aw * h2;
    adv.colwise() += CMapVec(p + layout_.adv_b, d.actions);

    MapCM q(ws.q.data(), d.actions, batch);
    q = adv;
    q.rowwise() -= adv.colwise().mean();
    q.rowwise() += value.row(0);
}

double QNetwork::backward_mse(const std::vector<int>& actions,
                              const std::vector<double>& targets, BatchWorkspace& ws,
                              std::vector<double>& grads) const {
    const NetDims& d = dims_;
    const int batch = ws.batch;
    assert(static_cast<int>(actions.size()) == batch &&
           static_cast<int>(targets.size()) == batch);
    const int k = d.kernel;
    const int c1h = d.c1_h(), c1w = d.c1_w();
    const int c2h = d.c2_h(), c2w = d.c2_w();
    const int kc = d.conv_kernels;
    const int patch1 = k * k * d.channels;
    const int patch2 = k * k * kc;
    const std::size_t rows1 = static_cast<std::size_t>(batch) * c1h * c1w;
    const std::size_t rows2 = static_cast<std::size_t>(batch) * c2h * c2w;
    const int fc = d.fc_units;
    const int flat = d.flat();

    ensure_size(ws.d_q, static_cast<std::size_t>(d.actions) * batch);
    ensure_size(ws.d_adv, static_cast<std::size_t>(d.actions) * batch);
    ensure_size(ws.d_value, static_cast<std::size_t>(batch));
    ensure_size(ws.d_h1, static_cast<std::size_t>(fc) * batch);
    ensure_size(ws.d_h2, static_cast<std::size_t>(fc) * batch);
    ensure_size(ws.d_a2, rows2 * kc);
    ensure_size(ws.d_m2, rows2 * patch2);
    ensure_size(ws.d_a1, rows1 * kc);

    grads.assign(layout_.total, 0.0);
    double* g = grads.data();
    const double* p = params_.data();

    // Loss and dL/dQ at the taken actions.
    MapCM q(ws.q.data(), d.actions, batch);
    MapCM dq(ws.d_q.data(), d.actions, batch);
    dq.setZero();
    double loss = 0.0;
    const double inv_b = 1.0 / batch;
    for (int s = 0; s < batch; ++s) {
        const double diff = q(actions[s], s) - targets[s];
        loss += diff * diff * inv_b;
        dq(actions[s], s) = 2.0 * diff * inv_b;
    }

    // Dueling combination: dV collects everything, advantages lose their mean.
    MapCM dv(ws.d_value.data(), 1, batch);
    MapCM dadv(ws.d_adv.data(), d.actions, batch);
    dv = dq.colwise().sum();
    dadv = dq;
    dadv.rowwise() -= dq.colwise().mean();

    MapCM h2(ws.h2.data(), fc, batch);
    MapCM h1(ws.h1.data(), fc, batch);
    CMapVec vw(p + layout_.value_w, fc);
    CMapRM aw(p + layout_.adv_w, d.actions, fc);

    MapVec g_vw(g + layout_.value_w, fc);
    g_vw.noalias() = h2 * dv.row(0).transpose();
    g[layout_.value_b] = dv.sum();
    MapRM g_aw(g + layout_.adv_w, d.actions, fc);
    g_aw.noalias() = dadv * h2.transpose();
    MapVec g_ab(g + layout_.adv_b, d.actions);
    g_ab = dadv.rowwise().sum();

    MapCM dh2(ws.d_h2.data(), fc, batch);
    dh2.noalias() = aw.transpose() * dadv;
    dh2.noalias() += vw * dv.row(0);
    dh2.array() *= (h2.array() > 0.0).cast<double>();

    CMapRM fc2w(p + layout_.fc2_w, fc, fc);
    MapRM g_fc2w(g + layout_.fc2_w, fc, fc);
    g_fc2w.noalias() = dh2 * h1.transpose();
    MapVec g_fc2b(g + layout_.fc2_b, fc);
    g_fc2b = dh2.rowwise().sum();

    MapCM dh1(ws.d_h1.data(), fc, batch);
    dh1.noalias() = fc2w.transpose() * dh2;
    dh1.array() *= (h1.array() > 0.0).cast<double>();

    CMapCM x2(ws.a2.data(), flat, batch);
    CMapRM fc1w(p + layout_.fc1_w, fc, flat);
    MapRM g_fc1w(g + layout_.fc1_w, fc, flat);
    g_fc1w.noalias() = dh1 * x2.transpose();
    MapVec g_fc1b(g + layout_.fc1_b, fc);
    g_fc1b = dh1.rowwise().sum();

    // Into the conv stack: d_a2 doubles as the column-major d_x2 view.
    MapCM dx2(ws.d_a2.data(), flat, batch);
    dx2.noalias() = fc1w.transpose() * dh1;
    MapRM da2(ws.d_a2.data(), static_cast<Eigen::Index>(rows2), kc);
    MapRM a2(ws.a2.data(), static_cast<Eigen::Index>(rows2), kc);
    da2.array() *= (a2.array() > 0.0).cast<double>();

    MapRM m2(ws.m2.data(), static_cast<Eigen::Index>(rows2), patch2);
    MapRM g_w2(g + layout_.conv2_w, kc, patch2);
    g_w2.noalias() = da2.transpose() * m2;
    MapVec g_b2(g + layout_.conv2_b, kc);
    g_b2 = da2.colwise().sum();

    CMapRM w2(p + layout_.conv2_w, kc, patch2);
    MapRM dm2(ws.d_m2.data(), static_cast<Eigen::Index>(rows2), patch2);
    dm2.noalias() = da2 * w2;

    // col2im scatter back onto the first conv activations.
    std::fill(ws.d_a1.begin(), ws.d_a1.begin() + static_cast<std::ptrdiff_t>(rows1 * kc), 0.0);
    const int pos1 = c1h * c1w;
    for (int s = 0; s < batch; ++s) {
        double* base = ws.d_a1.data() + static_cast<std::size_t>(s) * pos1 * kc;
        const double* row = ws.d_m2.data() + static_cast<std::size_t>(s) * c2h * c2w * patch2;
        for (int h = 0; h < c2h; ++h) {
            for (int w = 0; w < c2w; ++w) {
                for (int dh = 0; dh < k; ++dh) {
                    double* dst = base + (static_cast<std::size_t>(h + dh) * c1w + w) * kc;
                    for (int j = 0; j < k * kc; ++j) dst[j] += row[j];
                    row += static_cast<std::size_t>(k) * kc;
                }
            }
        }
    }

    MapRM da1(ws.d_a1.data(), static_cast<Eigen::Index>(rows1), kc);
    MapRM a1(ws.a1.data(), static_cast<Eigen::Index>(rows1), kc);
    da1.array() *= (a1.array() > 0.0).cast<double>();

    MapRM m1(ws.m1.data(), static_cast<Eigen::Index>(rows1), patch1);
    MapRM g_w1(g + layout_.conv1_w, kc, patch1);
    g_w1.noalias() = da1.transpose() * m1;
    MapVec g_b1(g + layout_.conv1_b, kc);
    g_b1 = da1.colwise().sum();

    return loss;
}

std::vector<double> QNetwork::forward(const sim::StateTensor& s) const {
    BatchWorkspace ws;
    const sim::StateTensor* ptr = &s;
    forward_batch(&ptr, 1, ws);
    return std::vector<double>(ws.q.begin(), ws.q.begin() + dims_.actions);
}

int greedy_action(const std::vector<double>& q) {
    int best = 0;
    for (int a = 1; a < static_cast<int>(q.size()); ++a) {
        if (q[static_cast<std::size_t>(a)] > q[static_cast<std::size_t>(best)]) best = a;
    }
    return best;
}

int select_action(const QNetwork& net, const sim::StateTensor& s, double epsilon, Rng& rng) {
    if (rng.uniform() < epsilon) {
        return static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(net.dims().actions)));
    }
    return greedy_action(net.forward(s));
}

}  // namespace cyclight::drl
