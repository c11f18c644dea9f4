#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "tcdm/tensor.hpp"

namespace tcdm {

/// Barbell deformation dataset: n points sampled uniformly from the unit
/// disc sit at the middle snapshot; the first snapshot is the horizontal
/// barbell h(x,y) = (x, y(1-cos pi x)), the last the vertical barbell
/// v(x,y) = (x(1-cos pi y), y), with linear interpolation between. m must be
/// odd so the disc is the exact midpoint.
struct BarbellConfig {
    Eigen::Index n = 2000;
    int m = 9;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Analytic time-dependent metric on the circle, g(tau) = r(tau)^2 dtheta^2
/// with linear radius r(tau) = r0 + rate * tau kept positive on [0, horizon].
struct MetricFamily {
    double r0 = 1.0;
    double rate = 0.0;
    double horizon = 1.0;

    double radius(double tau) const { return r0 + rate * tau; }
    void validate() const;
};

Eigen::Vector2d barbell_h(const Eigen::Vector2d& p);
Eigen::Vector2d barbell_v(const Eigen::Vector2d& p);

/// Generates the deformation tensor with per-point class labels
/// (0 right-up, 1 right-down, 2 left-up, 3 left-down; right/left is the side
/// of the horizontal barbell, up/down the side of the vertical one).
/// Identical seeds produce identical tensors.
DataTensor barbell_tensor(const BarbellConfig& config);

/// Uniform disc samples by rejection from [-1,1]^2 using Lcg64(seed).
Eigen::MatrixXd sample_unit_disc(Eigen::Index n, std::uint64_t seed);

/// Embedded circle snapshots x_j^(i) = r(tau_i) (cos theta_j, sin theta_j)
/// on the deterministic grid theta_j = 2 pi j / n, tau_i = i * horizon / m.
DataTensor circle_tensor(const MetricFamily& family, Eigen::Index n, int m);

/// Single circle snapshot at time tau (time_index i is caller-provided).
Snapshot circle_snapshot(const MetricFamily& family, Eigen::Index n, double tau,
                         int time_index);

} // namespace tcdm
