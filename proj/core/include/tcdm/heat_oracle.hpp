#pragma once

#include <Eigen/Core>
#include <vector>

#include "tcdm/synthetic.hpp"

namespace tcdm {

/// Exact solution operator of du/dtau = r(tau)^(-2) d^2u/dtheta^2 on the
/// circle family over [0, t], sampled on the n-point grid. All Laplacians of
/// the family commute, so the solution acts diagonally on Fourier modes:
/// e^(ik theta) decays by exp(-k^2 int_0^t r(tau)^(-2) dtau).
struct OrderedExponentialCircle {
    MetricFamily family;
    double t = 1.0;
    Eigen::Index grid_n = 0;

    void validate() const;
};

enum class ModePhase { cosine, sine };

struct HeatModeResult {
    double decay = 1.0;
    Eigen::VectorXd values;  // decayed eigenfunction on the grid
};

/// int_from^to r(tau)^(-2) dtau in closed form:
/// (1/rate)(1/r(from) - 1/r(to)) when rate != 0, (to-from)/r0^2 otherwise.
double inv_radius_sq_integral(const MetricFamily& family, double from, double to);

/// Exact decay of mode k over [0, t] plus the decayed mode on the grid.
HeatModeResult exact_heat_apply(const OrderedExponentialCircle& oracle, int mode,
                                ModePhase phase);

struct SweepRow {
    double epsilon = 0.0;
    Eigen::Index n = 0;
    int steps = 0;
    double rel_l2_error = 0.0;
    bool under_resolved = false;  // sampling term n^(-1/2) eps^(-d/4-1/2) exceeds eps
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double fitted_slope = 0.0;  // log-log least-squares slope of error vs epsilon
    int mode = 0;
    double t = 0.0;
    Eigen::Index n = 0;
};

/// For each bandwidth in eps_list (strictly decreasing): regenerate the
/// circle snapshots on the matching time grid tau_i = i*eps, build the
/// diffusion operators with that same eps, push the sampled mode through the
/// ceil(t/eps)-step chain, and compare against the exact heat action in
/// relative L^2 over the grid. Operators are built and discarded one at a
/// time, so memory stays O(n^2).
SweepResult convergence_sweep(const MetricFamily& family, double t, int mode,
                              Eigen::Index n, const std::vector<double>& eps_list,
                              ModePhase phase = ModePhase::cosine);

/// Least-squares slope of log(y) against log(x); x and y positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Residual |decay([0,eps]) - (1 - eps k^2 / r(0)^2)| for each eps; the
/// short-interval expansion of the solution operator is second order, so the
/// fitted slope should approach 2.
std::vector<double> short_time_expansion_residuals(const MetricFamily& family, int mode,
                                                   const std::vector<double>& eps_list);

/// Residual |decay([0,t]) - prod_i (1 - eps k^2 / r(tau_i)^2)| with
/// tau_i = i*eps, i = 1..t/eps; first order in eps, fitted slope near 1.
/// Each eps must divide t to an integer step count.
std::vector<double> product_expansion_residuals(const MetricFamily& family, double t,
                                                int mode,
                                                const std::vector<double>& eps_list);

} // namespace tcdm
