#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace tcdm {

struct KMeansResult {
    std::vector<int> assignment;  // cluster index per row
    Eigen::MatrixXd centers;      // k x dims
    double inertia = 0.0;         // sum of squared distances to centers
};

/// Lloyd's algorithm, best of `restarts` seeded runs (Forgy initialization
/// from Lcg64(seed + restart)). Deterministic for fixed inputs.
KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, int restarts,
                    std::uint64_t seed, int max_iters = 200);

/// Fraction of points whose cluster's majority ground-truth label matches
/// their own label.
double cluster_purity(const std::vector<int>& assignment, const std::vector<int>& labels);

} // namespace tcdm
