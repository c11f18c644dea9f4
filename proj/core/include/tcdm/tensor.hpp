#pragma once

#include <Eigen/Core>
#include <filesystem>
#include <vector>

namespace tcdm {

/// One measurement of all n points at a single time: an n x d coordinate
/// matrix plus its position on the (uniform) time grid. Row j of every
/// snapshot in a tensor refers to the same underlying point; correspondence
/// is positional and never permuted.
struct Snapshot {
    Eigen::MatrixXd points;  // n x d
    int time_index = 1;      // 1-based position in the sequence
    double time_value = 0.0;

    Eigen::Index n() const { return points.rows(); }
    Eigen::Index d() const { return points.cols(); }

    /// Throws shape_mismatch for n==0 or d==0, non_finite for NaN/Inf.
    void validate() const;
};

/// An evolving point cloud: m snapshots of n points in R^d on a strictly
/// increasing, uniformly spaced time grid. Immutable after construction and
/// safe to share across threads.
class DataTensor {
public:
    /// Validates every snapshot plus the cross-snapshot invariants
    /// (consistent n and d, sequential time indices, uniform spacing).
    explicit DataTensor(std::vector<Snapshot> snapshots,
                        std::vector<int> labels = {});

    Eigen::Index n() const { return n_; }
    Eigen::Index d() const { return d_; }
    int m() const { return static_cast<int>(snapshots_.size()); }

    /// 0-based access: snapshot(0) has time_index 1.
    const Snapshot& snapshot(int i) const;
    const std::vector<Snapshot>& snapshots() const { return snapshots_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<int>& labels() const { return labels_; }

private:
    std::vector<Snapshot> snapshots_;
    std::vector<int> labels_;  // optional per-point ground truth, empty if absent
    Eigen::Index n_ = 0;
    Eigen::Index d_ = 0;
};

/// Read a tensor from a manifest JSON file. The manifest carries n, d, m,
/// times, snapshot file paths (relative to the manifest directory) and an
/// optional labels path. All invariants are checked before returning.
DataTensor load_tensor(const std::filesystem::path& manifest_path);

/// Write one CSV per snapshot plus manifest.json (and labels.csv when the
/// tensor carries labels) under out_dir. Returns the manifest path.
/// load_tensor(save_tensor(T)) reproduces T coordinate-for-coordinate.
std::filesystem::path save_tensor(const DataTensor& tensor,
                                  const std::filesystem::path& out_dir);

/// Relative spacing deviation above which a time grid is rejected.
inline constexpr double uniform_time_rel_tol = 1e-9;

} // namespace tcdm
