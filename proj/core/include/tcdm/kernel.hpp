#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <optional>

#include "tcdm/tensor.hpp"

namespace tcdm {

/// Kernel bandwidth and optional sparsification. At most one of knn /
/// threshold may be set; the diagonal is never truncated by either.
struct KernelParams {
    double epsilon = 0.0;                 // bandwidth, squared-distance units
    std::optional<int> knn;               // union-symmetrized k-nearest-neighbor graph
    std::optional<double> threshold;      // drop raw-kernel entries below theta in (0,1)
    bool strict_connectivity = false;     // error out on diagonal-only rows

    void validate() const;
};

/// A row-stochastic n x n diffusion operator built from one snapshot, stored
/// dense or sparse. `degrees` keeps the row sums of the density-normalized
/// kernel (the row-normalization denominators) for diagnostics and for the
/// single-operator stationary distribution.
class DiffusionOperator {
public:
    static DiffusionOperator from_dense(Eigen::MatrixXd weights, Eigen::VectorXd degrees,
                                        int time_index, double epsilon);
    static DiffusionOperator from_sparse(Eigen::SparseMatrix<double, Eigen::RowMajor> weights,
                                         Eigen::VectorXd degrees, int time_index, double epsilon);

    Eigen::Index n() const { return degrees_.size(); }
    int time_index() const { return time_index_; }
    double epsilon() const { return epsilon_; }
    const Eigen::VectorXd& degrees() const { return degrees_; }

    bool is_sparse() const { return sparse_storage_; }
    const Eigen::MatrixXd& dense() const;
    const Eigen::SparseMatrix<double, Eigen::RowMajor>& sparse() const;
    Eigen::MatrixXd to_dense() const;

    // P f  (diffusion direction)
    Eigen::VectorXd apply(const Eigen::VectorXd& f) const;
    // P^T mu  (Markov direction)
    Eigen::VectorXd apply_transpose(const Eigen::VectorXd& mu) const;
    // column-blocked variants, column c equals apply()/apply_transpose() of column c
    Eigen::MatrixXd apply_block(const Eigen::MatrixXd& block) const;
    Eigen::MatrixXd apply_transpose_block(const Eigen::MatrixXd& block) const;

private:
    DiffusionOperator() = default;

    bool sparse_storage_ = false;
    Eigen::MatrixXd dense_;
    Eigen::SparseMatrix<double, Eigen::RowMajor> sparse_;
    Eigen::VectorXd degrees_;
    int time_index_ = 1;
    double epsilon_ = 0.0;
};

/// Raw Gaussian affinity: entry (j,k) = exp(-|x_j - x_k|^2 / (4 epsilon)).
/// Symmetric with unit diagonal.
Eigen::MatrixXd gaussian_kernel(const Snapshot& snapshot, double epsilon);

/// Row sums of a nonnegative kernel; the sampling-density estimate.
Eigen::VectorXd density_estimate(const Eigen::MatrixXd& kernel);

/// Density-invariant normalization K(j,k) / (q(j) q(k)). Throws zero_density
/// if q has a nonpositive entry.
Eigen::MatrixXd density_normalize(const Eigen::MatrixXd& kernel, const Eigen::VectorXd& q);

/// Full pipeline: Gaussian kernel -> optional sparsify -> density estimate ->
/// density normalize -> row normalize. Sparsified operators use sparse
/// storage; the density estimate is taken over the sparsified kernel so rows
/// still sum to one exactly.
DiffusionOperator build_operator(const Snapshot& snapshot, const KernelParams& params);

/// Default bandwidth: half the median of the squared pairwise distances of
/// the snapshot.
double default_epsilon(const Snapshot& snapshot);

/// Global default shared by all operators of a chain over snapshots
/// [0, upto): the median of the per-snapshot medians of squared pairwise
/// distance, halved. upto <= 0 means all snapshots.
double default_epsilon(const DataTensor& tensor, int upto = -1);

} // namespace tcdm
