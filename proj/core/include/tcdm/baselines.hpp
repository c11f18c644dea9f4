#pragma once

#include <Eigen/Core>

#include "tcdm/chain.hpp"
#include "tcdm/tensor.hpp"

namespace tcdm {

/// Eigen-based diffusion map of a single homogeneous Markov operator:
/// eigenvalues 1 = lambda_0 >= |lambda_1| >= ..., right eigenvectors Phi
/// orthonormal in the pi-weighted inner product, embedding rows
/// delta_j^T Phi Lambda^steps with the constant coordinate dropped.
struct StaticDiffusionMap {
    Eigen::VectorXd eigenvalues;   // signed, ordered by |lambda| descending
    Eigen::MatrixXd right_eigenvectors;  // Phi, n x rank
    Eigen::VectorXd stationary;
    int steps = 1;
    Eigen::MatrixXd embedding;     // n x (rank-1), Phi Lambda^steps, column 0 dropped
    long svd_sweeps = 0;
    Eigen::VectorXd residuals;
};

/// Diffusion map of one snapshot run `steps` steps forward. The operator is
/// the same density-invariant construction used by the chain; the spectral
/// work is delegated to the shared SVD solver on a length-1 chain, whose
/// symmetric conjugation makes singular triplets and eigenpairs coincide up
/// to sign.
StaticDiffusionMap static_map(const Snapshot& snapshot, const KernelParams& params,
                              int steps, int rank, const SvdOptions& opts = {});

/// Same machinery applied to the prebuilt operator (used internally and by
/// concat_map).
StaticDiffusionMap static_map_from_operator(const DiffusionOperator& op, int steps,
                                            int rank, const SvdOptions& opts = {});

/// Concatenated-data diffusion map: each point becomes its trajectory
/// (x^(1),...,x^(upto)) in R^(d*upto) and the kernel is
/// exp(-|.|^2 / epsilon) -- note the plain-epsilon convention, unlike the
/// per-time kernel's 4*epsilon. Proceeds as static_map with steps = 1.
StaticDiffusionMap concat_map(const DataTensor& tensor, int upto, double epsilon,
                              int rank, const SvdOptions& opts = {});

/// The concatenated trajectory snapshot feeding concat_map's kernel.
Snapshot concat_snapshot(const DataTensor& tensor, int upto);

/// Bandwidth default for concat_map in its plain-epsilon convention:
/// twice the median squared pairwise distance of the concatenated
/// coordinates (the 4x rescaling of the per-time default).
double default_concat_epsilon(const DataTensor& tensor, int upto);

} // namespace tcdm
