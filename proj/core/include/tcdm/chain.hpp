#pragma once

#include <Eigen/Core>
#include <vector>

#include "tcdm/kernel.hpp"

namespace tcdm {

/// Ordered family (P_1, ..., P_t) of per-time diffusion operators over the
/// same n points. The composed operator P_t P_{t-1} ... P_1 is never formed
/// unless materialize() is called; apply/apply_transpose chain the factors.
class ChainOperator {
public:
    explicit ChainOperator(std::vector<DiffusionOperator> operators);

    Eigen::Index n() const { return n_; }
    int t() const { return static_cast<int>(operators_.size()); }
    const DiffusionOperator& op(int i) const { return operators_[static_cast<size_t>(i)]; }
    const std::vector<DiffusionOperator>& operators() const { return operators_; }

    /// Diffusion direction: P_t(...(P_2(P_1 f))), i.e. earliest operator first.
    Eigen::VectorXd apply(const Eigen::VectorXd& f) const;

    /// Markov direction: (P_t...P_1)^T mu = P_1^T(...(P_t^T mu)), latest
    /// operator first.
    Eigen::VectorXd apply_transpose(const Eigen::VectorXd& mu) const;

    /// Column-blocked versions of the two above.
    Eigen::MatrixXd apply_block(const Eigen::MatrixXd& block) const;
    Eigen::MatrixXd apply_transpose_block(const Eigen::MatrixXd& block) const;

    /// Explicit dense product P_t ... P_1. Throws too_large when n exceeds
    /// dense_limit; the product of sparse factors is generally dense.
    Eigen::MatrixXd materialize(Eigen::Index dense_limit = default_dense_limit) const;

    static constexpr Eigen::Index default_dense_limit = 4096;

private:
    std::vector<DiffusionOperator> operators_;
    Eigen::Index n_ = 0;
};

struct PowerIterOptions {
    double tol = 1e-12;      // l1 residual on pi^T P - pi^T
    long max_iters = 100000;
};

struct PowerIterStats {
    long iterations = 0;
    double residual = 0.0;
};

/// Left fixed vector of the chain product: pi >= 0, sum(pi) = 1,
/// |pi^T P^(t) - pi^T|_1 < tol. Power iteration on apply_transpose from the
/// uniform start. Throws no_convergence (with the final residual in the
/// message) or non_positive_entry when an entry falls below 1e-30.
Eigen::VectorXd stationary_distribution(const ChainOperator& chain,
                                        const PowerIterOptions& opts = {},
                                        PowerIterStats* stats = nullptr);

struct SvdOptions {
    double tol = 1e-9;       // per-triplet residual |A v - sigma u|_2
    long max_sweeps = 20000;
    int oversampling = 4;    // extra block columns beyond the requested rank
};

/// Stationary distribution, leading singular triplets of
/// A^(t) = Pi^(1/2) P^(t) Pi^(-1/2), and the distance-preserving embedding
/// Pi^(-1/2) U Sigma with its constant first column dropped.
struct SpectralDecomposition {
    Eigen::VectorXd stationary;       // pi, size n
    Eigen::VectorXd singular_values;  // sigma_0 >= ... >= sigma_rank-1
    Eigen::MatrixXd left_vectors;     // U, n x rank, orthonormal columns
    Eigen::MatrixXd right_vectors;    // V, n x rank, orthonormal columns
    Eigen::MatrixXd embedding;        // n x (rank-1)
    Eigen::VectorXd residuals;        // |A v_k - sigma_k u_k|_2 at convergence
    long svd_sweeps = 0;
    long stationary_iterations = 0;
    double stationary_residual = 0.0;
    bool rank_deficient = false;      // some requested sigma_k is numerically zero
};

/// Top `rank` singular triplets of A^(t) by blocked subspace iteration on the
/// matrix-free operator (only apply/apply_transpose of the chain are used;
/// rank = n falls back to a single exact sweep). Deterministic output: left
/// vectors are signed so their largest-magnitude entry is positive, right
/// vectors follow, and ties in sigma are broken lexicographically by left
/// vector. Pass `stationary` to reuse a precomputed distribution.
SpectralDecomposition build_A_and_svd(const ChainOperator& chain, int rank,
                                      const SvdOptions& opts = {},
                                      const Eigen::VectorXd* stationary = nullptr);

/// Embedding matrix of a decomposition: columns 2..rank of Pi^(-1/2) U Sigma
/// (the first column is constant and carries no distance information).
Eigen::MatrixXd embedding(const SpectralDecomposition& decomp);

/// Time-coupled diffusion distance between points j and k: the L^2(1/pi)
/// distance of the posterior rows delta_j^T P^(t) and delta_k^T P^(t),
/// evaluated directly through apply_transpose. O(n t l) per call; this is
/// the oracle route the SVD embedding is checked against.
double tc_distance(const ChainOperator& chain, const Eigen::VectorXd& stationary,
                   Eigen::Index j, Eigen::Index k);

} // namespace tcdm
