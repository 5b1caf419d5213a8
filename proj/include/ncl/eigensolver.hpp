#pragma once

#include <Eigen/Core>

#include "ncl/sparse_operator.hpp"

namespace ncl {

/// Two lowest Ritz values closer than this mark a degenerate ground space.
inline constexpr double kDegeneracyGap = 1e-10;

/// Operators up to this size are diagonalized densely by ground_state().
inline constexpr int kDenseThreshold = 512;

struct GroundStateOptions {
    double tol = 1e-9;         ///< residual target ||Hv - Ev||
    int max_iter = 50000;      ///< budget of matrix-vector products
    int krylov_dim = 80;       ///< basis size before a restart
    int keep = 24;             ///< Ritz vectors kept across a restart
    bool mix_degenerate = false;  ///< return (v0 + v1)/sqrt2 when flagged degenerate
};

struct GroundStateResult {
    double energy = 0.0;
    double second_energy = 0.0;  ///< next Ritz value (next eigenvalue for dense)
    Eigen::VectorXd vector;
    double residual = 0.0;
    int iterations = 0;          ///< matrix-vector products (0 for dense)
    bool converged = false;
    bool degenerate = false;
};

/// Full diagonalization of the dense copy of H.
GroundStateResult ground_state_dense(const SparseOperator& h, const GroundStateOptions& options = {});

/// Thick-restart Lanczos with full reorthogonalization. Starts from the
/// uniform positive vector, so results are deterministic.
GroundStateResult ground_state_lanczos(const SparseOperator& h, const GroundStateOptions& options = {});

/// Dense when dim <= kDenseThreshold, Lanczos otherwise.
GroundStateResult ground_state(const SparseOperator& h, const GroundStateOptions& options = {});
GroundStateResult ground_state(const SparseOperator& h, double tol, int max_iter);

}  // namespace ncl
