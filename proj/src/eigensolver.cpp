#include "ncl/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace ncl {

namespace {

// Largest-magnitude coefficient made positive.
void fix_phase(Eigen::VectorXd& v) {
    Eigen::Index idx = 0;
    v.cwiseAbs().maxCoeff(&idx);
    if (v(idx) < 0.0) v = -v;
}

void mix_pair(Eigen::VectorXd& ground, Eigen::VectorXd other) {
    other -= other.dot(ground) * ground;
    if (other.norm() == 0.0) return;
    other.normalize();
    fix_phase(other);
    ground = (ground + other).normalized();
}

struct LanczosOutcome {
    double energy = 0.0;
    double next_ritz = INFINITY;
    Eigen::VectorXd vector;
    double residual = 0.0;
    int matvecs = 0;
};

// Lowest eigenpair of h restricted to the orthogonal complement of `deflate`
// (an empty vector means no deflation).
LanczosOutcome lanczos_lowest(const SparseOperator& h, const Eigen::VectorXd& start,
                              const Eigen::VectorXd& deflate, const GroundStateOptions& options) {
    const int n = h.dim();
    const bool deflating = deflate.size() == n;
    const int space = deflating ? n - 1 : n;
    const int m = std::clamp(options.krylov_dim, 1, std::max(1, space));
    const int keep = std::clamp(options.keep, 1, std::max(1, m - 1));

    auto project_out = [&](Eigen::VectorXd& w) {
        if (deflating) w -= deflate.dot(w) * deflate;
    };

    Eigen::MatrixXd basis(n, m + 1);
    Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXd v0 = start;
    project_out(v0);
    basis.col(0) = v0.normalized();

    LanczosOutcome out;
    int first = 0;
    for (;;) {
        int built = m;
        bool invariant = false;
        for (int j = first; j < m; ++j) {
            Eigen::VectorXd w = h.apply(basis.col(j));
            ++out.matvecs;
            project_out(w);
            const double scale = w.norm();
            auto prev = basis.leftCols(j + 1);
            Eigen::VectorXd coeff = prev.transpose() * w;
            w.noalias() -= prev * coeff;
            const Eigen::VectorXd again = prev.transpose() * w;
            w.noalias() -= prev * again;
            coeff += again;
            project_out(w);
            projected.col(j).head(j + 1) = coeff;
            projected.row(j).head(j + 1) = coeff.transpose();

            const double beta = w.norm();
            if (beta <= 1e-12 * std::max(scale, 1.0) || j + 1 == space) {
                built = j + 1;
                invariant = true;
                break;
            }
            basis.col(j + 1) = w / beta;
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected.topLeftCorner(built, built));
        const Eigen::VectorXd& ritz = small.eigenvalues();
        const Eigen::MatrixXd& coords = small.eigenvectors();

        Eigen::VectorXd ground = (basis.leftCols(built) * coords.col(0)).normalized();
        Eigen::VectorXd hv = h.apply(ground);
        ++out.matvecs;
        project_out(hv);
        const double residual = (hv - ritz(0) * ground).norm();

        if (residual <= options.tol || invariant || out.matvecs >= options.max_iter) {
            out.energy = ritz(0);
            out.next_ritz = built > 1 ? ritz(1) : INFINITY;
            out.vector = std::move(ground);
            out.residual = residual;
            return out;
        }

        // Thick restart: lowest `keep` Ritz vectors plus the last Lanczos direction.
        const int k = std::min(keep, built - 1);
        const Eigen::MatrixXd ritz_vectors = basis.leftCols(built) * coords.leftCols(k);
        const Eigen::VectorXd tail = basis.col(built);
        basis.leftCols(k) = ritz_vectors;
        basis.col(k) = tail;
        projected.setZero();
        for (int i = 0; i < k; ++i) projected(i, i) = ritz(i);
        first = k;
    }
}

// Deterministic generic start for the deflated run; the uniform vector can be
// nearly orthogonal to a symmetry partner of the ground state.
Eigen::VectorXd scrambled_start(int n) {
    std::mt19937_64 engine(0x5eed);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = static_cast<double>(engine() >> 11) * 0x1.0p-53 - 0.5;
    return v;
}

}  // namespace

GroundStateResult ground_state_dense(const SparseOperator& h, const GroundStateOptions& options) {
    if (h.dim() < 1) throw std::invalid_argument("empty operator");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.to_dense());
    if (solver.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");

    GroundStateResult result;
    result.energy = solver.eigenvalues()(0);
    result.second_energy = h.dim() > 1 ? solver.eigenvalues()(1) : INFINITY;
    result.degenerate = result.second_energy - result.energy < kDegeneracyGap;
    result.vector = solver.eigenvectors().col(0);
    fix_phase(result.vector);
    if (result.degenerate && options.mix_degenerate) mix_pair(result.vector, solver.eigenvectors().col(1));
    result.residual = (h.apply(result.vector) - result.energy * result.vector).norm();
    result.iterations = 0;
    result.converged = true;
    return result;
}

GroundStateResult ground_state_lanczos(const SparseOperator& h, const GroundStateOptions& options) {
    const int n = h.dim();
    if (n < 1) throw std::invalid_argument("empty operator");

    const Eigen::VectorXd uniform = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    LanczosOutcome lowest = lanczos_lowest(h, uniform, Eigen::VectorXd(), options);

    GroundStateResult result;
    result.energy = lowest.energy;
    result.vector = std::move(lowest.vector);
    fix_phase(result.vector);
    result.iterations = lowest.matvecs;
    result.second_energy = lowest.next_ritz;

    if (n > 1) {
        GroundStateOptions second_options = options;
        second_options.max_iter = std::max(1, options.max_iter - lowest.matvecs);
        LanczosOutcome next = lanczos_lowest(h, scrambled_start(n), result.vector, second_options);
        result.iterations += next.matvecs;
        result.second_energy = std::min(result.second_energy, next.energy);
        result.degenerate = result.second_energy - result.energy < kDegeneracyGap;
        if (result.degenerate && options.mix_degenerate) mix_pair(result.vector, next.vector);
    }
    result.residual = (h.apply(result.vector) - result.energy * result.vector).norm();
    result.converged = result.residual <= options.tol;
    return result;
}

GroundStateResult ground_state(const SparseOperator& h, const GroundStateOptions& options) {
    return h.dim() <= kDenseThreshold ? ground_state_dense(h, options) : ground_state_lanczos(h, options);
}

GroundStateResult ground_state(const SparseOperator& h, double tol, int max_iter) {
    GroundStateOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    return ground_state(h, options);
}

}  // namespace ncl
