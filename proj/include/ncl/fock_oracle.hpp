#pragma once

#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "ncl/entanglement.hpp"
#include "ncl/moments.hpp"

namespace ncl::fock {

/// Tail mass above which a truncated state is flagged.
inline constexpr double kTruncationTolerance = 1e-12;

/// Single-mode state in the truncated number basis |0> .. |dim-1>.
struct FockVector {
    std::vector<cplx> coefficients;
    bool truncation_overflow = false;

    int dim() const { return static_cast<int>(coefficients.size()); }
    double norm() const;
    /// Probability carried by the top max(1, dim/10) levels.
    double tail_mass() const;
};

/// Two-mode state, coefficients(n1, n2).
struct TwoModeVector {
    Eigen::MatrixXcd coefficients;

    double norm() const { return coefficients.norm(); }
};

/// Images of a1^dag under the splitter in the Schroedinger picture:
/// |n, 0> -> (mu1 a1^dag + mu2 a2^dag)^n / sqrt(n!) |0, 0>.
struct CreationImages {
    cplx mu1;
    cplx mu2;
};

enum class PhaseConvention {
    /// mu1 = t e^{i phi}, mu2 = -r. Transposing the Heisenberg map
    /// a1 -> t e^{i phi} a1 + r a2, a2 -> -r a1 + t e^{-i phi} a2 gives
    /// B a1^dag B^dag = t e^{i phi} a1^dag - r a2^dag.
    heisenberg,
    /// mu1 = t e^{-i phi}; a deliberately wrong sign used as a negative control.
    corrupted,
};

CreationImages creation_images(const BeamSplitterParams& bs,
                               PhaseConvention convention = PhaseConvention::heisenberg);

/// Dense dim x dim ladder matrix: sqrt(n) on the first superdiagonal.
Eigen::MatrixXd annihilation_matrix(int dim);

/// Sparse complex form of annihilation_matrix.
Eigen::SparseMatrix<cplx> annihilation_sparse(int dim);

/// exp(generator) * v by scaled Taylor iteration. The number of scaling steps
/// follows the 1-norm of the generator so every partial series converges fast.
Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<cplx>& generator, const Eigen::VectorXcd& v);

/// Dimension guideline 20 + 8|alpha|^2 + 10 e^{2r}.
int recommended_dimension(const SqueezedCoherentParams& params);

/// S(beta) D(alpha)|0> with D = exp(alpha a^dag - alpha* a) and
/// S = exp((beta* a^2 - beta a^dag^2)/2), beta = r e^{i theta}, built in the
/// truncated space of size `dim` and renormalized.
FockVector squeezed_coherent_vector(const SqueezedCoherentParams& params, int dim);

/// As above, starting at max(min_dim, recommended_dimension) and growing the
/// truncation by half until the state is healthy (or max_dim is reached).
FockVector squeezed_coherent_vector_auto(const SqueezedCoherentParams& params, int min_dim, int max_dim = 4096);

/// <a>, <a^2>, <a^dag a> of a truncated state.
SingleModeMoments moments_of(const FockVector& state);

/// Input in port 1, vacuum in port 2. Output dims equal the input dim in
/// each mode; photon number is conserved so n1 + n2 <= dim - 1.
TwoModeVector apply_beam_splitter(const FockVector& input, const BeamSplitterParams& bs,
                                  PhaseConvention convention = PhaseConvention::heisenberg);

/// Raw ladder moments of a two-mode state.
struct TwoModeLadderMoments {
    cplx mean1, mean2;
    cplx a1_squared, a2_squared;
    double n1 = 0.0, n2 = 0.0;
    cplx a1a2;
    cplx a1dag_a2;
};

TwoModeLadderMoments ladder_moments(const TwoModeVector& state);

/// V_ij = (1/2)<Y_i Y_j + Y_j Y_i> - <Y_i><Y_j>, Y = (x1, p1, x2, p2), evaluated
/// by applying the quadrature operators to the state directly.
CovarianceBlocks two_mode_covariance(const TwoModeVector& state);

}  // namespace ncl::fock
