#include "ncl/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncl::fock {

namespace {

void check_dim(int dim) {
    if (dim < 2) throw std::invalid_argument("Fock dimension must be at least 2");
}

double one_norm(const Eigen::SparseMatrix<cplx>& m) {
    double best = 0.0;
    for (int k = 0; k < m.outerSize(); ++k) {
        double col = 0.0;
        for (Eigen::SparseMatrix<cplx>::InnerIterator it(m, k); it; ++it) col += std::abs(it.value());
        best = std::max(best, col);
    }
    return best;
}

// Quadrature action on one mode of a two-mode coefficient matrix.
// mode 0 acts on rows (n1), mode 1 on columns (n2).
enum class Quadrature { x, p };

Eigen::MatrixXcd apply_quadrature(const Eigen::MatrixXcd& psi, int mode, Quadrature q) {
    const int rows = static_cast<int>(psi.rows());
    const int cols = static_cast<int>(psi.cols());
    const int levels = mode == 0 ? rows : cols;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows, cols);
    // x = (a^dag + a)/sqrt2, p = i(a^dag - a)/sqrt2
    const cplx up_coeff = q == Quadrature::x ? cplx(M_SQRT1_2, 0.0) : cplx(0.0, M_SQRT1_2);
    const cplx down_coeff = q == Quadrature::x ? cplx(M_SQRT1_2, 0.0) : cplx(0.0, -M_SQRT1_2);
    for (int n = 0; n < levels; ++n) {
        // a|n+1> = sqrt(n+1)|n>, a^dag|n-1> = sqrt(n)|n>
        if (n + 1 < levels) {
            const cplx w = down_coeff * std::sqrt(static_cast<double>(n + 1));
            if (mode == 0) out.row(n) += w * psi.row(n + 1);
            else out.col(n) += w * psi.col(n + 1);
        }
        if (n >= 1) {
            const cplx w = up_coeff * std::sqrt(static_cast<double>(n));
            if (mode == 0) out.row(n) += w * psi.row(n - 1);
            else out.col(n) += w * psi.col(n - 1);
        }
    }
    return out;
}

cplx inner(const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs) {
    return (lhs.conjugate().cwiseProduct(rhs)).sum();
}

}  // namespace

double FockVector::norm() const {
    double s = 0.0;
    for (const cplx& c : coefficients) s += std::norm(c);
    return std::sqrt(s);
}

double FockVector::tail_mass() const {
    const int window = std::max(1, dim() / 10);
    double s = 0.0;
    for (int n = dim() - window; n < dim(); ++n) s += std::norm(coefficients[n]);
    return s;
}

CreationImages creation_images(const BeamSplitterParams& bs, PhaseConvention convention) {
    const double sign = convention == PhaseConvention::heisenberg ? 1.0 : -1.0;
    return {bs.t * std::polar(1.0, sign * bs.phi), cplx(-bs.r, 0.0)};
}

Eigen::MatrixXd annihilation_matrix(int dim) {
    check_dim(dim);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::SparseMatrix<cplx> annihilation_sparse(int dim) {
    check_dim(dim);
    Eigen::SparseMatrix<cplx> a(dim, dim);
    a.reserve(Eigen::VectorXi::Constant(dim, 1));
    for (int n = 1; n < dim; ++n) a.insert(n - 1, n) = std::sqrt(static_cast<double>(n));
    a.makeCompressed();
    return a;
}

Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<cplx>& generator, const Eigen::VectorXcd& v) {
    const double norm = one_norm(generator);
    const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
    Eigen::VectorXcd result = v;
    for (int s = 0; s < steps; ++s) {
        Eigen::VectorXcd term = result;
        Eigen::VectorXcd sum = result;
        for (int k = 1; k < 200; ++k) {
            term = generator * term;
            term /= static_cast<double>(steps) * k;
            sum += term;
            if (term.norm() <= 1e-17 * sum.norm()) break;
        }
        result = std::move(sum);
    }
    return result;
}

int recommended_dimension(const SqueezedCoherentParams& params) {
    const double guide = 20.0 + 8.0 * std::norm(params.alpha) + 10.0 * std::exp(2.0 * params.strength);
    return static_cast<int>(std::ceil(guide));
}

FockVector squeezed_coherent_vector(const SqueezedCoherentParams& params, int dim) {
    check_dim(dim);
    if (!(params.strength >= 0.0)) throw std::invalid_argument("squeezing strength must be non-negative");

    const Eigen::SparseMatrix<cplx> a = annihilation_sparse(dim);
    const Eigen::SparseMatrix<cplx> adag = a.adjoint();

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi(0) = 1.0;

    if (params.alpha != cplx(0.0, 0.0)) {
        const Eigen::SparseMatrix<cplx> displacement = params.alpha * adag - std::conj(params.alpha) * a;
        psi = expm_multiply(displacement, psi);
    }
    if (params.strength > 0.0) {
        const cplx beta = std::polar(params.strength, params.angle);
        const Eigen::SparseMatrix<cplx> a2 = a * a;
        const Eigen::SparseMatrix<cplx> adag2 = adag * adag;
        const Eigen::SparseMatrix<cplx> squeeze = 0.5 * (std::conj(beta) * a2 - beta * adag2);
        psi = expm_multiply(squeeze, psi);
    }
    psi.normalize();

    FockVector out;
    out.coefficients.assign(psi.data(), psi.data() + dim);
    out.truncation_overflow = out.tail_mass() > kTruncationTolerance;
    return out;
}

FockVector squeezed_coherent_vector_auto(const SqueezedCoherentParams& params, int min_dim, int max_dim) {
    int dim = std::max({min_dim, recommended_dimension(params), 2});
    for (;;) {
        FockVector state = squeezed_coherent_vector(params, dim);
        if (!state.truncation_overflow || dim >= max_dim) return state;
        dim = std::min(max_dim, dim + dim / 2);
    }
}

SingleModeMoments moments_of(const FockVector& state) {
    SingleModeMoments m;
    const auto& c = state.coefficients;
    const int dim = state.dim();
    for (int n = 0; n < dim; ++n) {
        m.photon_number += n * std::norm(c[n]);
        if (n + 1 < dim) m.mean_a += std::conj(c[n]) * std::sqrt(static_cast<double>(n + 1)) * c[n + 1];
        if (n + 2 < dim) {
            m.a_squared += std::conj(c[n]) * std::sqrt(static_cast<double>((n + 1) * (n + 2))) * c[n + 2];
        }
    }
    return m;
}

TwoModeVector apply_beam_splitter(const FockVector& input, const BeamSplitterParams& bs,
                                  PhaseConvention convention) {
    const int dim = input.dim();
    check_dim(dim);
    const CreationImages mu = creation_images(bs, convention);
    const double mag1 = std::abs(mu.mu1);
    const double mag2 = std::abs(mu.mu2);
    const double arg1 = std::arg(mu.mu1);
    const double arg2 = std::arg(mu.mu2);

    TwoModeVector out;
    out.coefficients = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        const cplx cn = input.coefficients[n];
        if (cn == cplx(0.0, 0.0)) continue;
        if (mag1 == 0.0) {
            out.coefficients(0, n) += cn * std::pow(mu.mu2, n);
            continue;
        }
        if (mag2 == 0.0) {
            out.coefficients(n, 0) += cn * std::pow(mu.mu1, n);
            continue;
        }
        // sqrt(binom(n, k)) mu1^k mu2^(n-k), evaluated in log space.
        const double log_nfact = std::lgamma(n + 1.0);
        for (int k = 0; k <= n; ++k) {
            const double log_mag = 0.5 * (log_nfact - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) +
                                   k * std::log(mag1) + (n - k) * std::log(mag2);
            const double phase = k * arg1 + (n - k) * arg2;
            out.coefficients(k, n - k) += cn * std::polar(std::exp(log_mag), phase);
        }
    }
    return out;
}

TwoModeLadderMoments ladder_moments(const TwoModeVector& state) {
    const Eigen::MatrixXcd& psi = state.coefficients;
    const int d1 = static_cast<int>(psi.rows());
    const int d2 = static_cast<int>(psi.cols());
    TwoModeLadderMoments m;
    for (int i = 0; i < d1; ++i) {
        for (int j = 0; j < d2; ++j) {
            const cplx bra = std::conj(psi(i, j));
            if (bra == cplx(0.0, 0.0)) continue;
            m.n1 += i * std::norm(psi(i, j));
            m.n2 += j * std::norm(psi(i, j));
            const double si = std::sqrt(static_cast<double>(i + 1));
            const double sj = std::sqrt(static_cast<double>(j + 1));
            if (i + 1 < d1) m.mean1 += bra * si * psi(i + 1, j);
            if (j + 1 < d2) m.mean2 += bra * sj * psi(i, j + 1);
            if (i + 2 < d1) m.a1_squared += bra * si * std::sqrt(i + 2.0) * psi(i + 2, j);
            if (j + 2 < d2) m.a2_squared += bra * sj * std::sqrt(j + 2.0) * psi(i, j + 2);
            if (i + 1 < d1 && j + 1 < d2) m.a1a2 += bra * si * sj * psi(i + 1, j + 1);
            // <i, j| a1^dag a2 |i-1, j+1>
            if (i >= 1 && j + 1 < d2) m.a1dag_a2 += bra * std::sqrt(static_cast<double>(i)) * sj * psi(i - 1, j + 1);
        }
    }
    return m;
}

CovarianceBlocks two_mode_covariance(const TwoModeVector& state) {
    const Eigen::Index d1 = state.coefficients.rows();
    const Eigen::Index d2 = state.coefficients.cols();
    // One extra level per mode so a single raising step is represented exactly.
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(d1 + 1, d2 + 1);
    psi.topLeftCorner(d1, d2) = state.coefficients;

    const Eigen::MatrixXcd y[4] = {
        apply_quadrature(psi, 0, Quadrature::x),
        apply_quadrature(psi, 0, Quadrature::p),
        apply_quadrature(psi, 1, Quadrature::x),
        apply_quadrature(psi, 1, Quadrature::p),
    };
    double mean[4];
    for (int i = 0; i < 4; ++i) mean[i] = inner(psi, y[i]).real();

    Eigen::Matrix4d v;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            v(i, j) = inner(y[i], y[j]).real() - mean[i] * mean[j];
            v(j, i) = v(i, j);
        }
    }
    CovarianceBlocks blocks;
    blocks.A = v.topLeftCorner<2, 2>();
    blocks.C = v.topRightCorner<2, 2>();
    blocks.B = v.bottomRightCorner<2, 2>();
    return blocks;
}

}  // namespace ncl::fock
