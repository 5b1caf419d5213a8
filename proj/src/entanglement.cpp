#include "ncl/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

namespace ncl {

BeamSplitterParams BeamSplitterParams::from_transmission(double t, double phi) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("transmission must lie in [0, 1]");
    }
    BeamSplitterParams bs;
    bs.t = t;
    bs.r = std::sqrt(std::max(0.0, 1.0 - t * t));
    bs.phi = std::fmod(phi, 2.0 * M_PI);
    if (bs.phi < 0.0) bs.phi += 2.0 * M_PI;
    return bs;
}

bool BeamSplitterParams::valid() const {
    return t >= 0.0 && r >= 0.0 && std::abs(t * t + r * r - 1.0) <= 1e-12;
}

Eigen::Matrix4d CovarianceBlocks::assemble() const {
    Eigen::Matrix4d v;
    v << A, C, C.transpose(), B;
    return v;
}

double CovarianceBlocks::max_abs_difference(const CovarianceBlocks& other) const {
    return (assemble() - other.assemble()).cwiseAbs().maxCoeff();
}

CovarianceBlocks covariance_from_input(const CenteredMoments& c, const BeamSplitterParams& bs) {
    require_physical(c);
    if (!bs.valid()) {
        throw std::invalid_argument("beam splitter requires t, r >= 0 and t^2 + r^2 = 1");
    }
    const double v = c.v;
    const double n = c.n;
    const double t2 = bs.t * bs.t;
    const double r2 = bs.r * bs.r;
    const double tr = bs.t * bs.r;

    const double c2 = std::cos(c.theta + 2.0 * bs.phi);
    const double s2 = std::sin(c.theta + 2.0 * bs.phi);
    const double c0 = std::cos(c.theta);
    const double s0 = std::sin(c.theta);
    const double c1 = std::cos(c.theta + bs.phi);
    const double s1 = std::sin(c.theta + bs.phi);
    const double cp = std::cos(bs.phi);
    const double sp = std::sin(bs.phi);

    CovarianceBlocks out;
    out.A << t2 * (c2 * v + n) + 0.5, t2 * v * s2,
             t2 * v * s2, t2 * (-c2 * v + n) + 0.5;
    out.B << r2 * (c0 * v + n) + 0.5, r2 * v * s0,
             r2 * v * s0, r2 * (-c0 * v + n) + 0.5;
    out.C << -(c1 * v + cp * n), -s1 * v + sp * n,
             -(s1 * v + sp * n), c1 * v - cp * n;
    out.C *= tr;
    return out;
}

SymplecticSpectrum symplectic_eta(const CovarianceBlocks& blocks) {
    const double det_v = blocks.assemble().determinant();
    const double sigma = blocks.A.determinant() + blocks.B.determinant() - 2.0 * blocks.C.determinant();
    double disc = sigma * sigma - 4.0 * det_v;
    // Both tests are relative to sigma^2, the magnitude the cancellation works against.
    const double scale = std::max(1.0, sigma * sigma);
    if (disc < -kDegeneracyTolerance * scale || det_v < -kDegeneracyTolerance * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "covariance matrix is unphysical: sigma^2 - 4 det V = " << disc << ", det V = " << det_v;
        throw UnphysicalMoments(os.str());
    }
    disc = std::max(0.0, disc);
    const double root = std::sqrt(disc);
    SymplecticSpectrum eta;
    eta.minus = std::sqrt(std::max(0.0, sigma - root) / 2.0);
    eta.plus = std::sqrt((sigma + root) / 2.0);
    return eta;
}

double log_negativity(double eta_minus) {
    return std::max(0.0, -std::log(2.0 * eta_minus));
}

double simon_lambda(const CovarianceBlocks& blocks) {
    Eigen::Matrix2d J;
    J << 0.0, 1.0, -1.0, 0.0;
    const double det_a = blocks.A.determinant();
    const double det_b = blocks.B.determinant();
    const double det_c = blocks.C.determinant();
    const double trace_term =
        (blocks.A * J * blocks.C * J * blocks.B * J * blocks.C.transpose() * J).trace();
    const double q = 0.25 - std::abs(det_c);
    return det_a * det_b + q * q - trace_term - 0.25 * (det_a + det_b);
}

double dgcz_lambda(const CenteredMoments& c, const BeamSplitterParams& bs) {
    const double n1 = bs.t * bs.t * c.n;
    const double n2 = bs.r * bs.r * c.n;
    if (bs.t == 0.0 || bs.r == 0.0 || !(n1 > 0.0) || !(n2 > 0.0)) {
        return 0.0;
    }
    // <a1 a2> = <a2 a1> = -t r e^{i phi} <da^2>
    const cplx pair = -bs.t * bs.r * std::polar(1.0, bs.phi) * std::polar(c.v, c.theta);
    const double re_sum = 2.0 * pair.real();
    const double c_sq = std::sqrt(n2 / n1);
    const double sign_c = re_sum > 0.0 ? -1.0 : 1.0;
    return 2.0 * c_sq * n1 + (2.0 / c_sq) * n2 + 2.0 * sign_c * re_sum;
}

bool dgcz_simple(const CenteredMoments& c) {
    return c.v > c.n;
}

bool hz_condition(const SingleModeMoments& m) {
    return std::norm(m.mean_a) > m.photon_number;
}

double entanglement_at(const CenteredMoments& c, const BeamSplitterParams& bs) {
    return log_negativity(symplectic_eta(covariance_from_input(c, bs)).minus);
}

NonclassicalityReport evaluate_fixed(const SingleModeMoments& m, const BeamSplitterParams& bs) {
    const CenteredMoments c = center(m);
    const CovarianceBlocks blocks = covariance_from_input(c, bs);
    const SymplecticSpectrum eta = symplectic_eta(blocks);

    NonclassicalityReport report;
    report.eta_minus = eta.minus;
    report.eta_plus = eta.plus;
    report.E_N = log_negativity(eta.minus);
    report.lambda_simon = simon_lambda(blocks);
    report.lambda_dgcz = dgcz_lambda(c, bs);
    report.dgcz_simple = dgcz_simple(c);
    report.hz = hz_condition(m);
    report.best_t = bs.t;
    report.best_phi = bs.phi;
    return report;
}

}  // namespace ncl
