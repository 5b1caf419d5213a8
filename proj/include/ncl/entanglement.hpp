#pragma once

#include <Eigen/Core>

#include "ncl/moments.hpp"

namespace ncl {

/// Clamp window for the eta discriminant and det V, relative to max(1, sigma^2).
inline constexpr double kDegeneracyTolerance = 1e-10;

/// Beam splitter a1 -> t e^{i phi} a1 + r a2, a2 -> -r a1 + t e^{-i phi} a2.
struct BeamSplitterParams {
    double t = M_SQRT1_2;
    double r = M_SQRT1_2;
    double phi = 0.0;

    /// r = sqrt(1 - t^2); phi is wrapped into [0, 2 pi).
    static BeamSplitterParams from_transmission(double t, double phi);
    static BeamSplitterParams balanced(double phi = 0.0) { return from_transmission(M_SQRT1_2, phi); }

    bool valid() const;
};

/// Blocks of the two-mode covariance matrix V = [[A, C], [C^T, B]] in the
/// quadrature ordering (x1, p1, x2, p2), x = (a^dag + a)/sqrt2, p = i(a^dag - a)/sqrt2.
struct CovarianceBlocks {
    Eigen::Matrix2d A = Eigen::Matrix2d::Identity() * 0.5;
    Eigen::Matrix2d B = Eigen::Matrix2d::Identity() * 0.5;
    Eigen::Matrix2d C = Eigen::Matrix2d::Zero();

    Eigen::Matrix4d assemble() const;
    double max_abs_difference(const CovarianceBlocks& other) const;
};

struct SymplecticSpectrum {
    double minus = 0.5;
    double plus = 0.5;
};

/// Output covariance of a beam splitter fed with `c` in port 1 and vacuum in port 2.
CovarianceBlocks covariance_from_input(const CenteredMoments& c, const BeamSplitterParams& bs);

/// Partial-transpose symplectic eigenvalues
///   eta^{+-} = sqrt( (sigma +- sqrt(sigma^2 - 4 det V)) / 2 ),
///   sigma = det A + det B - 2 det C.
/// Throws UnphysicalMoments if the discriminant or det V is negative beyond
/// kDegeneracyTolerance * max(1, sigma^2).
SymplecticSpectrum symplectic_eta(const CovarianceBlocks& blocks);

/// max(0, -ln(2 eta_minus)).
double log_negativity(double eta_minus);

/// Simon's separability polynomial; negative means entangled.
double simon_lambda(const CovarianceBlocks& blocks);

/// Variance-sum (DGCZ) witness with the optimal real scaling c*.
/// Returns 0 when either output port carries no photons.
double dgcz_lambda(const CenteredMoments& c, const BeamSplitterParams& bs);

/// |<da^2>| > <da^dag da>.
bool dgcz_simple(const CenteredMoments& c);

/// |<a>|^2 > <a^dag a> on raw moments.
bool hz_condition(const SingleModeMoments& m);

struct NonclassicalityReport {
    double eta_minus = 0.5;
    double eta_plus = 0.5;
    double E_N = 0.0;
    double lambda_simon = 0.0;
    double lambda_dgcz = 0.0;
    bool dgcz_simple = false;
    bool hz = false;
    double best_t = M_SQRT1_2;
    double best_phi = 0.0;
};

/// Every criterion at a fixed beam splitter.
NonclassicalityReport evaluate_fixed(const SingleModeMoments& m, const BeamSplitterParams& bs);

/// Log negativity of the beam-splitter output; the quantity the optimizer maximizes.
double entanglement_at(const CenteredMoments& c, const BeamSplitterParams& bs);

}  // namespace ncl
