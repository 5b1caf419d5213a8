#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ncl {

using cplx = std::complex<double>;

/// Tolerance used by every physicality check on second moments.
inline constexpr double kPhysicalTolerance = 1e-9;

/// Below this magnitude the phase of the centered <a^2> is pinned to 0.
inline constexpr double kZeroMagnitude = 1e-14;

class UnphysicalMoments : public std::domain_error {
public:
    explicit UnphysicalMoments(const std::string& what) : std::domain_error(what) {}
};

/// Raw first and second moments of a single bosonic mode:
/// <a>, <a^2> and <a^dag a>.
struct SingleModeMoments {
    cplx mean_a{0.0, 0.0};
    cplx a_squared{0.0, 0.0};
    double photon_number = 0.0;
};

/// Second moments after removing the displacement.
///   <da^2> = v e^{i theta},  <da^dag da> = n
struct CenteredMoments {
    double v = 0.0;
    double theta = 0.0;
    double n = 0.0;
};

/// Squeezed coherent state S(beta) D(alpha)|0> with beta = strength * e^{i angle}.
struct SqueezedCoherentParams {
    cplx alpha{0.0, 0.0};
    double strength = 0.0;
    double angle = 0.0;
};

/// Closed-form moments of the squeezed coherent state.
///
/// With C = cosh r, S = sinh r:
///   <a>       = C alpha - S e^{i theta} alpha*
///   <a^2>     = C^2 alpha^2 + S^2 e^{2 i theta} alpha*^2 - C S e^{i theta} (2|alpha|^2 + 1)
///   <a^dag a> = C^2 |alpha|^2 + S^2 (1 + |alpha|^2) - C S (e^{i theta} alpha*^2 + e^{-i theta} alpha^2)
/// The first two terms of <a^2> are summed; this is what the alpha = 0 limit and
/// the Bogoliubov algebra of S^dag a S = C a - S e^{i theta} a^dag require.
SingleModeMoments squeezed_coherent_moments(const SqueezedCoherentParams& params);

/// True iff n >= -eps and v^2 <= n(n+1) + eps max(1, n(n+1)). The bound is
/// relative for large n, where centering loses absolute precision.
bool validate_physical(const CenteredMoments& c);

/// Subtracts first moments. Throws UnphysicalMoments when the result
/// violates the Cauchy-Schwarz bound v^2 <= n(n+1).
CenteredMoments center(const SingleModeMoments& m);

/// Throws UnphysicalMoments unless validate_physical(c).
void require_physical(const CenteredMoments& c);

}  // namespace ncl
