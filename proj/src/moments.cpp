#include "ncl/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncl {

SingleModeMoments squeezed_coherent_moments(const SqueezedCoherentParams& params) {
    if (!(params.strength >= 0.0)) {
        throw std::invalid_argument("squeezing strength must be non-negative");
    }
    const double c = std::cosh(params.strength);
    const double s = std::sinh(params.strength);
    const cplx phase = std::polar(1.0, params.angle);
    const cplx alpha = params.alpha;
    const cplx alpha_c = std::conj(alpha);
    const double alpha_sq = std::norm(alpha);

    SingleModeMoments m;
    m.mean_a = c * alpha - s * phase * alpha_c;
    m.a_squared = c * c * alpha * alpha + s * s * phase * phase * alpha_c * alpha_c -
                  c * s * phase * (2.0 * alpha_sq + 1.0);
    const cplx cross = phase * alpha_c * alpha_c + std::conj(phase) * alpha * alpha;
    m.photon_number = c * c * alpha_sq + s * s * (1.0 + alpha_sq) - c * s * cross.real();
    return m;
}

bool validate_physical(const CenteredMoments& c) {
    const double bound = c.n * (c.n + 1.0);
    return c.n >= -kPhysicalTolerance && c.v * c.v <= bound + kPhysicalTolerance * std::max(1.0, bound);
}

void require_physical(const CenteredMoments& c) {
    if (!validate_physical(c)) {
        std::ostringstream os;
        os.precision(17);
        os << "unphysical moments: v=" << c.v << " n=" << c.n
           << " (need n >= 0 and v^2 <= n(n+1))";
        throw UnphysicalMoments(os.str());
    }
}

CenteredMoments center(const SingleModeMoments& m) {
    const cplx da2 = m.a_squared - m.mean_a * m.mean_a;
    CenteredMoments c;
    c.v = std::abs(da2);
    c.theta = 0.0;
    if (c.v >= kZeroMagnitude) {
        c.theta = std::arg(da2);
        if (c.theta < 0.0) c.theta += 2.0 * M_PI;
    }
    c.n = m.photon_number - std::norm(m.mean_a);
    require_physical(c);
    return c;
}

}  // namespace ncl
