#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "ncl/entanglement.hpp"
#include "ncl/moments.hpp"

namespace ncl::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 engine_;
};

/// Uniform n in [0, n_max], v in [0, sqrt(n(n+1))], theta in [0, 2 pi).
inline CenteredMoments random_physical(Rng& rng, double n_max = 5.0) {
    CenteredMoments c;
    c.n = rng.uniform(0.0, n_max);
    c.v = std::sqrt(c.n * (c.n + 1.0)) * rng.uniform();
    c.theta = rng.uniform(0.0, 2.0 * M_PI);
    return c;
}

/// Symplectic spectrum of V (or of its partial transpose) from the eigenvalues
/// of Omega V, which come in pairs +-i nu. Independent of the determinant formula.
inline std::pair<double, double> williamson_spectrum(const Eigen::Matrix4d& v, bool partial_transpose) {
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = 1.0;
    omega(1, 0) = -1.0;
    omega(2, 3) = 1.0;
    omega(3, 2) = -1.0;
    Eigen::Matrix4d m = v;
    if (partial_transpose) {
        const Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
        m = flip.asDiagonal() * v * flip.asDiagonal();
    }
    Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * m);
    std::vector<double> nu;
    for (int i = 0; i < 4; ++i) nu.push_back(std::abs(solver.eigenvalues()(i).imag()));
    std::sort(nu.begin(), nu.end());
    return {nu[0], nu[3]};
}

}  // namespace ncl::testing
