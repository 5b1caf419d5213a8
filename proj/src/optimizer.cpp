#include "ncl/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ncl {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kStepFloor = 1e-6;
constexpr double kTwoPi = 2.0 * M_PI;

std::vector<double> transmission_grid(int grid_t) {
    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(grid_t) + 1);
    for (int i = 0; i < grid_t; ++i) {
        ts.push_back(static_cast<double>(i) / (grid_t - 1));
    }
    const auto it = std::lower_bound(ts.begin(), ts.end(), M_SQRT1_2);
    if (it == ts.end() || *it != M_SQRT1_2) ts.insert(it, M_SQRT1_2);
    return ts;
}

double wrap_angle(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0.0 ? phi + kTwoPi : phi;
}

void check_grid(int points, const char* name) {
    if (points < 8) {
        throw std::invalid_argument(std::string(name) + " grid needs at least 8 points");
    }
}

class Objective {
public:
    explicit Objective(const CenteredMoments& c) : moments_(c) {}

    double operator()(double t, double phi) {
        ++evaluations_;
        BeamSplitterParams bs;
        bs.t = t;
        bs.r = std::sqrt(std::max(0.0, 1.0 - t * t));
        bs.phi = phi;
        return entanglement_at(moments_, bs);
    }

    std::size_t evaluations() const { return evaluations_; }

private:
    CenteredMoments moments_;
    std::size_t evaluations_ = 0;
};

}  // namespace

std::size_t coarse_grid_size(int grid_t, int grid_phi) {
    return transmission_grid(grid_t).size() * static_cast<std::size_t>(grid_phi);
}

OptimizationResult maximize_EN(const CenteredMoments& c, int grid_t, int grid_phi, int refine_iters) {
    check_grid(grid_t, "t");
    check_grid(grid_phi, "phi");
    require_physical(c);

    Objective objective(c);
    const std::vector<double> ts = transmission_grid(grid_t);
    const double dphi = kTwoPi / grid_phi;

    double best = -1.0;
    double best_t = ts.front();
    double best_phi = 0.0;
    for (double t : ts) {
        for (int j = 0; j < grid_phi; ++j) {
            const double phi = j * dphi;
            const double value = objective(t, phi);
            if (value > best + kTieTolerance) {
                best = value;
                best_t = t;
                best_phi = phi;
            }
        }
    }

    if (best > 0.0) {
        double step_t = 1.0 / (grid_t - 1);
        double step_phi = dphi;
        for (int iter = 0; iter < refine_iters; ++iter) {
            if (step_t < kStepFloor && step_phi < kStepFloor) break;
            for (double cand : {best_t - step_t, best_t + step_t}) {
                cand = std::clamp(cand, 0.0, 1.0);
                if (cand == best_t) continue;
                const double value = objective(cand, best_phi);
                if (value > best + kTieTolerance) {
                    best = value;
                    best_t = cand;
                }
            }
            for (double cand : {best_phi - step_phi, best_phi + step_phi}) {
                cand = wrap_angle(cand);
                const double value = objective(best_t, cand);
                if (value > best + kTieTolerance) {
                    best = value;
                    best_phi = cand;
                }
            }
            step_t *= 0.5;
            step_phi *= 0.5;
        }
    }

    OptimizationResult result;
    result.best_value = best;
    result.best_t = best_t;
    result.best_phi = best_phi;
    result.evaluations = objective.evaluations();
    return result;
}

OptimizationResult maximize_EN(const CenteredMoments& c, const OptimizerSettings& settings) {
    return maximize_EN(c, settings.grid_t, settings.grid_phi, settings.refine_iters);
}

ThetaOptimizationResult maximize_EN_over_theta(const SqueezedCoherentParams& params,
                                               const OptimizerSettings& settings) {
    check_grid(settings.grid_theta, "theta");
    ThetaOptimizationResult overall;
    overall.best_value = -1.0;
    std::size_t evaluations = 0;
    for (int k = 0; k < settings.grid_theta; ++k) {
        SqueezedCoherentParams p = params;
        p.angle = kTwoPi * k / settings.grid_theta;
        const OptimizationResult inner = maximize_EN(center(squeezed_coherent_moments(p)), settings);
        evaluations += inner.evaluations;
        if (inner.best_value > overall.best_value + kTieTolerance) {
            static_cast<OptimizationResult&>(overall) = inner;
            overall.best_theta = p.angle;
        }
    }
    overall.evaluations = evaluations;
    return overall;
}

NonclassicalityReport evaluate_maximized(const SingleModeMoments& m, const OptimizerSettings& settings) {
    const OptimizationResult opt = maximize_EN(center(m), settings);
    BeamSplitterParams bs;
    bs.t = opt.best_t;
    bs.r = std::sqrt(std::max(0.0, 1.0 - opt.best_t * opt.best_t));
    bs.phi = opt.best_phi;
    return evaluate_fixed(m, bs);
}

}  // namespace ncl
