#pragma once

#include <cstddef>

#include "ncl/entanglement.hpp"
#include "ncl/moments.hpp"

namespace ncl {

struct OptimizerSettings {
    int grid_t = 33;
    int grid_phi = 64;
    int grid_theta = 64;
    int refine_iters = 40;
};

struct OptimizationResult {
    double best_value = 0.0;
    double best_t = M_SQRT1_2;
    double best_phi = 0.0;
    std::size_t evaluations = 0;
};

struct ThetaOptimizationResult : OptimizationResult {
    double best_theta = 0.0;
};

/// Number of (t, phi) points in the coarse grid: grid_t uniform t values
/// (plus t = 1/sqrt2 when absent) times grid_phi values of phi in [0, 2 pi).
std::size_t coarse_grid_size(int grid_t, int grid_phi);

/// Maximizes E_N(t, phi) over t in [0, 1], phi in [0, 2 pi).
///
/// Coarse grid first, then a shrinking-interval coordinate search around the
/// best cell (step halves every sweep, phi wraps around). Refinement is skipped
/// when the whole grid is zero. Ties within 1e-12 keep the lowest t, then the
/// lowest phi. Throws UnphysicalMoments for unphysical input and
/// std::invalid_argument for grids below 8 points.
OptimizationResult maximize_EN(const CenteredMoments& c, int grid_t, int grid_phi, int refine_iters);
OptimizationResult maximize_EN(const CenteredMoments& c, const OptimizerSettings& settings = {});

/// Outer scan over the squeezing angle theta in [0, 2 pi) (the `angle` field
/// of `params` is ignored), inner maximize_EN for each angle.
ThetaOptimizationResult maximize_EN_over_theta(const SqueezedCoherentParams& params,
                                               const OptimizerSettings& settings = {});

/// Report at the (t, phi) maximizing E_N.
NonclassicalityReport evaluate_maximized(const SingleModeMoments& m, const OptimizerSettings& settings = {});

}  // namespace ncl
