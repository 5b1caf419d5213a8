#include <doctest.h>

#include <cmath>

#include "ncl/optimizer.hpp"
#include "test_support.hpp"

using namespace ncl;
using doctest::Approx;

namespace {

CenteredMoments squeezed_vacuum(double r) {
    return {std::cosh(r) * std::sinh(r), M_PI, std::sinh(r) * std::sinh(r)};
}

}  // namespace

TEST_CASE("coarse grid contains the balanced splitter") {
    CHECK(coarse_grid_size(33, 64) == 34 * 64);
    CHECK(coarse_grid_size(8, 8) == 9 * 8);
}

TEST_CASE("vacuum input stays on the coarse grid") {
    const OptimizationResult res = maximize_EN(CenteredMoments{}, 33, 64, 40);
    CHECK(res.best_value == 0.0);
    CHECK(res.evaluations == coarse_grid_size(33, 64));
}

TEST_CASE("phase-symmetric input is classical") {
    const OptimizationResult res = maximize_EN({0.0, 0.0, 3.0}, 33, 64, 40);
    CHECK(res.best_value == 0.0);
}

TEST_CASE("squeezed vacuum r = 1 reaches E_N = 1 at the balanced splitter") {
    const OptimizationResult res = maximize_EN(squeezed_vacuum(1.0), 33, 64, 40);
    CHECK(std::abs(res.best_value - 1.0) <= 1e-6);
    CHECK(res.best_value <= 1.0 + 1e-9);
    CHECK(res.best_t * res.best_t == Approx(0.5).epsilon(1e-4));
}

TEST_CASE("grids below 8 points are rejected") {
    CHECK_THROWS_AS(maximize_EN(CenteredMoments{}, 7, 64, 40), std::invalid_argument);
    CHECK_THROWS_AS(maximize_EN(CenteredMoments{}, 33, 4, 40), std::invalid_argument);
    OptimizerSettings s;
    s.grid_theta = 3;
    CHECK_THROWS_AS(maximize_EN_over_theta({}, s), std::invalid_argument);
}

TEST_CASE("unphysical input is rejected") {
    CHECK_THROWS_AS(maximize_EN({2.0, 0.0, 1.0}, 33, 64, 40), UnphysicalMoments);
}

TEST_CASE("result is never below the balanced splitter value") {
    testing::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const CenteredMoments c = testing::random_physical(rng);
        const OptimizationResult res = maximize_EN(c, 16, 16, 40);
        CHECK(res.best_value >= entanglement_at(c, BeamSplitterParams::balanced()) - 1e-12);
        CHECK(res.best_t >= 0.0);
        CHECK(res.best_t <= 1.0);
        CHECK(res.best_phi >= 0.0);
        CHECK(res.best_phi < 2 * M_PI);
    }
}

TEST_CASE("runs are bit-reproducible") {
    testing::Rng rng(32);
    const CenteredMoments c = testing::random_physical(rng);
    const OptimizationResult a = maximize_EN(c);
    const OptimizationResult b = maximize_EN(c);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_t == b.best_t);
    CHECK(a.best_phi == b.best_phi);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("larger grids never lose more than 1e-9") {
    testing::Rng rng(33);
    for (int i = 0; i < 30; ++i) {
        const CenteredMoments c = testing::random_physical(rng);
        const double coarse = maximize_EN(c, 9, 8, 40).best_value;
        const double fine = maximize_EN(c, 33, 64, 40).best_value;
        const double finer = maximize_EN(c, 65, 128, 40).best_value;
        CHECK(fine >= coarse - 1e-9);
        CHECK(finer >= fine - 1e-9);
    }
}

TEST_CASE("E_N of squeezed vacuum grows with r") {
    double previous = -1.0;
    for (int i = 0; i <= 20; ++i) {
        const double value = maximize_EN(squeezed_vacuum(0.1 * i)).best_value;
        CHECK(value >= previous);
        previous = value;
    }
}

TEST_CASE("maximized E_N is positive exactly for v > n") {
    testing::Rng rng(34);
    int positive = 0;
    for (int i = 0; i < 200; ++i) {
        const CenteredMoments c = testing::random_physical(rng);
        if (std::abs(c.v - c.n) < 1e-6) continue;
        const bool nonclassical = maximize_EN(c).best_value > 1e-7;
        CHECK(nonclassical == dgcz_simple(c));
        positive += nonclassical;
    }
    CHECK(positive > 20);
}

TEST_CASE("theta scan") {
    OptimizerSettings s;
    SqueezedCoherentParams vacuum;
    CHECK(maximize_EN_over_theta(vacuum, s).best_value == 0.0);

    SqueezedCoherentParams p{cplx(0.0, 0.0), 1.0, 0.0};
    const ThetaOptimizationResult scan = maximize_EN_over_theta(p, s);
    const OptimizationResult at_zero = maximize_EN(center(squeezed_coherent_moments(p)), s);
    CHECK(scan.best_value >= at_zero.best_value);
    CHECK(std::abs(scan.best_value - at_zero.best_value) <= 2e-6);
    CHECK(scan.evaluations >= static_cast<std::size_t>(s.grid_theta) * coarse_grid_size(s.grid_t, s.grid_phi));
}

TEST_CASE("evaluate_maximized reports the optimum") {
    const double r = 0.6;
    SingleModeMoments m;
    m.a_squared = -std::cosh(r) * std::sinh(r);
    m.photon_number = std::sinh(r) * std::sinh(r);
    const NonclassicalityReport report = evaluate_maximized(m);
    CHECK(report.E_N == Approx(r).epsilon(1e-6));
    CHECK(report.E_N == log_negativity(report.eta_minus));
    CHECK(report.lambda_simon < 0.0);
}
